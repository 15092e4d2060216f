#pragma once

#include "kakimizu/theta.hpp"

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace kakimizu {

/// A vertex of K: one nonnegative weight per theta edge, in global edge order.
using WeightVector = std::vector<int>;

/// A set of regions with the summed delta vector.
struct RegionSet {
    std::vector<int> regions; ///< sorted region ids
    std::vector<int> delta;

    bool contains(int region) const;
};

RegionSet make_region_set(const ThetaGraph& t, std::vector<int> regions);

/// Strict order on the adjacent vertex pairs of a complex.
class VertexOrder {
public:
    void add(int lower, int upper) { less_.insert(key(lower, upper)); }
    bool precedes(int u, int v) const { return less_.count(key(u, v)) > 0; }
    size_t size() const { return less_.size(); }
    /// All (lower, upper) pairs, sorted.
    std::vector<std::pair<int, int>> pairs() const;

private:
    static uint64_t key(int u, int v) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
    }
    std::unordered_set<uint64_t> less_;
};

/// Vertex labels plus maximal simplices.
///
/// Maximal simplices are sorted lists of vertex indices, themselves sorted.
struct SimplicialComplex {
    /// Coordinate names of vertex labels (theta edge ids) when labels are weight vectors.
    std::vector<int> edge_order;
    std::vector<std::vector<int>> vertices;
    std::vector<std::vector<int>> maximal_simplices;
    std::optional<VertexOrder> order;
    std::optional<int> order_region;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int dimension() const;
    bool is_pure() const;
    /// Index of a vertex label, or -1.
    int index_of(const std::vector<int>& label) const;
    /// Puts every maximal simplex and the simplex list in canonical order.
    void canonicalize();
};

WeightVector base_vertex(const ThetaGraph& t);

/// All weight vectors with the component totals of `t`, sorted lexicographically.
std::vector<WeightVector> enumerate_vertices(const ThetaGraph& t);

/// Adds one to the boundary_plus weights and subtracts one on boundary_minus.
/// Empty when a boundary_minus weight is zero.
std::optional<WeightVector> region_add(const WeightVector& v, const Region& r);

/// Solves the membership constraints for a difference vector with entries in
/// {-1, 0, 1}: the nonempty proper region set A with ΣA = delta, if unique.
std::optional<RegionSet> region_set_for_delta(const std::vector<int>& delta, const ThetaGraph& t);

/// The unique region set A with v = u + ΣA, when u and v span an edge of K.
std::optional<RegionSet> adjacency(const WeightVector& u, const WeightVector& v, const ThetaGraph& t);

/// Greedy order: repeatedly the lowest region id whose addition is defined.
/// Throws InvariantError when no region can be added.
std::vector<int> order_regions(const RegionSet& a, const WeightVector& u, const ThetaGraph& t);

/// K(θ): 1-skeleton from pairwise adjacency, simplices from maximal cliques.
SimplicialComplex build_complex(const ThetaGraph& t);

/// Vertex sets of the cycles u, u + r_1, ..., u + r_1 + ... + r_m = u that add every
/// region once, deduplicated and canonically ordered. Exponential in the region count;
/// an independent definition of the maximal simplices of K(t) for cross-checks.
std::vector<std::vector<int>> cycle_simplices(const ThetaGraph& t, const SimplicialComplex& c);

/// Maximal cliques of a graph given by sorted adjacency lists, canonically ordered.
std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<int>>& adjacency);

/// Sorted adjacency lists of the 1-skeleton.
std::vector<std::vector<int>> one_skeleton(const SimplicialComplex& c);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> distances_from(const SimplicialComplex& c, int source);
/// Throws InvariantError when the vertices lie in different components.
int distance(const SimplicialComplex& c, int u, int v);

/// u < v on each edge exactly when the region set carrying u to v omits `region`.
VertexOrder order_vertices(const SimplicialComplex& c, const ThetaGraph& t, int region);

struct OrderAudit {
    bool antisymmetric = true;
    bool adjacent_comparable = true; ///< comparable exactly on edges
    bool transitive = true; ///< on every 2-simplex

    bool ok() const { return antisymmetric && adjacent_comparable && transitive; }
};

OrderAudit audit_order(const SimplicialComplex& c, const VertexOrder& order);

} // namespace kakimizu
