#pragma once

#include "kakimizu/complex.hpp"
#include "kakimizu/theta.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kakimizu {

/// An m x (l+1) matrix over {0..n} read row by row in weakly increasing
/// order, with pairwise distinct columns.
struct ColourScheme {
    int n = 0;
    std::vector<std::vector<int>> rows;

    int m() const { return static_cast<int>(rows.size()); }
    int columns() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    std::vector<int> column(int k) const;
    bool valid() const;
};

/// All colour schemes with l = n, in lexicographic order of the reading sequence.
std::vector<ColourScheme> colour_schemes(int n, int m);

/// esd_m(Δⁿ). Vertices are weakly increasing columns of length m, sorted.
SimplicialComplex esd(int n, int m);

/// Column of the B map: symbol j repeated weights[j] times.
std::vector<int> esd_column(const std::vector<int>& weights);
/// Inverse of esd_column for a column over {0..n}.
std::vector<int> esd_weights(const std::vector<int>& column, int n);

/// B as a vertex map from K(t) to esd(n, m) for a single-component t.
/// Throws PreconditionError for other inputs.
std::vector<int> theta_to_esd_map(const ThetaGraph& t, const SimplicialComplex& k, const SimplicialComplex& e);

/// True iff f is a bijection on vertices carrying maximal simplices bijectively.
bool verify_iso(const SimplicialComplex& c1, const SimplicialComplex& c2, const std::vector<int>& f);

/// Vertex map matching equal labels; entries are -1 where c2 has no such label.
std::vector<int> label_map(const SimplicialComplex& c1, const SimplicialComplex& c2);

/// Product of ordered complexes. Vertex (i, j) gets index i * |V2| + j and the
/// concatenated label; the result carries the product order.
/// Throws PreconditionError when either order fails its audit.
SimplicialComplex ordered_product(const SimplicialComplex& c1, const SimplicialComplex& c2);

/// Restriction of t to a subset of component ids, placed by nearest kept ancestor.
ThetaGraph sub_theta(const ThetaGraph& t, const std::vector<int>& component_ids);

/// Region of `sub` (built by sub_theta) containing the given faces of the parent graph.
int sub_region(const ThetaGraph& t, const ThetaGraph& sub, int region);

/// One step of the product decomposition.
struct ThetaSplit {
    int region = -1; ///< region of t meeting both halves
    ThetaGraph first;
    ThetaGraph second;
    int first_region = -1;
    int second_region = -1;
};

/// Splits along a curve in the lowest region meeting two components.
/// Throws PreconditionError when t has fewer than two components.
ThetaSplit split_theta(const ThetaGraph& t);

/// Builds K(t) as iterated ordered products of per-component edgewise
/// subdivisions, relabelled to weight vectors in t's coordinate order and
/// ordered at `region`. Does not call build_complex.
SimplicialComplex product_model(const ThetaGraph& t, int region);

struct HomologyReport {
    std::vector<int64_t> f_vector;
    std::vector<int> reduced_betti;
    std::vector<std::vector<std::string>> torsion; ///< invariant factors > 1, per dimension
    int64_t euler_characteristic = 0;
    bool boundary_squares_to_zero = true;

    bool reduced_trivial() const;
};

/// All faces of the complex, grouped by dimension and sorted.
std::vector<std::vector<std::vector<int>>> all_faces(const SimplicialComplex& c);

HomologyReport homology(const SimplicialComplex& c);

/// Invariant factors (absolute values, including ones) of an integer matrix
/// given as sparse rows of (column, value).
std::vector<std::string> smith_invariants(int rows, int cols,
                                          const std::vector<std::vector<std::pair<int, int64_t>>>& entries);

struct BallReport {
    int dimension = 0;
    int expected_dimension = 0;
    bool dimension_matches = false;
    bool pure = false;
    bool homology_trivial = false;
    int64_t euler_characteristic = 0;
    int regions = 0;
    bool regions_match = false;

    bool ok() const { return dimension_matches && pure && homology_trivial && euler_characteristic == 1 && regions_match; }
};

BallReport ball_report(const ThetaGraph& t, const SimplicialComplex& c);

} // namespace kakimizu
