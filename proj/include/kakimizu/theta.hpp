#pragma once

#include "kakimizu/diagram.hpp"
#include "kakimizu/embedded_graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kakimizu {

inline constexpr int kSphere = -1;

struct ThetaEdge {
    int id = 0;
    int weight = 0;
};

/// Where a component sits: inside local face `parent_face` of component
/// `parent` (or directly on the sphere), with `outer_face` the local face of
/// this component that contains its parent.
struct Placement {
    int parent = kSphere;
    int parent_face = 0;
    int outer_face = 0;
};

struct ThetaComponent {
    int id = 0;
    /// Vertices of F(D) joined by the component, when derived from a diagram.
    std::pair<int, int> vertices{-1, -1};
    /// Edges in positive cyclic order. Local face i lies between edges i and i+1.
    std::vector<ThetaEdge> edges;
    Placement placement;

    int size() const { return static_cast<int>(edges.size()); }
    int total_weight() const;
};

/// A region of the cut-apart theta graph.
///
/// `boundary_plus` holds edges the region meets only on their negative side
/// (weight rises by one when the region is added), `boundary_minus` the reverse.
struct Region {
    int id = 0;
    std::vector<std::pair<int, int>> faces; ///< (component index, local face)
    std::vector<int> boundary_plus;         ///< coordinates
    std::vector<int> boundary_minus;        ///< coordinates
    std::vector<int> delta;                 ///< one entry per coordinate
};

/// The union of theta components of F(D), with weights and placement.
///
/// Coordinates of weight vectors follow the global edge order: components
/// sorted by id, edges in positive cyclic order.
class ThetaGraph {
public:
    ThetaGraph() = default;
    /// Validates every invariant and computes the regions.
    explicit ThetaGraph(std::vector<ThetaComponent> components);

    const std::vector<ThetaComponent>& components() const { return components_; }
    int num_components() const { return static_cast<int>(components_.size()); }
    int num_edges() const { return static_cast<int>(coord_component_.size()); }
    bool empty() const { return components_.empty(); }

    std::vector<int> global_edge_order() const;
    int component_of_coordinate(int coord) const { return coord_component_.at(coord); }
    int position_of_coordinate(int coord) const { return coord_position_.at(coord); }
    int coordinate(int component, int position) const { return offset_.at(component) + position; }
    int coordinate_of_edge(int edge_id) const;
    int component_index(int id) const;

    const std::vector<Region>& regions() const { return regions_; }
    int num_regions() const { return static_cast<int>(regions_.size()); }
    /// Region containing local face `face` of component index `component`.
    int region_of(int component, int face) const { return face_region_.at(component).at(face); }
    /// Region meeting coordinate `coord` on its negative side (coord in its boundary_plus).
    int plus_owner(int coord) const { return plus_owner_.at(coord); }
    /// Region meeting coordinate `coord` on its positive side (coord in its boundary_minus).
    int minus_owner(int coord) const { return minus_owner_.at(coord); }

    std::vector<int> base_vertex() const;
    /// Sum of Σ(k_i - 1): the dimension of K.
    int dimension() const;

private:
    std::vector<ThetaComponent> components_;
    std::vector<int> offset_;
    std::vector<int> coord_component_;
    std::vector<int> coord_position_;
    std::vector<Region> regions_;
    std::vector<std::vector<int>> face_region_;
    std::vector<int> plus_owner_;
    std::vector<int> minus_owner_;
};

/// Regions per the placement merge rule; exposed for tests.
std::vector<Region> compute_regions(const ThetaGraph& t);

/// Same components, weights, cyclic orders and region deltas.
bool equivalent(const ThetaGraph& a, const ThetaGraph& b);

/// Removes one edge of each bigon face until none remain.
EmbeddedGraph reduce_bigons(EmbeddedGraph g);

/// Adds weight-0 edges parallel to existing ones through faces, as long as no
/// bigon face appears. Without a seed candidates are taken in (face, corner)
/// order; with a seed they are picked at random.
EmbeddedGraph augment_flype_arcs(EmbeddedGraph g, std::optional<uint64_t> seed = std::nullopt);

/// Canonical form of an embedded graph with fixed vertex labels: per vertex,
/// the least rotation of its cyclic (neighbour, weight) sequence.
std::vector<std::vector<std::pair<int, int>>> rotation_signature(const EmbeddedGraph& g);

/// Theta graph of F(D) together with how it sits in F(D).
struct ThetaExtraction {
    ThetaGraph theta;
    /// F(D) edge ids per component, in positive cyclic order.
    std::vector<std::vector<int>> component_edges;
    /// local_face[c][f]: local face of component c containing F(D) face f.
    std::vector<std::vector<int>> local_face;
    /// Region of each F(D) face, from the cut-apart geometry.
    std::vector<int> face_region;
};

ThetaExtraction extract_theta_detailed(const EmbeddedGraph& f);
ThetaGraph extract_theta(const EmbeddedGraph& f);

/// Every stage of the pipeline from a diagram to its theta graph.
struct ThetaPipeline {
    EmbeddedGraph black;
    EmbeddedGraph reduced;
    EmbeddedGraph augmented;
    ThetaExtraction extraction;

    const ThetaGraph& theta() const { return extraction.theta; }
};

ThetaPipeline theta_pipeline(const Diagram& d);

ThetaGraph parse_theta(const std::string& text);
std::string theta_to_json(const ThetaGraph& t);

} // namespace kakimizu
