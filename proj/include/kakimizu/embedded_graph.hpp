#pragma once

#include <cstdint>
#include <vector>

namespace kakimizu {

/// Orientation of a vertex of the black-region graph, inherited from the
/// Seifert circle around it.
enum class Orientation : int8_t { Cw = -1, None = 0, Ccw = 1 };

/// One end of an edge: `end == 0` sits at `GraphEdge::a`, `end == 1` at `GraphEdge::b`.
struct HalfEdge {
    int edge = -1;
    int end = 0;
    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

struct GraphEdge {
    int id = -1;
    int a = -1;
    int b = -1;
    int weight = 1;
    /// Diagram crossings carried by this edge, ordered counterclockwise about `a`.
    std::vector<int> crossings;
    bool removed = false;

    int endpoint(int end) const { return end == 0 ? a : b; }
    bool is_loop() const { return a == b; }
};

/// Sector at `vertex` between rotation slots `index` and `index + 1`.
struct Corner {
    int vertex = -1;
    int index = -1;
};

/// Result of tracing the faces of an embedded graph.
///
/// A dart is a half-edge leaving its vertex. The face of a dart lies on its
/// left, so walks run counterclockwise around bounded faces.
struct FaceTrace {
    std::vector<std::vector<HalfEdge>> darts;
    std::vector<std::vector<Corner>> corners;
    /// face_at_corner[v][i]: face containing the sector after rotation slot i at v.
    std::vector<std::vector<int>> face_at_corner;
    int components = 0;

    int num_faces() const { return static_cast<int>(darts.size()); }
};

/// Planar multigraph with a rotation system (counterclockwise edge order per vertex).
///
/// Edge ids are stable: removing an edge marks it and keeps the slot.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;
    explicit EmbeddedGraph(int vertices);

    int add_vertex(Orientation o = Orientation::None);
    /// Adds an edge without placing it in any rotation; callers then call set_rotation.
    int add_edge(int a, int b, int weight = 1, std::vector<int> crossings = {});
    void set_rotation(int v, std::vector<HalfEdge> order);
    void set_orientation(int v, Orientation o) { orientation_.at(v) = o; }

    /// Inserts a new edge into the sectors `ca` and `cb` (distinct vertices).
    int insert_edge(Corner ca, Corner cb, int weight = 0);
    /// Removes `loser` and folds its weight and crossings into `survivor`.
    /// `bigon` is the sector at one endpoint lying between the two parallel edges.
    void merge_parallel(int survivor, int loser, Corner bigon);

    int num_vertices() const { return static_cast<int>(rotation_.size()); }
    int num_edges() const;
    std::vector<int> edge_ids() const;
    const GraphEdge& edge(int id) const { return edges_.at(id); }
    int edge_capacity() const { return static_cast<int>(edges_.size()); }
    const std::vector<HalfEdge>& rotation(int v) const { return rotation_.at(v); }
    Orientation orientation(int v) const { return orientation_.at(v); }
    int degree(int v) const { return static_cast<int>(rotation_.at(v).size()); }

    /// Vertex at which the half-edge sits.
    int vertex_of(HalfEdge h) const { return edges_.at(h.edge).endpoint(h.end); }
    /// Index of `h` in its vertex rotation.
    int slot_of(HalfEdge h) const;

    FaceTrace trace_faces() const;
    int count_components() const;
    /// True when the traced face count matches a sphere embedding per component.
    bool is_spherical(const FaceTrace& ft) const;

    /// Face on the positive side of an edge, following the orientation of endpoint `a`.
    int positive_side(int edge, const FaceTrace& ft) const;
    /// Face on the negative side.
    int negative_side(int edge, const FaceTrace& ft) const;

private:
    void check_vertex(int v) const;

    std::vector<GraphEdge> edges_;
    std::vector<std::vector<HalfEdge>> rotation_;
    std::vector<Orientation> orientation_;
};

} // namespace kakimizu
