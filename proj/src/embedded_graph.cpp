#include "kakimizu/embedded_graph.hpp"

#include "kakimizu/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace kakimizu {

EmbeddedGraph::EmbeddedGraph(int vertices)
    : rotation_(vertices), orientation_(vertices, Orientation::None) {}

int EmbeddedGraph::add_vertex(Orientation o) {
    rotation_.emplace_back();
    orientation_.push_back(o);
    return num_vertices() - 1;
}

void EmbeddedGraph::check_vertex(int v) const {
    if (v < 0 || v >= num_vertices())
        throw InvariantError("vertex " + std::to_string(v) + " out of range");
}

int EmbeddedGraph::add_edge(int a, int b, int weight, std::vector<int> crossings) {
    check_vertex(a);
    check_vertex(b);
    GraphEdge e;
    e.id = static_cast<int>(edges_.size());
    e.a = a;
    e.b = b;
    e.weight = weight;
    e.crossings = std::move(crossings);
    edges_.push_back(std::move(e));
    return edges_.back().id;
}

void EmbeddedGraph::set_rotation(int v, std::vector<HalfEdge> order) {
    check_vertex(v);
    for (const HalfEdge& h : order)
        if (vertex_of(h) != v)
            throw InvariantError("rotation at vertex " + std::to_string(v) +
                                 " lists a half-edge of another vertex");
    rotation_[v] = std::move(order);
}

int EmbeddedGraph::num_edges() const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                          [](const GraphEdge& e) { return !e.removed; }));
}

std::vector<int> EmbeddedGraph::edge_ids() const {
    std::vector<int> ids;
    for (const GraphEdge& e : edges_)
        if (!e.removed) ids.push_back(e.id);
    return ids;
}

int EmbeddedGraph::slot_of(HalfEdge h) const {
    const auto& rot = rotation_.at(vertex_of(h));
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == h) return static_cast<int>(i);
    throw InvariantError("half-edge of edge " + std::to_string(h.edge) + " missing from rotation");
}

int EmbeddedGraph::insert_edge(Corner ca, Corner cb, int weight) {
    if (ca.vertex == cb.vertex) throw InvariantError("insert_edge needs distinct endpoints");
    int id = add_edge(ca.vertex, cb.vertex, weight);
    auto& ra = rotation_[ca.vertex];
    ra.insert(ra.begin() + (ca.index + 1), HalfEdge{id, 0});
    auto& rb = rotation_[cb.vertex];
    rb.insert(rb.begin() + (cb.index + 1), HalfEdge{id, 1});
    return id;
}

void EmbeddedGraph::merge_parallel(int survivor, int loser, Corner bigon) {
    GraphEdge& s = edges_.at(survivor);
    GraphEdge& l = edges_.at(loser);
    if (s.removed || l.removed || survivor == loser)
        throw InvariantError("merge_parallel on removed or identical edges");
    bool same = (s.a == l.a && s.b == l.b) || (s.a == l.b && s.b == l.a);
    if (!same || s.is_loop()) throw InvariantError("merge_parallel on non-parallel edges");

    const int at = bigon.vertex;
    const auto& rot = rotation_.at(at);
    const int deg = static_cast<int>(rot.size());
    const int first = rot.at(bigon.index).edge;
    const int second = rot.at((bigon.index + 1) % deg).edge;
    if (!((first == survivor && second == loser) || (first == loser && second == survivor)))
        throw InvariantError("bigon corner does not separate the merged edges");

    auto ccw_at = [at](const GraphEdge& e) {
        std::vector<int> c = e.crossings;
        if (e.a != at) std::reverse(c.begin(), c.end());
        return c;
    };
    std::vector<int> merged = ccw_at(edges_[first]);
    std::vector<int> tail = ccw_at(edges_[second]);
    merged.insert(merged.end(), tail.begin(), tail.end());
    if (s.a != at) std::reverse(merged.begin(), merged.end());

    s.crossings = std::move(merged);
    s.weight += l.weight;
    l.removed = true;
    l.crossings.clear();
    for (int v : {l.a, l.b}) {
        auto& r = rotation_[v];
        r.erase(std::remove_if(r.begin(), r.end(), [&](const HalfEdge& h) { return h.edge == loser; }),
                r.end());
    }
}

FaceTrace EmbeddedGraph::trace_faces() const {
    FaceTrace ft;
    const int n = num_vertices();
    ft.face_at_corner.resize(n);
    for (int v = 0; v < n; ++v) ft.face_at_corner[v].assign(rotation_[v].size(), -1);

    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < degree(v); ++i) {
            if (ft.face_at_corner[v][i] >= 0) continue;
            const int fid = ft.num_faces();
            ft.darts.emplace_back();
            ft.corners.emplace_back();
            int x = v, k = i;
            while (ft.face_at_corner[x][k] < 0) {
                ft.face_at_corner[x][k] = fid;
                HalfEdge h = rotation_[x][k];
                ft.darts.back().push_back(h);
                ft.corners.back().push_back(Corner{x, k});
                HalfEdge other{h.edge, 1 - h.end};
                int y = vertex_of(other);
                int j = slot_of(other);
                int deg = degree(y);
                x = y;
                k = (j - 1 + deg) % deg;
            }
            if (x != v || k != i) throw InvariantError("face walk did not close");
        }
    }
    ft.components = count_components();
    return ft;
}

int EmbeddedGraph::count_components() const {
    const int n = num_vertices();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = n;
    for (const GraphEdge& e : edges_) {
        if (e.removed) continue;
        int ra = find(e.a), rb = find(e.b);
        if (ra != rb) {
            parent[ra] = rb;
            --comps;
        }
    }
    return comps;
}

bool EmbeddedGraph::is_spherical(const FaceTrace& ft) const {
    int isolated = 0;
    for (int v = 0; v < num_vertices(); ++v)
        if (degree(v) == 0) ++isolated;
    return ft.num_faces() + isolated == num_edges() - num_vertices() + 2 * ft.components;
}

int EmbeddedGraph::positive_side(int id, const FaceTrace& ft) const {
    const GraphEdge& e = edges_.at(id);
    for (int end : {0, 1}) {
        int v = e.endpoint(end);
        Orientation o = orientation_.at(v);
        if (o == Orientation::None) continue;
        // Normals point in the rotation direction of the vertex: the sector after
        // the edge at a counterclockwise vertex, the sector before it otherwise.
        int i = slot_of(HalfEdge{id, end});
        int deg = degree(v);
        int corner = (o == Orientation::Ccw) ? i : (i - 1 + deg) % deg;
        return ft.face_at_corner[v][corner];
    }
    throw PreconditionError("edge " + std::to_string(id) + " has no oriented endpoint");
}

int EmbeddedGraph::negative_side(int id, const FaceTrace& ft) const {
    const GraphEdge& e = edges_.at(id);
    for (int end : {0, 1}) {
        int v = e.endpoint(end);
        Orientation o = orientation_.at(v);
        if (o == Orientation::None) continue;
        int i = slot_of(HalfEdge{id, end});
        int deg = degree(v);
        int corner = (o == Orientation::Ccw) ? (i - 1 + deg) % deg : i;
        return ft.face_at_corner[v][corner];
    }
    throw PreconditionError("edge " + std::to_string(id) + " has no oriented endpoint");
}

} // namespace kakimizu
