#include "kakimizu/theta.hpp"

#include "kakimizu/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <tuple>

namespace kakimizu {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int ThetaComponent::total_weight() const {
    int s = 0;
    for (const ThetaEdge& e : edges) s += e.weight;
    return s;
}

ThetaGraph::ThetaGraph(std::vector<ThetaComponent> components) : components_(std::move(components)) {
    std::sort(components_.begin(), components_.end(),
              [](const ThetaComponent& a, const ThetaComponent& b) { return a.id < b.id; });
    std::set<int> edge_ids;
    for (size_t i = 0; i < components_.size(); ++i) {
        const ThetaComponent& c = components_[i];
        const std::string name = "theta component " + std::to_string(c.id);
        if (i > 0 && components_[i - 1].id == c.id) throw ParseError("duplicate " + name);
        if (c.size() < 2) throw ParseError(name + " needs at least two edges");
        for (const ThetaEdge& e : c.edges) {
            if (e.weight < 0) throw ParseError(name + " has a negative weight");
            if (!edge_ids.insert(e.id).second) throw ParseError("duplicate edge id " + std::to_string(e.id));
        }
        if (c.total_weight() < 1) throw ParseError("weightless " + name);
    }
    const int nc = num_components();
    for (int i = 0; i < nc; ++i) {
        const ThetaComponent& c = components_[i];
        const Placement& p = c.placement;
        const std::string name = "theta component " + std::to_string(c.id);
        if (p.outer_face < 0 || p.outer_face >= c.size()) throw ParseError(name + ": outer_face out of range");
        if (p.parent == kSphere) continue;
        if (p.parent == c.id) throw ParseError(name + " is its own parent");
        int pi = component_index(p.parent);
        if (p.parent_face < 0 || p.parent_face >= components_[pi].size())
            throw ParseError(name + ": parent_face out of range");
    }
    for (int i = 0; i < nc; ++i) {
        int steps = 0;
        for (int cur = i; components_[cur].placement.parent != kSphere;
             cur = component_index(components_[cur].placement.parent))
            if (++steps > nc) throw ParseError("placement contains a cycle");
    }

    for (int i = 0; i < nc; ++i) {
        offset_.push_back(num_edges());
        for (int p = 0; p < components_[i].size(); ++p) {
            coord_component_.push_back(i);
            coord_position_.push_back(p);
        }
    }

    // Merge local faces: a child's outer face joins its parent face, and the
    // outer faces of all top-level components join each other.
    std::vector<std::vector<int>> node(nc);
    int nodes = 0;
    for (int i = 0; i < nc; ++i)
        for (int f = 0; f < components_[i].size(); ++f) node[i].push_back(nodes++);
    UnionFind uf(nodes);
    int first_root = -1;
    for (int i = 0; i < nc; ++i) {
        const Placement& p = components_[i].placement;
        int outer = node[i][p.outer_face];
        if (p.parent == kSphere) {
            if (first_root < 0)
                first_root = outer;
            else
                uf.unite(outer, first_root);
        } else {
            uf.unite(outer, node[component_index(p.parent)][p.parent_face]);
        }
    }
    std::map<int, std::vector<std::pair<int, int>>> classes;
    for (int i = 0; i < nc; ++i)
        for (int f = 0; f < components_[i].size(); ++f) classes[uf.find(node[i][f])].emplace_back(i, f);
    std::vector<std::vector<std::pair<int, int>>> groups;
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        groups.push_back(members);
    }
    std::sort(groups.begin(), groups.end());

    face_region_.resize(nc);
    for (int i = 0; i < nc; ++i) face_region_[i].assign(components_[i].size(), -1);
    plus_owner_.assign(num_edges(), -1);
    minus_owner_.assign(num_edges(), -1);
    for (size_t r = 0; r < groups.size(); ++r) {
        Region reg;
        reg.id = static_cast<int>(r);
        reg.faces = groups[r];
        reg.delta.assign(num_edges(), 0);
        for (auto [c, f] : reg.faces) {
            face_region_[c][f] = reg.id;
            int k = components_[c].size();
            int minus = coordinate(c, f);
            int plus = coordinate(c, (f + 1) % k);
            reg.boundary_minus.push_back(minus);
            reg.boundary_plus.push_back(plus);
            reg.delta[minus] -= 1;
            reg.delta[plus] += 1;
            minus_owner_[minus] = reg.id;
            plus_owner_[plus] = reg.id;
        }
        std::sort(reg.boundary_minus.begin(), reg.boundary_minus.end());
        std::sort(reg.boundary_plus.begin(), reg.boundary_plus.end());
        regions_.push_back(std::move(reg));
    }
    if (!empty() && num_regions() != dimension() + 1)
        throw InvariantError("region count differs from the sum of (k-1) plus one");
}

int ThetaGraph::component_index(int id) const {
    for (int i = 0; i < num_components(); ++i)
        if (components_[i].id == id) return i;
    throw ParseError("unknown theta component " + std::to_string(id));
}

std::vector<int> ThetaGraph::global_edge_order() const {
    std::vector<int> out;
    for (const ThetaComponent& c : components_)
        for (const ThetaEdge& e : c.edges) out.push_back(e.id);
    return out;
}

int ThetaGraph::coordinate_of_edge(int edge_id) const {
    for (int i = 0; i < num_components(); ++i)
        for (int p = 0; p < components_[i].size(); ++p)
            if (components_[i].edges[p].id == edge_id) return coordinate(i, p);
    throw PreconditionError("unknown theta edge " + std::to_string(edge_id));
}

std::vector<int> ThetaGraph::base_vertex() const {
    std::vector<int> v;
    for (const ThetaComponent& c : components_)
        for (const ThetaEdge& e : c.edges) v.push_back(e.weight);
    return v;
}

int ThetaGraph::dimension() const {
    int d = 0;
    for (const ThetaComponent& c : components_) d += c.size() - 1;
    return d;
}

std::vector<Region> compute_regions(const ThetaGraph& t) { return t.regions(); }

bool equivalent(const ThetaGraph& a, const ThetaGraph& b) {
    if (a.num_components() != b.num_components()) return false;
    for (int i = 0; i < a.num_components(); ++i) {
        const auto& ca = a.components()[i].edges;
        const auto& cb = b.components()[i].edges;
        if (ca.size() != cb.size()) return false;
        for (size_t p = 0; p < ca.size(); ++p)
            if (ca[p].weight != cb[p].weight) return false;
    }
    std::multiset<std::vector<int>> da, db;
    for (const Region& r : a.regions()) da.insert(r.delta);
    for (const Region& r : b.regions()) db.insert(r.delta);
    return da == db;
}

EmbeddedGraph reduce_bigons(EmbeddedGraph g) {
    for (;;) {
        FaceTrace ft = g.trace_faces();
        bool merged = false;
        for (int f = 0; f < ft.num_faces() && !merged; ++f) {
            const auto& darts = ft.darts[f];
            if (darts.size() != 2 || darts[0].edge == darts[1].edge) continue;
            int e1 = darts[0].edge, e2 = darts[1].edge;
            g.merge_parallel(std::min(e1, e2), std::max(e1, e2), ft.corners[f][0]);
            merged = true;
        }
        if (!merged) return g;
    }
}

EmbeddedGraph augment_flype_arcs(EmbeddedGraph g, std::optional<uint64_t> seed) {
    std::mt19937_64 rng(seed.value_or(0));
    for (;;) {
        FaceTrace ft = g.trace_faces();
        std::set<std::pair<int, int>> adjacent;
        for (int id : g.edge_ids()) {
            const GraphEdge& e = g.edge(id);
            adjacent.emplace(std::min(e.a, e.b), std::max(e.a, e.b));
        }
        std::vector<std::tuple<int, int, int>> candidates;
        for (int f = 0; f < ft.num_faces(); ++f) {
            const auto& corners = ft.corners[f];
            const int len = static_cast<int>(corners.size());
            for (int i = 0; i < len; ++i)
                for (int j = i + 2; j < len; ++j) {
                    if (len - (j - i) < 2) continue;
                    int x = corners[i].vertex, y = corners[j].vertex;
                    if (x == y || !adjacent.count({std::min(x, y), std::max(x, y)})) continue;
                    candidates.emplace_back(f, i, j);
                }
        }
        if (candidates.empty()) return g;
        size_t pick = 0;
        if (seed) pick = std::uniform_int_distribution<size_t>(0, candidates.size() - 1)(rng);
        auto [f, i, j] = candidates[pick];
        g.insert_edge(ft.corners[f][i], ft.corners[f][j], 0);
    }
}

std::vector<std::vector<std::pair<int, int>>> rotation_signature(const EmbeddedGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::pair<int, int>> seq;
        for (const HalfEdge& h : g.rotation(v)) {
            const GraphEdge& e = g.edge(h.edge);
            seq.emplace_back(e.endpoint(1 - h.end), e.weight);
        }
        auto best = seq;
        for (size_t r = 1; r < seq.size(); ++r) {
            std::rotate(seq.begin(), seq.begin() + 1, seq.end());
            best = std::min(best, seq);
        }
        out.push_back(std::move(best));
    }
    return out;
}

ThetaExtraction extract_theta_detailed(const EmbeddedGraph& f) {
    const FaceTrace ft = f.trace_faces();
    const int nf = ft.num_faces();

    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int id : f.edge_ids()) {
        const GraphEdge& e = f.edge(id);
        if (e.is_loop()) continue;
        groups[{std::min(e.a, e.b), std::max(e.a, e.b)}].push_back(id);
    }

    struct Raw {
        std::pair<int, int> pair;
        std::vector<int> edges;
        int total = 0;
    };
    std::vector<Raw> raws;
    for (auto& [pair, ids] : groups) {
        if (ids.size() < 2) continue;
        const int u = pair.first;
        std::set<int> members(ids.begin(), ids.end());
        std::vector<int> order;
        for (const HalfEdge& h : f.rotation(u))
            if (members.count(h.edge)) order.push_back(h.edge);
        if (f.orientation(u) == Orientation::None) throw InvariantError("theta vertex without orientation");
        if (f.orientation(u) == Orientation::Cw) std::reverse(order.begin(), order.end());
        auto start = std::min_element(order.begin(), order.end(), [&](int a, int b) {
            int wa = f.edge(a).weight, wb = f.edge(b).weight;
            return wa != wb ? wa > wb : a < b;
        });
        std::rotate(order.begin(), start, order.end());
        Raw r;
        r.pair = pair;
        r.edges = std::move(order);
        for (int id : r.edges) r.total += f.edge(id).weight;
        raws.push_back(std::move(r));
    }
    std::sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) {
        return std::make_tuple(a.edges.size(), a.total, a.pair) < std::make_tuple(b.edges.size(), b.total, b.pair);
    });
    const int nc = static_cast<int>(raws.size());

    ThetaExtraction out;
    std::vector<int> comp_of_edge(f.edge_capacity(), -1);
    for (int c = 0; c < nc; ++c) {
        out.component_edges.push_back(raws[c].edges);
        for (int id : raws[c].edges) comp_of_edge[id] = c;
    }

    auto sides = [&](int id) {
        const GraphEdge& e = f.edge(id);
        int fa = ft.face_at_corner[e.a][f.slot_of(HalfEdge{id, 0})];
        int fb = ft.face_at_corner[e.b][f.slot_of(HalfEdge{id, 1})];
        return std::make_pair(fa, fb);
    };

    // Local faces of each component: flood fill across every other edge.
    std::vector<std::vector<int>> dual(nf);
    std::vector<std::pair<int, int>> edge_sides(f.edge_capacity(), {-1, -1});
    for (int id : f.edge_ids()) edge_sides[id] = sides(id);
    out.local_face.assign(nc, std::vector<int>(nf, -1));
    for (int c = 0; c < nc; ++c) {
        for (auto& adj : dual) adj.clear();
        for (int id : f.edge_ids()) {
            if (comp_of_edge[id] == c) continue;
            auto [a, b] = edge_sides[id];
            dual[a].push_back(b);
            dual[b].push_back(a);
        }
        auto& label = out.local_face[c];
        for (int t = 0; t < static_cast<int>(raws[c].edges.size()); ++t) {
            int seed = f.positive_side(raws[c].edges[t], ft);
            if (label[seed] == t) continue;
            if (label[seed] >= 0) throw InvariantError("local faces of a theta component collide");
            label[seed] = t;
            std::queue<int> q;
            q.push(seed);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : dual[x]) {
                    if (label[y] == t) continue;
                    if (label[y] >= 0) throw InvariantError("local faces of a theta component collide");
                    label[y] = t;
                    q.push(y);
                }
            }
        }
        if (std::count(label.begin(), label.end(), -1) != 0)
            throw InvariantError("face outside every local face of a theta component");
    }

    auto local_of_component = [&](int c, int d) {
        int l = -1;
        for (int id : raws[d].edges) {
            auto [a, b] = edge_sides[id];
            for (int x : {a, b}) {
                if (l >= 0 && out.local_face[c][x] != l)
                    throw InvariantError("theta component straddles a local face");
                l = out.local_face[c][x];
            }
        }
        return l;
    };
    const int base_face = 0;
    std::vector<int> outer(nc);
    for (int c = 0; c < nc; ++c) outer[c] = out.local_face[c][base_face];
    std::vector<std::vector<bool>> contains(nc, std::vector<bool>(nc, false));
    std::vector<std::vector<int>> where(nc, std::vector<int>(nc, -1));
    for (int c = 0; c < nc; ++c)
        for (int d = 0; d < nc; ++d) {
            if (c == d) continue;
            where[c][d] = local_of_component(c, d);
            contains[c][d] = where[c][d] != outer[c];
        }
    std::vector<int> depth(nc, 0);
    for (int d = 0; d < nc; ++d)
        for (int c = 0; c < nc; ++c) depth[d] += contains[c][d] ? 1 : 0;

    std::vector<ThetaComponent> comps;
    int next_edge_id = 1;
    for (int d = 0; d < nc; ++d) {
        ThetaComponent tc;
        tc.id = d;
        tc.vertices = raws[d].pair;
        for (int id : raws[d].edges) tc.edges.push_back(ThetaEdge{next_edge_id++, f.edge(id).weight});
        tc.placement.outer_face = outer[d];
        int parent = -1;
        for (int c = 0; c < nc; ++c)
            if (contains[c][d] && (parent < 0 || depth[c] > depth[parent])) parent = c;
        if (parent >= 0) {
            tc.placement.parent = parent;
            tc.placement.parent_face = where[parent][d];
        }
        comps.push_back(std::move(tc));
    }
    out.theta = ThetaGraph(std::move(comps));

    // Regions from the geometry of F(D): faces joined across edges outside the
    // theta graph and across vertices that cutting apart separates.
    UnionFind uf(nf);
    for (int id : f.edge_ids())
        if (comp_of_edge[id] < 0) uf.unite(edge_sides[id].first, edge_sides[id].second);
    for (int x = 0; x < f.num_vertices(); ++x) {
        const auto& rot = f.rotation(x);
        const int deg = static_cast<int>(rot.size());
        std::set<int> here;
        for (const HalfEdge& h : rot)
            if (comp_of_edge[h.edge] >= 0) here.insert(comp_of_edge[h.edge]);
        if (here.empty()) continue;
        std::map<std::vector<int>, int> first_with_key;
        for (int i = 0; i < deg; ++i) {
            std::vector<int> key;
            for (int c : here) {
                int k = i;
                while (comp_of_edge[rot[k].edge] != c) k = (k - 1 + deg) % deg;
                key.push_back(k);
            }
            int face = ft.face_at_corner[x][i];
            auto [it, fresh] = first_with_key.emplace(key, face);
            if (!fresh) uf.unite(face, it->second);
        }
    }
    std::map<int, int> class_region;
    for (int c = 0; c < nc; ++c)
        for (int t = 0; t < static_cast<int>(raws[c].edges.size()); ++t) {
            int cls = uf.find(f.positive_side(raws[c].edges[t], ft));
            int reg = out.theta.region_of(c, t);
            auto [it, fresh] = class_region.emplace(cls, reg);
            if (!fresh && it->second != reg)
                throw InvariantError("placement regions disagree with the embedding");
        }
    out.face_region.assign(nf, -1);
    if (nc > 0) {
        for (int x = 0; x < nf; ++x) {
            auto it = class_region.find(uf.find(x));
            if (it == class_region.end()) throw InvariantError("face outside every theta region");
            out.face_region[x] = it->second;
        }
        if (static_cast<int>(class_region.size()) != out.theta.num_regions())
            throw InvariantError("placement regions disagree with the embedding");
    }
    return out;
}

ThetaGraph extract_theta(const EmbeddedGraph& f) { return extract_theta_detailed(f).theta; }

ThetaPipeline theta_pipeline(const Diagram& d) {
    ThetaPipeline p;
    p.black = black_region_graph(d);
    p.reduced = reduce_bigons(p.black);
    p.augmented = augment_flype_arcs(p.reduced);
    p.extraction = extract_theta_detailed(p.augmented);
    return p;
}

} // namespace kakimizu
