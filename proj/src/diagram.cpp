#include "kakimizu/diagram.hpp"

#include "kakimizu/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

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

bool Diagram::is_incoming(int crossing, int slot) const {
    switch (slot) {
    case 0: return true;
    case 2: return false;
    case 1: return over_forward(crossing);
    case 3: return !over_forward(crossing);
    default: throw InvariantError("slot out of range");
    }
}

int Diagram::through_slot(int crossing, int in_slot) const {
    if (!is_incoming(crossing, in_slot)) throw InvariantError("through_slot from an outgoing slot");
    return (in_slot + 2) % 4;
}

int Diagram::smoothing_slot(int crossing, int in_slot) const {
    if (!is_incoming(crossing, in_slot)) throw InvariantError("smoothing_slot from an outgoing slot");
    if (in_slot == 0) return over_forward(crossing) ? 3 : 1;
    return 2;
}

Diagram Diagram::from_pd(std::vector<PdCrossing> crossings) {
    if (crossings.empty()) throw ParseError("no crossings");
    const int n = static_cast<int>(crossings.size());

    std::set<int> ids;
    std::map<int, int> count;
    for (const PdCrossing& c : crossings) {
        if (!ids.insert(c.id).second) throw ParseError("duplicate crossing id " + std::to_string(c.id));
        for (int l : c.pd) ++count[l];
    }
    for (auto [label, k] : count)
        if (k != 2)
            throw ParseError("label multiplicity: label " + std::to_string(label) + " appears " +
                             std::to_string(k) + " times");
    std::map<int, int> rank;
    for (auto& [label, k] : count) rank[label] = static_cast<int>(rank.size()) + 1;
    for (PdCrossing& c : crossings)
        for (int& l : c.pd) l = rank[l];

    const int edges = 2 * n;
    UnionFind uf(edges);
    for (const PdCrossing& c : crossings) {
        uf.unite(c.pd[0] - 1, c.pd[2] - 1);
        uf.unite(c.pd[1] - 1, c.pd[3] - 1);
    }
    std::vector<int> lo(edges, edges), hi(edges, -1), size(edges, 0);
    for (int e = 0; e < edges; ++e) {
        int r = uf.find(e);
        lo[r] = std::min(lo[r], e);
        hi[r] = std::max(hi[r], e);
        ++size[r];
    }
    for (int e = 0; e < edges; ++e)
        if (size[e] > 0 && hi[e] - lo[e] + 1 != size[e])
            throw ParseError("labels are not consecutive along a link component");
    auto succ = [&](int label) {
        int r = uf.find(label - 1);
        return label - 1 == hi[r] ? lo[r] + 1 : label + 1;
    };

    Diagram d;
    d.over_forward_.assign(n, true);
    std::vector<int> heads(edges, 0), tails(edges, 0);
    std::vector<int> pending;
    for (int i = 0; i < n; ++i) {
        const auto& pd = crossings[i].pd;
        if (pd[2] != succ(pd[0]))
            throw ParseError("under strand orientation inconsistent at crossing " +
                             std::to_string(crossings[i].id));
        ++heads[pd[0] - 1];
        ++tails[pd[2] - 1];
        bool fwd = pd[3] == succ(pd[1]);
        bool bwd = pd[1] == succ(pd[3]);
        if (!fwd && !bwd)
            throw ParseError("over strand orientation inconsistent at crossing " +
                             std::to_string(crossings[i].id));
        if (fwd && bwd) {
            pending.push_back(i);
            continue;
        }
        d.over_forward_[i] = fwd;
        ++heads[(fwd ? pd[1] : pd[3]) - 1];
        ++tails[(fwd ? pd[3] : pd[1]) - 1];
    }
    // Two-edge components leave the over direction open; settle it by requiring
    // one head and one tail per edge.
    while (!pending.empty()) {
        bool progress = false;
        for (size_t k = 0; k < pending.size();) {
            int i = pending[k];
            int a = crossings[i].pd[1] - 1, b = crossings[i].pd[3] - 1;
            bool force_bwd = heads[a] > 0 || tails[b] > 0;
            bool force_fwd = tails[a] > 0 || heads[b] > 0;
            if (force_bwd && force_fwd)
                throw ParseError("over strand orientation inconsistent at crossing " +
                                 std::to_string(crossings[i].id));
            if (!force_bwd && !force_fwd) {
                ++k;
                continue;
            }
            d.over_forward_[i] = force_fwd;
            ++heads[force_fwd ? a : b];
            ++tails[force_fwd ? b : a];
            pending.erase(pending.begin() + static_cast<long>(k));
            progress = true;
        }
        if (!progress) {
            int i = pending.front();
            d.over_forward_[i] = true;
            ++heads[crossings[i].pd[1] - 1];
            ++tails[crossings[i].pd[3] - 1];
            pending.erase(pending.begin());
        }
    }
    for (int e = 0; e < edges; ++e)
        if (heads[e] != 1 || tails[e] != 1) throw ParseError("strand orientation inconsistent");

    d.crossings_ = std::move(crossings);
    d.tail_.assign(edges, {});
    d.head_.assign(edges, {});
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 4; ++s) {
            int e = d.edge_at(i, s);
            (d.is_incoming(i, s) ? d.head_[e] : d.tail_[e]) = StrandEnd{i, s};
        }

    std::map<int, int> comp_index;
    d.component_.assign(edges, -1);
    for (int e = 0; e < edges; ++e) {
        int r = uf.find(e);
        auto [it, fresh] = comp_index.emplace(r, static_cast<int>(comp_index.size()));
        d.component_[e] = it->second;
    }
    d.num_components_ = static_cast<int>(comp_index.size());

    d.map_ = EmbeddedGraph(n);
    for (int e = 0; e < edges; ++e) d.map_.add_edge(d.tail_[e].crossing, d.head_[e].crossing);
    for (int i = 0; i < n; ++i) {
        std::vector<HalfEdge> rot;
        for (int s = 0; s < 4; ++s) rot.push_back(HalfEdge{d.edge_at(i, s), d.is_incoming(i, s) ? 1 : 0});
        d.map_.set_rotation(i, std::move(rot));
    }
    d.faces_ = d.map_.trace_faces();
    if (!d.map_.is_spherical(d.faces_)) throw ParseError("non-planar map");
    return d;
}

std::vector<int> Diagram::nugatory_crossings() const {
    std::vector<int> out;
    for (int c = 0; c < num_crossings(); ++c) {
        std::set<int> seen;
        for (int k = 0; k < 4; ++k) seen.insert(face_at(c, k));
        if (seen.size() < 4) out.push_back(c);
    }
    return out;
}

std::optional<Diagram> Diagram::smooth(int x) const {
    const int edges = num_edges();
    std::vector<int> chain_of(edges, -1);
    std::vector<StrandEnd> new_tail, new_head;
    for (int e = 0; e < edges; ++e) {
        if (tail(e).crossing == x) continue;
        const int id = static_cast<int>(new_tail.size());
        int cur = e;
        chain_of[cur] = id;
        while (head(cur).crossing == x) {
            cur = edge_at(x, smoothing_slot(x, head(cur).slot));
            chain_of[cur] = id;
        }
        new_tail.push_back(tail(e));
        new_head.push_back(head(cur));
    }
    for (int e = 0; e < edges; ++e)
        if (chain_of[e] < 0) return std::nullopt;

    // Relabel consecutively along each component of the smoothed diagram.
    const int m = static_cast<int>(new_tail.size());
    std::vector<int> label(m, 0);
    int next = 1;
    auto chain_at = [&](int c, int s) { return chain_of[edge_at(c, s)]; };
    for (int start = 0; start < m; ++start) {
        if (label[start]) continue;
        int cur = start;
        while (!label[cur]) {
            label[cur] = next++;
            StrandEnd h = new_head[cur];
            cur = chain_at(h.crossing, through_slot(h.crossing, h.slot));
        }
    }
    std::vector<PdCrossing> out;
    for (int c = 0; c < num_crossings(); ++c) {
        if (c == x) continue;
        PdCrossing pc;
        pc.id = crossings_[c].id;
        for (int s = 0; s < 4; ++s) pc.pd[s] = label[chain_at(c, s)];
        out.push_back(pc);
    }
    return Diagram::from_pd(std::move(out));
}

std::optional<std::vector<int>> checkerboard(const Diagram& d) {
    const int nf = d.num_faces();
    std::vector<std::vector<int>> adj(nf);
    for (int e = 0; e < d.num_edges(); ++e) {
        int fa = d.face_at(d.tail(e).crossing, d.tail(e).slot);
        int fb = d.face_at(d.head(e).crossing, d.head(e).slot);
        adj[fa].push_back(fb);
        adj[fb].push_back(fa);
    }
    std::vector<int> colour(nf, -1);
    for (int c = 0; c < d.num_crossings(); ++c) {
        int seed = d.face_at(c, d.smoothing_corner(c));
        if (colour[seed] >= 0) continue;
        colour[seed] = 0;
        std::queue<int> q;
        q.push(seed);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (int g : adj[f]) {
                if (colour[g] < 0) {
                    colour[g] = 1 - colour[f];
                    q.push(g);
                } else if (colour[g] == colour[f]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int c = 0; c < d.num_crossings(); ++c) {
        int k = d.smoothing_corner(c);
        if (colour[d.face_at(c, k)] != 0 || colour[d.face_at(c, k + 2)] != 0) return std::nullopt;
    }
    return colour;
}

bool is_alternating(const Diagram& d) {
    for (int e = 0; e < d.num_edges(); ++e)
        if ((d.tail(e).slot % 2) == (d.head(e).slot % 2)) return false;
    return true;
}

bool is_prime(const Diagram& d) {
    if (!d.is_connected()) return false;
    const int n = d.num_crossings();
    const int edges = d.num_edges();
    std::vector<bool> nugatory(n, false);
    for (int c : d.nugatory_crossings()) nugatory[c] = true;

    std::vector<int> side(n);
    for (int i = 0; i < edges; ++i) {
        for (int j = i + 1; j < edges; ++j) {
            std::fill(side.begin(), side.end(), 0);
            std::vector<int> stack{0};
            side[0] = 1;
            while (!stack.empty()) {
                int c = stack.back();
                stack.pop_back();
                for (int s = 0; s < 4; ++s) {
                    int e = d.edge_at(c, s);
                    if (e == i || e == j) continue;
                    int other = d.tail(e).crossing == c ? d.head(e).crossing : d.tail(e).crossing;
                    if (!side[other]) {
                        side[other] = 1;
                        stack.push_back(other);
                    }
                }
            }
            bool inside = false, outside = false;
            for (int c = 0; c < n; ++c) {
                if (nugatory[c]) continue;
                (side[c] ? inside : outside) = true;
            }
            if (inside && outside) return false;
        }
    }
    return true;
}

ValidationReport validate(const Diagram& d) {
    ValidationReport r;
    r.connected = d.is_connected();
    if (!r.connected) r.messages.push_back("diagram is not connected");
    r.alternating = is_alternating(d);
    if (!r.alternating) r.messages.push_back("diagram is not alternating");
    auto colours = checkerboard(d);
    r.special = r.connected && colours.has_value();
    if (!r.special) r.messages.push_back("some Seifert circle is not innermost");
    auto nug = d.nugatory_crossings();
    r.reduced = nug.empty();
    for (int c : nug)
        r.messages.push_back("crossing " + std::to_string(d.crossings()[c].id) + " is nugatory");
    r.prime = is_prime(d);
    if (!r.prime) r.messages.push_back("a two-edge cut separates crossings");

    if (!(r.connected && r.alternating && r.special && r.reduced && r.prime)) {
        r.messages.push_back("cuttable region not evaluated");
        return r;
    }
    const auto& col = *colours;
    for (int f = 0; f < d.num_faces() && !r.cuttable_region_exists; ++f) {
        if (col[f] != 1) continue;
        std::set<int> around;
        for (const Corner& c : d.faces().corners[f]) around.insert(c.vertex);
        bool ok = true;
        for (int c : around) {
            auto cut = d.smooth(c);
            if (!cut || !is_prime(*cut)) {
                ok = false;
                break;
            }
        }
        r.cuttable_region_exists = ok;
    }
    if (!r.cuttable_region_exists) r.messages.push_back("no cuttable white region");
    return r;
}

SeifertData seifert(const Diagram& d) {
    if (!is_alternating(d)) throw PreconditionError("diagram is not alternating");
    auto colours = checkerboard(d);
    if (!d.is_connected() || !colours) throw PreconditionError("diagram is not special");

    SeifertData out;
    std::vector<bool> used(d.num_edges(), false);
    for (int e = 0; e < d.num_edges(); ++e) {
        if (used[e]) continue;
        std::vector<int> circle;
        int cur = e;
        while (!used[cur]) {
            used[cur] = true;
            circle.push_back(cur + 1);
            StrandEnd h = d.head(cur);
            cur = d.edge_at(h.crossing, d.smoothing_slot(h.crossing, h.slot));
        }
        out.circles.push_back(std::move(circle));
    }
    for (int f = 0; f < d.num_faces(); ++f)
        ((*colours)[f] == 0 ? out.black_regions : out.white_regions).push_back(f);
    out.s = static_cast<int>(out.circles.size());
    out.n = d.num_crossings();
    if (static_cast<int>(out.black_regions.size()) != out.s)
        throw InvariantError("black regions do not match Seifert circles");
    out.chi = out.s - out.n;
    out.genus_like = (2 - out.chi - d.num_components()) / 2;
    return out;
}

namespace {

/// Region graph on faces of one colour; `base` gives the first of the two
/// opposite corners through which the edge of each crossing passes.
EmbeddedGraph region_graph(const Diagram& d, const std::vector<int>& colour, int wanted,
                           const std::vector<int>& base, bool oriented) {
    std::vector<int> vertex_of(d.num_faces(), -1);
    EmbeddedGraph g;
    for (int f = 0; f < d.num_faces(); ++f)
        if (colour[f] == wanted) vertex_of[f] = g.add_vertex();
    for (int c = 0; c < d.num_crossings(); ++c)
        g.add_edge(vertex_of[d.face_at(c, base[c])], vertex_of[d.face_at(c, base[c] + 2)], 1, {c});

    for (int f = 0; f < d.num_faces(); ++f) {
        if (colour[f] != wanted) continue;
        std::vector<HalfEdge> rot;
        int agree = 0;
        for (size_t k = 0; k < d.faces().corners[f].size(); ++k) {
            const Corner& corner = d.faces().corners[f][k];
            int c = corner.vertex;
            if (corner.index != base[c] && corner.index != base[c] + 2)
                throw InvariantError("region corner is not on a region-graph edge");
            rot.push_back(HalfEdge{c, corner.index == base[c] ? 0 : 1});
            // End 0 of a diagram edge is its tail.
            agree += d.faces().darts[f][k].end == 0 ? 1 : -1;
        }
        int v = vertex_of[f];
        g.set_rotation(v, std::move(rot));
        if (oriented) {
            int len = static_cast<int>(d.faces().corners[f].size());
            if (std::abs(agree) != len) throw InvariantError("Seifert circle orientation is not coherent");
            // A circle running counterclockwise around its region marks the
            // vertex Cw; this fixes the global chirality of positive sides.
            g.set_orientation(v, agree > 0 ? Orientation::Cw : Orientation::Ccw);
        }
    }
    return g;
}

void require_special(const Diagram& d) {
    if (!d.is_connected()) throw PreconditionError("diagram is not connected");
    if (!is_alternating(d)) throw PreconditionError("diagram is not alternating");
    if (!checkerboard(d)) throw PreconditionError("diagram is not special");
}

} // namespace

EmbeddedGraph black_region_graph(const Diagram& d) {
    require_special(d);
    std::vector<int> base(d.num_crossings());
    for (int c = 0; c < d.num_crossings(); ++c) base[c] = d.smoothing_corner(c);
    return region_graph(d, *checkerboard(d), 0, base, true);
}

EmbeddedGraph white_region_graph(const Diagram& d) {
    require_special(d);
    std::vector<int> base(d.num_crossings());
    for (int c = 0; c < d.num_crossings(); ++c) base[c] = 1 - d.smoothing_corner(c);
    return region_graph(d, *checkerboard(d), 1, base, false);
}

std::vector<int> black_vertex_of_face(const Diagram& d) {
    auto colours = checkerboard(d);
    if (!colours) throw PreconditionError("diagram is not special");
    std::vector<int> out(d.num_faces(), -1);
    int next = 0;
    for (int f = 0; f < d.num_faces(); ++f)
        if ((*colours)[f] == 0) out[f] = next++;
    return out;
}

bool is_fibred(const EmbeddedGraph& g) {
    const int n = g.num_vertices();
    if (n == 0) return false;
    std::vector<std::pair<int, int>> edges;
    for (int id : g.edge_ids()) edges.emplace_back(g.edge(id).a, g.edge(id).b);
    std::vector<bool> alive_edge(edges.size(), true);
    std::vector<bool> alive_vertex(n, true);
    int vertices = n;

    bool changed = true;
    while (changed && vertices > 1) {
        changed = false;
        std::vector<int> valence(n, 0);
        for (size_t i = 0; i < edges.size(); ++i) {
            if (!alive_edge[i]) continue;
            if (edges[i].first == edges[i].second) {
                alive_edge[i] = false;
                changed = true;
                continue;
            }
            ++valence[edges[i].first];
            ++valence[edges[i].second];
        }
        if (changed) continue;
        for (int v = 0; v < n && !changed; ++v) {
            if (!alive_vertex[v] || valence[v] != 2) continue;
            size_t pick = edges.size();
            for (size_t i = 0; i < edges.size() && pick == edges.size(); ++i)
                if (alive_edge[i] && (edges[i].first == v || edges[i].second == v)) pick = i;
            int w = edges[pick].first == v ? edges[pick].second : edges[pick].first;
            alive_edge[pick] = false;
            for (size_t i = 0; i < edges.size(); ++i) {
                if (!alive_edge[i]) continue;
                if (edges[i].first == v) edges[i].first = w;
                if (edges[i].second == v) edges[i].second = w;
            }
            alive_vertex[v] = false;
            --vertices;
            changed = true;
        }
    }
    return vertices == 1;
}

} // namespace kakimizu
