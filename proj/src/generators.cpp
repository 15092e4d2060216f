#include "kakimizu/generators.hpp"

#include "kakimizu/error.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace kakimizu {

int64_t predicted_facets(const ThetaGraph& t) {
    int64_t facets = 1;
    int dims = 0;
    for (const ThetaComponent& c : t.components()) {
        const int d = c.size() - 1;
        for (int i = 0; i < d; ++i) facets *= c.total_weight();
        // Multiply by C(dims + d, d) one factor at a time; each partial product is integral.
        for (int i = 1; i <= d; ++i) facets = facets * (dims + i) / i;
        dims += d;
    }
    return facets;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

ThetaGraph sample_theta(std::mt19937_64& rng, const RandomThetaOptions& opt) {
    const int nc = uniform(rng, 1, opt.max_components);
    std::vector<ThetaComponent> comps;
    int next_edge = 0;
    for (int c = 0; c < nc; ++c) {
        ThetaComponent comp;
        comp.id = c;
        const int k = uniform(rng, 2, opt.max_edges);
        const int m = uniform(rng, 1, opt.max_weight);
        std::vector<int> w(k, 0);
        for (int unit = 0; unit < m; ++unit) ++w[uniform(rng, 0, k - 1)];
        for (int i = 0; i < k; ++i) comp.edges.push_back({next_edge++, w[i]});
        if (c > 0) {
            int parent = uniform(rng, -1, c - 1);
            if (parent >= 0) {
                comp.placement.parent = parent;
                comp.placement.parent_face = uniform(rng, 0, comps[parent].size() - 1);
            }
        }
        comp.placement.outer_face = uniform(rng, 0, k - 1);
        comps.push_back(std::move(comp));
    }
    return ThetaGraph(std::move(comps));
}

/// Plane multigraph with an explicit rotation system. A half-edge is (edge, end).
struct PlaneGraph {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::pair<int, int>>> rot;
    std::vector<int> colour;

    int add_vertex(int c) {
        rot.emplace_back();
        colour.push_back(c);
        return static_cast<int>(rot.size()) - 1;
    }
    int index_at(int v, int edge, int end) const {
        for (size_t i = 0; i < rot[v].size(); ++i)
            if (rot[v][i] == std::make_pair(edge, end)) return static_cast<int>(i);
        throw InvariantError("half-edge missing from rotation");
    }
    int endpoint(int edge, int end) const { return end == 0 ? edges[edge].first : edges[edge].second; }

    /// Faces as corner lists; corner (v, i) lies between rot[v][i] and rot[v][i+1].
    std::vector<std::vector<std::pair<int, int>>> faces() const {
        std::vector<std::vector<bool>> seen(rot.size());
        for (size_t v = 0; v < rot.size(); ++v) seen[v].assign(rot[v].size(), false);
        std::vector<std::vector<std::pair<int, int>>> out;
        for (size_t v0 = 0; v0 < rot.size(); ++v0)
            for (size_t i0 = 0; i0 < rot[v0].size(); ++i0) {
                if (seen[v0][i0]) continue;
                out.emplace_back();
                int v = static_cast<int>(v0), i = static_cast<int>(i0);
                while (!seen[v][i]) {
                    seen[v][i] = true;
                    out.back().emplace_back(v, i);
                    auto [e, end] = rot[v][(i + 1) % rot[v].size()];
                    int w = endpoint(e, 1 - end);
                    i = index_at(w, e, 1 - end);
                    v = w;
                }
            }
        return out;
    }

    /// Adds a path of `len` edges from corner cu to corner cw through their common face.
    void add_ear(std::pair<int, int> cu, std::pair<int, int> cw, int len) {
        auto [u, iu] = cu;
        auto [w, iw] = cw;
        std::vector<int> path{u};
        for (int s = 1; s < len; ++s) path.push_back(add_vertex(1 - colour[path.back()]));
        path.push_back(w);
        std::vector<int> ids;
        for (int s = 0; s < len; ++s) {
            ids.push_back(static_cast<int>(edges.size()));
            edges.emplace_back(path[s], path[s + 1]);
        }
        rot[u].insert(rot[u].begin() + iu + 1, {ids.front(), 0});
        rot[w].insert(rot[w].begin() + iw + 1, {ids.back(), 1});
        for (int s = 1; s < len; ++s) rot[path[s]] = {{ids[s - 1], 1}, {ids[s], 0}};
    }
};

} // namespace

ThetaGraph random_theta(std::mt19937_64& rng, const RandomThetaOptions& opt) {
    if (opt.max_components < 1 || opt.max_edges < 2 || opt.max_weight < 1)
        throw PreconditionError("random theta options out of range");
    for (;;) {
        ThetaGraph t = sample_theta(rng, opt);
        if (predicted_facets(t) <= opt.max_facets) return t;
    }
}

Diagram random_special_alternating(std::mt19937_64& rng, int crossings) {
    if (crossings < 2) throw PreconditionError("need at least two crossings");
    PlaneGraph g;
    g.add_vertex(0);
    g.add_vertex(1);
    g.edges = {{0, 1}, {0, 1}};
    g.rot[0] = {{0, 0}, {1, 0}};
    g.rot[1] = {{0, 1}, {1, 1}};

    while (static_cast<int>(g.edges.size()) < crossings) {
        const int room = crossings - static_cast<int>(g.edges.size());
        auto faces = g.faces();
        const auto& face = faces[uniform(rng, 0, static_cast<int>(faces.size()) - 1)];
        auto cu = face[uniform(rng, 0, static_cast<int>(face.size()) - 1)];
        auto cw = face[uniform(rng, 0, static_cast<int>(face.size()) - 1)];
        if (cu.first == cw.first) continue;
        int len;
        if (g.colour[cu.first] == g.colour[cw.first]) {
            if (room < 2) continue;
            len = 2;
        } else {
            len = room >= 3 && uniform(rng, 0, 2) == 0 ? 3 : 1;
        }
        g.add_ear(cu, cw, len);
    }

    // Medial diagram: one diagram edge per corner, one crossing per edge of g.
    std::vector<int> offset(g.rot.size() + 1, 0);
    for (size_t v = 0; v < g.rot.size(); ++v) offset[v + 1] = offset[v] + static_cast<int>(g.rot[v].size());
    auto corner = [&](int v, int i) {
        int deg = static_cast<int>(g.rot[v].size());
        return offset[v] + ((i % deg) + deg) % deg;
    };
    const int n = static_cast<int>(g.edges.size());
    std::vector<std::array<int, 4>> pd(n);
    std::vector<int> next(2 * n, -1);
    for (int e = 0; e < n; ++e) {
        int a_end = g.colour[g.edges[e].first] == 0 ? 0 : 1;
        int a = g.endpoint(e, a_end), b = g.endpoint(e, 1 - a_end);
        int i = g.index_at(a, e, a_end), j = g.index_at(b, e, 1 - a_end);
        pd[e] = {corner(b, j), corner(b, j - 1), corner(a, i), corner(a, i - 1)};
        next[pd[e][0]] = pd[e][2];
        next[pd[e][3]] = pd[e][1];
    }

    // Label consecutively along each link component.
    std::vector<int> label(2 * n, 0);
    int counter = 0;
    for (int start = 0; start < 2 * n; ++start) {
        if (label[start]) continue;
        for (int c = start; !label[c]; c = next[c]) label[c] = ++counter;
    }
    std::vector<PdCrossing> out(n);
    for (int e = 0; e < n; ++e) {
        out[e].id = e;
        for (int s = 0; s < 4; ++s) out[e].pd[s] = label[pd[e][s]];
    }
    return Diagram::from_pd(std::move(out));
}

} // namespace kakimizu
