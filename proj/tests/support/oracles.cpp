#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

namespace oracle {

int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<int>> stars_and_bars(int k, int m) {
    // Choose k-1 bar positions among m+k-1 slots.
    std::vector<std::vector<int>> out;
    const int slots = m + k - 1;
    std::vector<int> bars(k - 1);
    std::iota(bars.begin(), bars.end(), 0);
    for (;;) {
        std::vector<int> v;
        int prev = -1;
        for (int b : bars) {
            v.push_back(b - prev - 1);
            prev = b;
        }
        v.push_back(slots - prev - 1);
        out.push_back(v);
        int i = k - 2;
        while (i >= 0 && bars[i] == slots - (k - 1 - i)) --i;
        if (i < 0) break;
        ++bars[i];
        for (int j = i + 1; j < k - 1; ++j) bars[j] = bars[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> theta_vertices(const kakimizu::ThetaGraph& t) {
    std::vector<std::vector<int>> acc{{}};
    for (const auto& c : t.components()) {
        int m = 0;
        for (const auto& e : c.edges) m += e.weight;
        std::vector<std::vector<int>> next;
        for (const auto& prefix : acc)
            for (const auto& part : stars_and_bars(c.size(), m)) {
                auto v = prefix;
                v.insert(v.end(), part.begin(), part.end());
                next.push_back(std::move(v));
            }
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

std::vector<std::vector<std::vector<int>>> colour_schemes(int n, int m) {
    const int len = m * (n + 1);
    std::vector<std::vector<std::vector<int>>> out;
    // Weakly increasing sequences over 0..n of length len correspond to
    // multiplicity vectors of n+1 symbols summing to len.
    for (const auto& mult : stars_and_bars(n + 1, len)) {
        std::vector<int> seq;
        for (int s = 0; s <= n; ++s) seq.insert(seq.end(), mult[s], s);
        std::vector<std::vector<int>> cols(n + 1);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j <= n; ++j) cols[j].push_back(seq[i * (n + 1) + j]);
        std::set<std::vector<int>> distinct(cols.begin(), cols.end());
        if (static_cast<int>(distinct.size()) == n + 1) out.push_back(cols);
    }
    return out;
}

std::vector<std::vector<int>> region_deltas(const kakimizu::ThetaGraph& t) {
    const auto& comps = t.components();
    std::vector<int> offset{0}, edge_offset{0};
    std::map<int, int> index_of_id;
    for (size_t c = 0; c < comps.size(); ++c) {
        index_of_id[comps[c].id] = static_cast<int>(c);
        offset.push_back(offset.back() + comps[c].size());
        edge_offset.push_back(edge_offset.back() + comps[c].size());
    }
    std::vector<int> parent(offset.back());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    int sphere_face = -1;
    for (size_t c = 0; c < comps.size(); ++c) {
        const auto& p = comps[c].placement;
        int outer = offset[c] + p.outer_face;
        if (p.parent == kakimizu::kSphere) {
            if (sphere_face >= 0) unite(outer, sphere_face);
            sphere_face = outer;
        } else {
            unite(outer, offset[index_of_id.at(p.parent)] + p.parent_face);
        }
    }
    std::map<int, std::vector<int>> regions;
    const int edges = edge_offset.back();
    for (size_t c = 0; c < comps.size(); ++c) {
        const int k = comps[c].size();
        for (int i = 0; i < k; ++i) {
            auto& delta = regions[find(offset[c] + i)];
            delta.resize(edges, 0);
            delta[edge_offset[c] + i] -= 1;
            delta[edge_offset[c] + (i + 1) % k] += 1;
        }
    }
    std::vector<std::vector<int>> out;
    for (auto& [root, delta] : regions) out.push_back(delta);
    return out;
}

std::set<std::set<std::vector<int>>> cycle_simplices(const kakimizu::ThetaGraph& t) {
    std::set<std::set<std::vector<int>>> out;
    if (t.empty()) {
        out.insert({std::vector<int>{}});
        return out;
    }
    const auto deltas = region_deltas(t);
    const int m = static_cast<int>(deltas.size());
    std::vector<bool> used(m, false);
    std::vector<std::vector<int>> path;
    std::function<void(const std::vector<int>&)> walk = [&](const std::vector<int>& v) {
        if (static_cast<int>(path.size()) == m + 1) {
            // The start vertex is both the first and last entry.
            if (path.back() != path.front()) throw std::logic_error("cycle does not close");
            out.insert(std::set<std::vector<int>>(path.begin(), path.end()));
            return;
        }
        for (int r = 0; r < m; ++r) {
            if (used[r]) continue;
            std::vector<int> w = v;
            bool ok = true;
            for (size_t e = 0; e < w.size(); ++e) {
                w[e] += deltas[r][e];
                ok = ok && w[e] >= 0;
            }
            if (!ok) continue;
            used[r] = true;
            path.push_back(w);
            walk(w);
            path.pop_back();
            used[r] = false;
        }
    };
    for (const auto& v : theta_vertices(t)) {
        path.assign(1, v);
        walk(v);
    }
    return out;
}

MultiGraph to_multigraph(const kakimizu::EmbeddedGraph& g) {
    MultiGraph m;
    m.vertices = g.num_vertices();
    for (int id : g.edge_ids()) m.edges.emplace_back(g.edge(id).a, g.edge(id).b);
    return m;
}

kakimizu::EmbeddedGraph to_embedded(const MultiGraph& g) {
    kakimizu::EmbeddedGraph e(g.vertices);
    for (auto [a, b] : g.edges) e.add_edge(a, b);
    return e;
}

namespace {

/// Relabels vertices in order of first appearance and sorts edges.
MultiGraph normalize(const MultiGraph& g, const std::vector<bool>& alive) {
    std::vector<int> label(g.vertices, -1);
    int next = 0;
    for (int v = 0; v < g.vertices; ++v)
        if (alive[v]) label[v] = next++;
    MultiGraph out;
    out.vertices = next;
    for (auto [a, b] : g.edges) out.edges.emplace_back(std::min(label[a], label[b]), std::max(label[a], label[b]));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

} // namespace

bool fibred_by_search(const MultiGraph& start) {
    std::set<std::pair<int, std::vector<std::pair<int, int>>>> seen;
    std::function<bool(const MultiGraph&)> search = [&](const MultiGraph& g) {
        if (g.vertices == 1) return true;
        if (!seen.insert({g.vertices, g.edges}).second) return false;
        std::vector<int> val = valencies(g);
        for (size_t i = 0; i < g.edges.size(); ++i) {
            auto [a, b] = g.edges[i];
            MultiGraph h = g;
            h.edges.erase(h.edges.begin() + static_cast<long>(i));
            std::vector<bool> alive(g.vertices, true);
            if (a == b) {
                if (search(normalize(h, alive))) return true;
                continue;
            }
            for (int v : {a, b}) {
                if (val[v] != 2) continue;
                int w = v == a ? b : a;
                MultiGraph c = h;
                for (auto& [x, y] : c.edges) {
                    if (x == v) x = w;
                    if (y == v) y = w;
                }
                alive[v] = false;
                if (search(normalize(c, alive))) return true;
                alive[v] = true;
            }
        }
        return false;
    };
    std::vector<bool> alive(start.vertices, true);
    return search(normalize(start, alive));
}

std::vector<int> valencies(const MultiGraph& g) {
    std::vector<int> val(g.vertices, 0);
    for (auto [a, b] : g.edges) {
        ++val[a];
        ++val[b];
    }
    return val;
}

bool has_loop(const MultiGraph& g) {
    for (auto [a, b] : g.edges)
        if (a == b) return true;
    return false;
}

bool connected(const MultiGraph& g, int skip) {
    int start = skip == 0 ? 1 : 0;
    if (g.vertices - (skip >= 0 ? 1 : 0) <= 1) return true;
    std::vector<bool> seen(g.vertices, false);
    seen[start] = true;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [a, b] : g.edges) {
            if (a == skip || b == skip) continue;
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
                if (x == v && !seen[y]) {
                    seen[y] = true;
                    q.push(y);
                }
        }
    }
    for (int v = 0; v < g.vertices; ++v)
        if (v != skip && !seen[v]) return false;
    return true;
}

bool has_cut_vertex(const MultiGraph& g) {
    for (int v = 0; v < g.vertices; ++v)
        if (!connected(g, v)) return true;
    return false;
}

std::vector<std::vector<int>> all_distances(int n, const std::vector<std::vector<int>>& simplices) {
    std::vector<std::set<int>> adj(n);
    for (const auto& s : simplices)
        for (int a : s)
            for (int b : s)
                if (a != b) adj[a].insert(b);
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> q;
        dist[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][v] + 1;
                    q.push(w);
                }
        }
    }
    return dist;
}

std::vector<kakimizu::PdCrossing> relabel(const kakimizu::Diagram& d, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int edges = d.num_edges();
    std::map<int, std::pair<int, int>> range; // component -> [lo, hi] of 1-based labels
    for (int e = 0; e < edges; ++e) {
        auto [it, fresh] = range.try_emplace(d.component_of(e), e + 1, e + 1);
        it->second.first = std::min(it->second.first, e + 1);
        it->second.second = std::max(it->second.second, e + 1);
    }
    std::vector<int> order;
    for (auto& [c, r] : range) order.push_back(c);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> label(edges + 1, 0);
    int base = 0;
    for (int c : order) {
        auto [lo, hi] = range[c];
        const int size = hi - lo + 1;
        const int shift = std::uniform_int_distribution<int>(0, size - 1)(rng);
        for (int l = lo; l <= hi; ++l) label[l] = base + 1 + (l - lo + shift) % size;
        base += size;
    }
    std::vector<kakimizu::PdCrossing> out = d.crossings();
    for (auto& c : out)
        for (int& l : c.pd) l = label[l] + 100;
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

} // namespace oracle
