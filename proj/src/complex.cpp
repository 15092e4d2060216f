#include "kakimizu/complex.hpp"

#include "kakimizu/error.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <queue>
#include <set>

namespace kakimizu {

bool RegionSet::contains(int region) const {
    return std::binary_search(regions.begin(), regions.end(), region);
}

RegionSet make_region_set(const ThetaGraph& t, std::vector<int> regions) {
    RegionSet a;
    std::sort(regions.begin(), regions.end());
    regions.erase(std::unique(regions.begin(), regions.end()), regions.end());
    a.delta.assign(t.num_edges(), 0);
    for (int r : regions) {
        if (r < 0 || r >= t.num_regions()) throw PreconditionError("region id out of range");
        const auto& d = t.regions()[r].delta;
        for (int i = 0; i < t.num_edges(); ++i) a.delta[i] += d[i];
    }
    a.regions = std::move(regions);
    return a;
}

std::vector<std::pair<int, int>> VertexOrder::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(less_.size());
    for (uint64_t k : less_)
        out.emplace_back(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu));
    std::sort(out.begin(), out.end());
    return out;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& s : maximal_simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& s : maximal_simplices)
        if (static_cast<int>(s.size()) - 1 != dimension()) return false;
    return true;
}

int SimplicialComplex::index_of(const std::vector<int>& label) const {
    auto it = std::find(vertices.begin(), vertices.end(), label);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

void SimplicialComplex::canonicalize() {
    for (auto& s : maximal_simplices) std::sort(s.begin(), s.end());
    std::sort(maximal_simplices.begin(), maximal_simplices.end());
}

WeightVector base_vertex(const ThetaGraph& t) { return t.base_vertex(); }

namespace {

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= total; ++x) {
        cur.push_back(x);
        compositions(total - x, parts - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<WeightVector> enumerate_vertices(const ThetaGraph& t) {
    std::vector<WeightVector> out{WeightVector{}};
    for (const ThetaComponent& c : t.components()) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        compositions(c.total_weight(), c.size(), cur, parts);
        std::vector<WeightVector> next;
        next.reserve(out.size() * parts.size());
        for (const auto& prefix : out)
            for (const auto& p : parts) {
                WeightVector v = prefix;
                v.insert(v.end(), p.begin(), p.end());
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<WeightVector> region_add(const WeightVector& v, const Region& r) {
    for (int e : r.boundary_minus)
        if (v.at(e) <= 0) return std::nullopt;
    WeightVector w = v;
    for (int e : r.boundary_plus) ++w[e];
    for (int e : r.boundary_minus) --w[e];
    return w;
}

std::vector<int> order_regions(const RegionSet& a, const WeightVector& u, const ThetaGraph& t) {
    std::vector<int> remaining = a.regions;
    std::vector<int> order;
    WeightVector cur = u;
    while (!remaining.empty()) {
        bool placed = false;
        for (size_t i = 0; i < remaining.size(); ++i) {
            auto next = region_add(cur, t.regions()[remaining[i]]);
            if (!next) continue;
            cur = std::move(*next);
            order.push_back(remaining[i]);
            remaining.erase(remaining.begin() + static_cast<long>(i));
            placed = true;
            break;
        }
        if (!placed) throw InvariantError("order_regions stuck: no region of the set can be added");
    }
    return order;
}

std::optional<RegionSet> region_set_for_delta(const std::vector<int>& delta, const ThetaGraph& t) {
    const int n = t.num_edges();
    if (static_cast<int>(delta.size()) != n) throw PreconditionError("difference vector does not match the theta graph");
    // Each edge ties its two owning regions: same status when its weight is
    // unchanged, opposite status otherwise, with the side fixed by the sign.
    const int m = t.num_regions();
    std::vector<std::vector<std::pair<int, int>>> link(m);
    std::vector<int> fixed(m, -1);
    auto pin = [&](int r, int val) {
        if (fixed[r] >= 0 && fixed[r] != val) return false;
        fixed[r] = val;
        return true;
    };
    for (int e = 0; e < n; ++e) {
        int plus = t.plus_owner(e), minus = t.minus_owner(e);
        int d = delta[e];
        if (d < -1 || d > 1) return std::nullopt;
        link[plus].emplace_back(minus, d == 0 ? 0 : 1);
        link[minus].emplace_back(plus, d == 0 ? 0 : 1);
        if (d == 1 && !(pin(plus, 1) && pin(minus, 0))) return std::nullopt;
        if (d == -1 && !(pin(minus, 1) && pin(plus, 0))) return std::nullopt;
    }
    std::vector<int> status(m, -1);
    for (int start = 0; start < m; ++start) {
        if (status[start] >= 0) continue;
        // Colour the component relative to `start`, then resolve it by any pin.
        std::vector<int> members{start};
        std::vector<int> rel(m, -1);
        rel[start] = 0;
        for (size_t i = 0; i < members.size(); ++i) {
            int r = members[i];
            for (auto [s, parity] : link[r]) {
                int want = rel[r] ^ parity;
                if (rel[s] < 0) {
                    rel[s] = want;
                    members.push_back(s);
                } else if (rel[s] != want) {
                    return std::nullopt;
                }
            }
        }
        int anchor = -1;
        for (int r : members) {
            if (fixed[r] < 0) continue;
            int val = fixed[r] ^ rel[r];
            if (anchor >= 0 && anchor != val) return std::nullopt;
            anchor = val;
        }
        if (anchor < 0) return std::nullopt;
        for (int r : members) status[r] = anchor ^ rel[r];
    }

    std::vector<int> in;
    for (int r = 0; r < m; ++r)
        if (status[r] == 1) in.push_back(r);
    if (in.empty() || static_cast<int>(in.size()) == m) return std::nullopt;
    RegionSet a = make_region_set(t, in);
    if (a.delta != delta) throw InvariantError("region set does not realize the difference");
    return a;
}

std::optional<RegionSet> adjacency(const WeightVector& u, const WeightVector& v, const ThetaGraph& t) {
    const int n = t.num_edges();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw PreconditionError("weight vectors do not match the theta graph");
    if (u == v) return std::nullopt;
    std::vector<int> d(n);
    for (int e = 0; e < n; ++e) {
        d[e] = v[e] - u[e];
        if (std::abs(d[e]) > 1) return std::nullopt;
    }
    auto a = region_set_for_delta(d, t);
    if (!a) return std::nullopt;
    std::vector<int> rest;
    for (int r = 0; r < t.num_regions(); ++r)
        if (!a->contains(r)) rest.push_back(r);
    try {
        order_regions(*a, u, t);
        order_regions(make_region_set(t, rest), v, t);
    } catch (const InvariantError&) {
        return std::nullopt;
    }
    return a;
}

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<int>>& adj) {
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    auto intersect = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
        return c;
    };
    auto count_common = [](const std::vector<int>& a, const std::vector<int>& b) {
        size_t i = 0, j = 0, k = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j])
                ++i;
            else if (b[j] < a[i])
                ++j;
            else {
                ++k;
                ++i;
                ++j;
            }
        }
        return k;
    };
    auto recurse = [&](auto&& self, std::vector<int> p, std::vector<int> x) -> void {
        if (p.empty()) {
            if (x.empty()) {
                std::vector<int> s = r;
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
            return;
        }
        int pivot = -1;
        size_t best = 0;
        for (const auto* set : {&p, &x})
            for (int u : *set) {
                size_t k = count_common(p, adj[u]);
                if (pivot < 0 || k > best) {
                    pivot = u;
                    best = k;
                }
            }
        std::vector<int> candidates;
        std::set_difference(p.begin(), p.end(), adj[pivot].begin(), adj[pivot].end(),
                            std::back_inserter(candidates));
        for (int v : candidates) {
            r.push_back(v);
            self(self, intersect(p, adj[v]), intersect(x, adj[v]));
            r.pop_back();
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    };
    const int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v) {
        std::vector<int> p, x;
        for (int w : adj[v]) (w > v ? p : x).push_back(w);
        r.assign(1, v);
        recurse(recurse, p, x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex build_complex(const ThetaGraph& t) {
    SimplicialComplex c;
    c.edge_order = t.global_edge_order();
    c.vertices = enumerate_vertices(t);
    const int n = c.num_vertices();
    if (t.empty()) {
        c.maximal_simplices = {{0}};
        return c;
    }
    std::vector<std::vector<int>> adj(n);
    const int dims = t.num_edges();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = c.vertices[i];
            const auto& b = c.vertices[j];
            bool close = true;
            for (int e = 0; e < dims && close; ++e) close = std::abs(a[e] - b[e]) <= 1;
            if (!close || !adjacency(a, b, t)) continue;
            adj[i].push_back(j);
            adj[j].push_back(i);
        }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    c.maximal_simplices = maximal_cliques(adj);
    return c;
}

std::vector<std::vector<int>> one_skeleton(const SimplicialComplex& c) {
    std::vector<std::vector<int>> adj(c.num_vertices());
    for (const auto& s : c.maximal_simplices)
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j) {
                adj[s[i]].push_back(s[j]);
                adj[s[j]].push_back(s[i]);
            }
    for (auto& l : adj) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return adj;
}

std::vector<int> distances_from(const SimplicialComplex& c, int source) {
    auto adj = one_skeleton(c);
    std::vector<int> dist(c.num_vertices(), -1);
    std::queue<int> q;
    dist.at(source) = 0;
    q.push(source);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    return dist;
}

int distance(const SimplicialComplex& c, int u, int v) {
    int d = distances_from(c, u).at(v);
    if (d < 0) throw InvariantError("vertices lie in different components of the 1-skeleton");
    return d;
}

VertexOrder order_vertices(const SimplicialComplex& c, const ThetaGraph& t, int region) {
    if (region < 0 || region >= t.num_regions()) throw PreconditionError("region id out of range");
    VertexOrder order;
    auto adj = one_skeleton(c);
    for (int a = 0; a < c.num_vertices(); ++a)
        for (int b : adj[a]) {
            if (b < a) continue;
            auto set = adjacency(c.vertices[a], c.vertices[b], t);
            if (!set) throw InvariantError("complex edge without a realizing region set");
            if (set->contains(region))
                order.add(b, a);
            else
                order.add(a, b);
        }
    return order;
}

OrderAudit audit_order(const SimplicialComplex& c, const VertexOrder& order) {
    OrderAudit audit;
    auto adj = one_skeleton(c);
    for (auto [u, v] : order.pairs()) {
        if (u == v || order.precedes(v, u)) audit.antisymmetric = false;
        if (!std::binary_search(adj[u].begin(), adj[u].end(), v)) audit.adjacent_comparable = false;
    }
    for (int u = 0; u < c.num_vertices(); ++u)
        for (int v : adj[u])
            if (u < v && !order.precedes(u, v) && !order.precedes(v, u)) audit.adjacent_comparable = false;
    // A tournament on a simplex is transitive iff its score sequence is 0..k-1.
    for (const auto& s : c.maximal_simplices) {
        std::vector<int> score;
        for (int u : s) {
            int k = 0;
            for (int v : s)
                if (order.precedes(u, v)) ++k;
            score.push_back(k);
        }
        std::sort(score.begin(), score.end());
        for (size_t i = 0; i < score.size(); ++i)
            if (score[i] != static_cast<int>(i)) audit.transitive = false;
    }
    return audit;
}

std::vector<std::vector<int>> cycle_simplices(const ThetaGraph& t, const SimplicialComplex& c) {
    if (t.empty()) return {{0}};
    const int m = t.num_regions();
    std::set<std::vector<int>> found;
    std::vector<bool> used(m, false);
    std::vector<int> path;
    std::map<WeightVector, int> index;
    for (int i = 0; i < c.num_vertices(); ++i) index[c.vertices[i]] = i;
    std::function<void(const WeightVector&)> walk = [&](const WeightVector& v) {
        if (static_cast<int>(path.size()) == m) {
            std::vector<int> s = path;
            std::sort(s.begin(), s.end());
            found.insert(std::move(s));
            return;
        }
        for (int r = 0; r < m; ++r) {
            if (used[r]) continue;
            auto w = region_add(v, t.regions()[r]);
            if (!w) continue;
            auto it = index.find(*w);
            if (it == index.end()) throw InvariantError("region addition left the vertex set");
            int idx = it->second;
            used[r] = true;
            path.push_back(idx);
            walk(*w);
            path.pop_back();
            used[r] = false;
        }
    };
    for (int u = 0; u < c.num_vertices(); ++u) walk(c.vertices[u]);
    return {found.begin(), found.end()};
}

} // namespace kakimizu
