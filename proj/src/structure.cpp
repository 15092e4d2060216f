#include "kakimizu/structure.hpp"

#include "kakimizu/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kakimizu {

using boost::multiprecision::cpp_int;

std::vector<int> ColourScheme::column(int k) const {
    std::vector<int> col;
    for (const auto& row : rows) col.push_back(row.at(k));
    return col;
}

bool ColourScheme::valid() const {
    if (rows.empty()) return false;
    int prev = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != columns()) return false;
        for (int x : row) {
            if (x < prev || x > n) return false;
            prev = x;
        }
    }
    std::set<std::vector<int>> seen;
    for (int k = 0; k < columns(); ++k)
        if (!seen.insert(column(k)).second) return false;
    return true;
}

namespace {

void schemes_from(int n, int m, std::vector<int>& seq, std::vector<ColourScheme>& out) {
    const int width = n + 1;
    const int len = m * width;
    if (static_cast<int>(seq.size()) == len) {
        ColourScheme x;
        x.n = n;
        for (int i = 0; i < m; ++i) x.rows.emplace_back(seq.begin() + i * width, seq.begin() + (i + 1) * width);
        if (x.valid()) out.push_back(std::move(x));
        return;
    }
    int lo = seq.empty() ? 0 : seq.back();
    for (int v = lo; v <= n; ++v) {
        seq.push_back(v);
        schemes_from(n, m, seq, out);
        seq.pop_back();
    }
}

void multisets(int n, int m, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == m) {
        out.push_back(cur);
        return;
    }
    for (int v = cur.empty() ? 0 : cur.back(); v <= n; ++v) {
        cur.push_back(v);
        multisets(n, m, cur, out);
        cur.pop_back();
    }
}

/// Sorts vertices by label and rewrites simplex indices; drops any order.
void sort_vertices(SimplicialComplex& c) {
    std::vector<int> perm(c.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return c.vertices[a] < c.vertices[b]; });
    std::vector<int> where(perm.size());
    std::vector<std::vector<int>> labels(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        where[perm[i]] = static_cast<int>(i);
        labels[i] = std::move(c.vertices[perm[i]]);
    }
    c.vertices = std::move(labels);
    for (auto& s : c.maximal_simplices)
        for (int& v : s) v = where[v];
    c.order.reset();
    c.order_region.reset();
    c.canonicalize();
}

} // namespace

std::vector<ColourScheme> colour_schemes(int n, int m) {
    if (n < 0 || m < 1) throw PreconditionError("colour schemes need n >= 0 and m >= 1");
    std::vector<ColourScheme> out;
    std::vector<int> seq;
    schemes_from(n, m, seq, out);
    return out;
}

SimplicialComplex esd(int n, int m) {
    if (n < 0 || m < 1) throw PreconditionError("esd needs n >= 0 and m >= 1");
    SimplicialComplex c;
    std::vector<int> cur;
    multisets(n, m, cur, c.vertices);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < c.num_vertices(); ++i) index[c.vertices[i]] = i;
    for (const ColourScheme& x : colour_schemes(n, m)) {
        std::vector<int> s;
        for (int k = 0; k < x.columns(); ++k) s.push_back(index.at(x.column(k)));
        c.maximal_simplices.push_back(std::move(s));
    }
    c.canonicalize();
    return c;
}

std::vector<int> esd_column(const std::vector<int>& weights) {
    std::vector<int> col;
    for (size_t j = 0; j < weights.size(); ++j) {
        if (weights[j] < 0) throw PreconditionError("negative weight");
        col.insert(col.end(), weights[j], static_cast<int>(j));
    }
    return col;
}

std::vector<int> esd_weights(const std::vector<int>& column, int n) {
    std::vector<int> w(n + 1, 0);
    for (size_t i = 0; i < column.size(); ++i) {
        if (column[i] < 0 || column[i] > n || (i > 0 && column[i] < column[i - 1]))
            throw PreconditionError("column is not a weakly increasing sequence over 0..n");
        ++w[column[i]];
    }
    return w;
}

std::vector<int> theta_to_esd_map(const ThetaGraph& t, const SimplicialComplex& k, const SimplicialComplex& e) {
    if (t.num_components() != 1) throw PreconditionError("the B map needs a single theta component");
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < e.num_vertices(); ++i) index[e.vertices[i]] = i;
    std::vector<int> f;
    for (const auto& u : k.vertices) {
        auto it = index.find(esd_column(u));
        f.push_back(it == index.end() ? -1 : it->second);
    }
    return f;
}

bool verify_iso(const SimplicialComplex& c1, const SimplicialComplex& c2, const std::vector<int>& f) {
    if (c1.num_vertices() != c2.num_vertices() || static_cast<int>(f.size()) != c1.num_vertices()) return false;
    std::vector<bool> hit(c2.num_vertices(), false);
    for (int v : f) {
        if (v < 0 || v >= c2.num_vertices() || hit[v]) return false;
        hit[v] = true;
    }
    if (c1.maximal_simplices.size() != c2.maximal_simplices.size()) return false;
    std::set<std::vector<int>> target;
    for (auto s : c2.maximal_simplices) {
        std::sort(s.begin(), s.end());
        target.insert(std::move(s));
    }
    std::set<std::vector<int>> image;
    for (const auto& s : c1.maximal_simplices) {
        std::vector<int> t;
        for (int v : s) t.push_back(f[v]);
        std::sort(t.begin(), t.end());
        image.insert(std::move(t));
    }
    return image == target;
}

std::vector<int> label_map(const SimplicialComplex& c1, const SimplicialComplex& c2) {
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < c2.num_vertices(); ++i) index[c2.vertices[i]] = i;
    std::vector<int> f;
    for (const auto& label : c1.vertices) {
        auto it = index.find(label);
        f.push_back(it == index.end() ? -1 : it->second);
    }
    return f;
}

namespace {

/// Vertices of a simplex listed along the order; requires a total order on it.
std::vector<int> chain_of(const std::vector<int>& simplex, const VertexOrder& order) {
    std::vector<std::pair<int, int>> score;
    for (int u : simplex) {
        int below = 0;
        for (int v : simplex)
            if (order.precedes(v, u)) ++below;
        score.emplace_back(below, u);
    }
    std::sort(score.begin(), score.end());
    std::vector<int> chain;
    for (size_t i = 0; i < score.size(); ++i) {
        if (score[i].first != static_cast<int>(i)) throw PreconditionError("simplex is not totally ordered");
        chain.push_back(score[i].second);
    }
    return chain;
}

} // namespace

SimplicialComplex ordered_product(const SimplicialComplex& c1, const SimplicialComplex& c2) {
    for (const SimplicialComplex* c : {&c1, &c2}) {
        if (!c->order) throw PreconditionError("ordered product needs ordered complexes");
        if (!audit_order(*c, *c->order).ok()) throw PreconditionError("vertex order is not a product order");
    }
    const int n2 = c2.num_vertices();
    SimplicialComplex p;
    p.edge_order = c1.edge_order;
    p.edge_order.insert(p.edge_order.end(), c2.edge_order.begin(), c2.edge_order.end());
    for (const auto& a : c1.vertices)
        for (const auto& b : c2.vertices) {
            std::vector<int> label = a;
            label.insert(label.end(), b.begin(), b.end());
            p.vertices.push_back(std::move(label));
        }
    VertexOrder order;
    std::set<std::vector<int>> simplices;
    for (const auto& s1 : c1.maximal_simplices) {
        const auto x = chain_of(s1, *c1.order);
        for (const auto& s2 : c2.maximal_simplices) {
            const auto y = chain_of(s2, *c2.order);
            const int a = static_cast<int>(x.size()) - 1;
            const int b = static_cast<int>(y.size()) - 1;
            // Each staircase path is a bit mask of length a+b with a ones (steps in x).
            std::vector<int> steps(a + b, 0);
            std::fill(steps.begin(), steps.begin() + a, 1);
            std::sort(steps.begin(), steps.end());
            do {
                std::vector<int> path{x[0] * n2 + y[0]};
                int i = 0, j = 0;
                for (int s : steps) {
                    (s ? i : j)++;
                    path.push_back(x[i] * n2 + y[j]);
                }
                for (size_t u = 0; u < path.size(); ++u)
                    for (size_t v = u + 1; v < path.size(); ++v) order.add(path[u], path[v]);
                std::sort(path.begin(), path.end());
                simplices.insert(std::move(path));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    }
    p.maximal_simplices.assign(simplices.begin(), simplices.end());
    p.order = std::move(order);
    return p;
}

ThetaGraph sub_theta(const ThetaGraph& t, const std::vector<int>& component_ids) {
    std::set<int> keep(component_ids.begin(), component_ids.end());
    std::vector<ThetaComponent> comps;
    for (const ThetaComponent& c : t.components()) {
        if (!keep.count(c.id)) continue;
        ThetaComponent sub = c;
        sub.placement = Placement{kSphere, 0, c.placement.outer_face};
        // Climb to the nearest kept ancestor; the last step names its face.
        const ThetaComponent* cur = &c;
        while (cur->placement.parent != kSphere) {
            const ThetaComponent& parent = t.components()[t.component_index(cur->placement.parent)];
            if (keep.count(parent.id)) {
                sub.placement.parent = parent.id;
                sub.placement.parent_face = cur->placement.parent_face;
                break;
            }
            cur = &parent;
        }
        comps.push_back(std::move(sub));
    }
    return ThetaGraph(std::move(comps));
}

int sub_region(const ThetaGraph& t, const ThetaGraph& sub, int region) {
    int found = -1;
    for (auto [c, f] : t.regions().at(region).faces) {
        const int id = t.components()[c].id;
        int idx = -1;
        for (int i = 0; i < sub.num_components(); ++i)
            if (sub.components()[i].id == id) idx = i;
        if (idx < 0) continue;
        int r = sub.region_of(idx, f);
        if (found >= 0 && found != r) throw InvariantError("region splits inside a sub theta graph");
        found = r;
    }
    if (found < 0) throw InvariantError("region does not meet the sub theta graph");
    return found;
}

ThetaSplit split_theta(const ThetaGraph& t) {
    if (t.num_components() < 2) throw PreconditionError("splitting needs at least two theta components");
    ThetaSplit split;
    for (const Region& r : t.regions()) {
        std::set<int> comps;
        for (auto [c, f] : r.faces) comps.insert(c);
        if (comps.size() >= 2) {
            split.region = r.id;
            break;
        }
    }
    if (split.region < 0) throw InvariantError("no region meets two theta components");
    const Region& s = t.regions()[split.region];
    const int star = s.faces.front().first;
    const int face = s.faces.front().second;
    const ThetaComponent& cs = t.components()[star];

    // Components inside the chosen face of `star` go to the second half.
    std::vector<int> first{cs.id}, second;
    for (int i = 0; i < t.num_components(); ++i) {
        if (i == star) continue;
        int f = cs.placement.outer_face;
        for (int cur = i; t.components()[cur].placement.parent != kSphere;) {
            const Placement& p = t.components()[cur].placement;
            int parent = t.component_index(p.parent);
            if (parent == star) {
                f = p.parent_face;
                break;
            }
            cur = parent;
        }
        (f == face ? second : first).push_back(t.components()[i].id);
    }
    if (second.empty()) throw InvariantError("split left one side empty");
    split.first = sub_theta(t, first);
    split.second = sub_theta(t, second);
    split.first_region = sub_region(t, split.first, split.region);
    split.second_region = sub_region(t, split.second, split.region);
    return split;
}

SimplicialComplex product_model(const ThetaGraph& t, int region) {
    SimplicialComplex c;
    c.edge_order = t.global_edge_order();
    if (t.empty()) {
        c.vertices = {{}};
        c.maximal_simplices = {{0}};
        c.order = VertexOrder{};
        return c;
    }
    if (t.num_components() == 1) {
        const ThetaComponent& comp = t.components()[0];
        const int n = comp.size() - 1;
        c = esd(n, comp.total_weight());
        for (auto& v : c.vertices) v = esd_weights(v, n);
        c.edge_order = t.global_edge_order();
    } else {
        ThetaSplit split = split_theta(t);
        SimplicialComplex p1 = product_model(split.first, split.first_region);
        SimplicialComplex p2 = product_model(split.second, split.second_region);
        c = ordered_product(p1, p2);
        std::vector<int> target;
        for (int id : c.edge_order) target.push_back(t.coordinate_of_edge(id));
        for (auto& label : c.vertices) {
            std::vector<int> w(t.num_edges(), 0);
            for (size_t i = 0; i < label.size(); ++i) w[target[i]] = label[i];
            label = std::move(w);
        }
        c.edge_order = t.global_edge_order();
    }
    sort_vertices(c);
    c.order = order_vertices(c, t, region);
    c.order_region = region;
    return c;
}

bool HomologyReport::reduced_trivial() const {
    for (int b : reduced_betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

std::vector<std::vector<std::vector<int>>> all_faces(const SimplicialComplex& c) {
    std::vector<std::set<std::vector<int>>> faces;
    for (const auto& s : c.maximal_simplices) {
        const int k = static_cast<int>(s.size());
        if (k > 30) throw PreconditionError("simplex too large for face enumeration");
        if (static_cast<int>(faces.size()) < k) faces.resize(k);
        for (uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> f;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            std::sort(f.begin(), f.end());
            faces[f.size() - 1].insert(std::move(f));
        }
    }
    std::vector<std::vector<std::vector<int>>> out;
    for (auto& level : faces) out.emplace_back(level.begin(), level.end());
    return out;
}

namespace {

struct Overflow {};

inline void checked_sub_mul(int64_t& a, int64_t q, int64_t b) {
    int64_t prod;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &a)) throw Overflow{};
}
inline void checked_sub_mul(cpp_int& a, const cpp_int& q, const cpp_int& b) { a -= q * b; }

inline bool is_unit(const int64_t& x) { return x == 1 || x == -1; }
inline bool is_unit(const cpp_int& x) { return x == 1 || x == -1; }

/// Removes unit pivots (each contributes an invariant factor 1) and returns
/// the residual matrix.
template <class T>
std::vector<std::vector<cpp_int>> eliminate_units(int rows, int cols,
                                                  const std::vector<std::vector<std::pair<int, int64_t>>>& entries,
                                                  int& units) {
    std::vector<std::map<int, T>> row(rows);
    std::vector<std::set<int>> col(cols);
    for (int r = 0; r < rows; ++r)
        for (auto [c, v] : entries[r]) {
            if (v == 0) continue;
            row[r][c] += T(v);
            col[c].insert(r);
        }
    for (int r = 0; r < rows; ++r)
        for (auto it = row[r].begin(); it != row[r].end();)
            if (it->second == 0) {
                col[it->first].erase(r);
                it = row[r].erase(it);
            } else {
                ++it;
            }
    std::vector<bool> alive(rows, true);
    units = 0;

    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<int> order;
        for (int r = 0; r < rows; ++r)
            if (alive[r] && !row[r].empty()) order.push_back(r);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return row[a].size() < row[b].size(); });
        for (int r : order) {
            if (!alive[r] || row[r].empty()) continue;
            int pc = -1;
            size_t best = 0;
            for (const auto& [c, v] : row[r])
                if (is_unit(v) && (pc < 0 || col[c].size() < best)) {
                    pc = c;
                    best = col[c].size();
                }
            if (pc < 0) continue;
            const T pivot = row[r].at(pc);
            std::vector<int> others(col[pc].begin(), col[pc].end());
            for (int o : others) {
                if (o == r) continue;
                T q = row[o].at(pc) * pivot; // pivot is its own inverse
                for (const auto& [c, v] : row[r]) {
                    T& cell = row[o][c];
                    bool fresh = cell == 0;
                    checked_sub_mul(cell, q, v);
                    if (cell == 0) {
                        row[o].erase(c);
                        col[c].erase(o);
                    } else if (fresh) {
                        col[c].insert(o);
                    }
                }
            }
            for (const auto& [c, v] : row[r]) col[c].erase(r);
            row[r].clear();
            alive[r] = false;
            ++units;
            progress = true;
        }
    }
    std::vector<int> live_cols;
    for (int c = 0; c < cols; ++c)
        if (!col[c].empty()) live_cols.push_back(c);
    std::map<int, int> cidx;
    for (size_t i = 0; i < live_cols.size(); ++i) cidx[live_cols[i]] = static_cast<int>(i);
    std::vector<std::vector<cpp_int>> dense;
    for (int r = 0; r < rows; ++r) {
        if (!alive[r] || row[r].empty()) continue;
        std::vector<cpp_int> line(live_cols.size());
        for (const auto& [c, v] : row[r]) line[cidx[c]] = cpp_int(v);
        dense.push_back(std::move(line));
    }
    return dense;
}

std::vector<cpp_int> dense_snf(std::vector<std::vector<cpp_int>> a) {
    std::vector<cpp_int> diag;
    const size_t m = a.size();
    const size_t n = m ? a[0].size() : 0;
    for (size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            size_t pr = m, pc = n;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == m) return diag;
            std::swap(a[t], a[pr]);
            for (auto& line : a) std::swap(line[t], line[pc]);
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                cpp_int q = a[i][t] / a[t][t];
                for (size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                cpp_int q = a[t][j] / a[t][t];
                for (size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            size_t bad = m;
            for (size_t i = t + 1; i < m && bad == m; ++i)
                for (size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            for (size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

} // namespace

std::vector<std::string> smith_invariants(int rows, int cols,
                                          const std::vector<std::vector<std::pair<int, int64_t>>>& entries) {
    int units = 0;
    std::vector<std::vector<cpp_int>> rest;
    try {
        rest = eliminate_units<int64_t>(rows, cols, entries, units);
    } catch (const Overflow&) {
        rest = eliminate_units<cpp_int>(rows, cols, entries, units);
    }
    std::vector<std::string> out(units, "1");
    std::vector<cpp_int> diag = dense_snf(std::move(rest));
    std::sort(diag.begin(), diag.end());
    for (const cpp_int& d : diag) out.push_back(d.str());
    return out;
}

HomologyReport homology(const SimplicialComplex& c) {
    HomologyReport rep;
    auto faces = all_faces(c);
    const int top = static_cast<int>(faces.size());
    for (const auto& level : faces) rep.f_vector.push_back(static_cast<int64_t>(level.size()));
    for (int k = 0; k < top; ++k) rep.euler_characteristic += (k % 2 ? -1 : 1) * rep.f_vector[k];

    std::vector<std::map<std::vector<int>, int>> index(top);
    for (int k = 0; k < top; ++k)
        for (size_t i = 0; i < faces[k].size(); ++i) index[k][faces[k][i]] = static_cast<int>(i);

    // boundary[k]: rows are k-simplices, columns (k-1)-simplices; k = 0 is the augmentation.
    std::vector<std::vector<std::vector<std::pair<int, int64_t>>>> boundary(top);
    for (int k = 0; k < top; ++k)
        for (const auto& s : faces[k]) {
            std::vector<std::pair<int, int64_t>> row;
            if (k == 0) {
                row.emplace_back(0, 1);
            } else {
                for (int i = 0; i <= k; ++i) {
                    std::vector<int> f = s;
                    f.erase(f.begin() + i);
                    row.emplace_back(index[k - 1].at(f), i % 2 ? -1 : 1);
                }
            }
            boundary[k].push_back(std::move(row));
        }

    for (int k = 1; k < top; ++k)
        for (const auto& row : boundary[k]) {
            std::map<int, int64_t> acc;
            for (auto [f, sign] : row)
                for (auto [g, s2] : boundary[k - 1][f]) acc[g] += sign * s2;
            for (const auto& [g, v] : acc)
                if (v != 0) rep.boundary_squares_to_zero = false;
        }

    // Elementary collapses keep the homology and shrink the matrices.
    std::vector<std::vector<bool>> alive(top);
    std::vector<std::vector<std::vector<int>>> cofaces(top);
    std::vector<std::vector<int>> live_cofaces(top);
    for (int k = 0; k < top; ++k) {
        alive[k].assign(faces[k].size(), true);
        cofaces[k].resize(faces[k].size());
    }
    for (int k = 1; k < top; ++k)
        for (size_t i = 0; i < boundary[k].size(); ++i)
            for (auto [f, sign] : boundary[k][i]) cofaces[k - 1][f].push_back(static_cast<int>(i));
    std::vector<std::pair<int, int>> free_faces;
    for (int k = 0; k < top; ++k) {
        live_cofaces[k].resize(faces[k].size());
        for (size_t i = 0; i < faces[k].size(); ++i) {
            live_cofaces[k][i] = static_cast<int>(cofaces[k][i].size());
            if (live_cofaces[k][i] == 1) free_faces.emplace_back(k, static_cast<int>(i));
        }
    }
    auto release = [&](int k, int f) {
        if (--live_cofaces[k][f] == 1) free_faces.emplace_back(k, f);
    };
    while (!free_faces.empty()) {
        auto [k, i] = free_faces.back();
        free_faces.pop_back();
        if (!alive[k][i] || live_cofaces[k][i] != 1) continue;
        int j = -1;
        for (int s : cofaces[k][i])
            if (alive[k + 1][s]) j = s;
        alive[k][i] = false;
        alive[k + 1][j] = false;
        for (auto [f, sign] : boundary[k + 1][j])
            if (f != i) release(k, f);
        if (k > 0)
            for (auto [f, sign] : boundary[k][i]) release(k - 1, f);
    }

    std::vector<int> live(top, 0);
    std::vector<std::vector<int>> renumber(top);
    for (int k = 0; k < top; ++k) {
        renumber[k].assign(faces[k].size(), -1);
        for (size_t i = 0; i < faces[k].size(); ++i)
            if (alive[k][i]) renumber[k][i] = live[k]++;
    }
    std::vector<int> rank(top + 1, 0);
    std::vector<std::vector<std::string>> factors(top + 1);
    for (int k = 0; k < top; ++k) {
        std::vector<std::vector<std::pair<int, int64_t>>> rows;
        for (size_t i = 0; i < faces[k].size(); ++i) {
            if (!alive[k][i]) continue;
            std::vector<std::pair<int, int64_t>> row;
            for (auto [f, sign] : boundary[k][i]) row.emplace_back(k == 0 ? 0 : renumber[k - 1][f], sign);
            rows.push_back(std::move(row));
        }
        int cols = k == 0 ? 1 : live[k - 1];
        factors[k] = smith_invariants(live[k], cols, rows);
        rank[k] = static_cast<int>(factors[k].size());
    }
    for (int k = 0; k < top; ++k) {
        rep.reduced_betti.push_back(live[k] - rank[k] - rank[k + 1]);
        std::vector<std::string> tors;
        for (const auto& f : factors[k + 1])
            if (f != "1") tors.push_back(f);
        rep.torsion.push_back(std::move(tors));
    }
    return rep;
}

BallReport ball_report(const ThetaGraph& t, const SimplicialComplex& c) {
    BallReport rep;
    rep.dimension = c.dimension();
    rep.expected_dimension = t.dimension();
    rep.dimension_matches = rep.dimension == rep.expected_dimension;
    rep.pure = c.is_pure();
    HomologyReport h = homology(c);
    rep.homology_trivial = h.reduced_trivial() && h.boundary_squares_to_zero;
    rep.euler_characteristic = h.euler_characteristic;
    // With no theta graphs the whole sphere is a single region.
    rep.regions = t.empty() ? 1 : t.num_regions();
    rep.regions_match = rep.regions == rep.dimension + 1;
    return rep;
}

} // namespace kakimizu
