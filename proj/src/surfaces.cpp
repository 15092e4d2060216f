#include "kakimizu/surfaces.hpp"

#include "kakimizu/error.hpp"

#include <algorithm>

namespace kakimizu {

SurfaceModel make_surface_model(const Diagram& d) {
    if (!d.is_connected() || !is_alternating(d) || !checkerboard(d))
        throw PreconditionError("surfaces need a connected special alternating diagram");
    SurfaceModel m{d, theta_pipeline(d), {}, {}, {}, {}};
    const EmbeddedGraph& f = m.pipeline.augmented;
    m.f_faces = f.trace_faces();

    m.f_edge.assign(d.num_crossings(), -1);
    for (int id : f.edge_ids())
        for (int c : f.edge(id).crossings) m.f_edge[c] = id;

    // The black vertex at the smoothing corner fixes which white corner is positive.
    const std::vector<int> black = black_vertex_of_face(d);
    m.positive_corner.resize(d.num_crossings());
    for (int c = 0; c < d.num_crossings(); ++c) {
        if (m.f_edge[c] < 0) throw InvariantError("crossing missing from F(D)");
        int base = d.smoothing_corner(c);
        int v = black[d.face_at(c, base)];
        m.positive_corner[c] = f.orientation(v) == Orientation::Ccw ? (base + 3) % 4 : (base + 1) % 4;
    }

    m.coordinate_of_f_edge.assign(f.edge_capacity(), -1);
    const ThetaExtraction& ex = m.pipeline.extraction;
    for (size_t c = 0; c < ex.component_edges.size(); ++c)
        for (size_t p = 0; p < ex.component_edges[c].size(); ++p)
            m.coordinate_of_f_edge[ex.component_edges[c][p]] =
                m.theta().coordinate(static_cast<int>(c), static_cast<int>(p));
    return m;
}

namespace {

struct CircleCoords {
    int component; // index
    int c;         // position of the crossing edge
    int a;         // position of the arc edge
};

CircleCoords coords_of(const ThetaGraph& t, const FlypeCircle& circle) {
    int cc = t.coordinate_of_edge(circle.crossing_edge);
    int ca = t.coordinate_of_edge(circle.arc_edge);
    int comp = t.component_of_coordinate(cc);
    if (t.component_of_coordinate(ca) != comp || cc == ca)
        throw PreconditionError("flype circle edges must be distinct edges of one component");
    if (t.components()[comp].id != circle.component)
        throw PreconditionError("flype circle names the wrong component");
    return {comp, t.position_of_coordinate(cc), t.position_of_coordinate(ca)};
}

std::vector<int> labels_of(const ThetaGraph& t, const FlypeSet& fs) {
    std::vector<int> labels(t.num_edges(), 0);
    for (const FlypeCircle& circle : fs.circles) {
        int cc = t.coordinate_of_edge(circle.crossing_edge);
        int ca = t.coordinate_of_edge(circle.arc_edge);
        if (labels[cc] != 0 || labels[ca] != 0) throw PreconditionError("flype circles share an edge");
        labels[cc] = -1;
        labels[ca] = 1;
    }
    return labels;
}

} // namespace

FlypeSet flype_set_for_edge(const ThetaGraph& t, const WeightVector& u, const RegionSet& a) {
    FlypeSet fs;
    fs.delta = a.delta;
    fs.positive_regions = a.regions;
    for (int ci = 0; ci < t.num_components(); ++ci) {
        const ThetaComponent& comp = t.components()[ci];
        const int k = comp.size();
        std::vector<int> nonzero;
        for (int p = 0; p < k; ++p)
            if (a.delta[t.coordinate(ci, p)] != 0) nonzero.push_back(p);
        for (size_t i = 0; i < nonzero.size(); ++i) {
            int p = nonzero[i];
            int q = nonzero[(i + 1) % nonzero.size()];
            int lp = a.delta[t.coordinate(ci, p)];
            int lq = a.delta[t.coordinate(ci, q)];
            if (lp == lq) throw InvariantError("edge labels do not alternate around a theta component");
            if (lp != -1) continue;
            if (u.at(t.coordinate(ci, p)) < 1) throw InvariantError("flype crossing edge carries no crossing");
            fs.circles.push_back({comp.id, comp.edges[p].id, comp.edges[q].id});
        }
    }
    return fs;
}

bool is_coherent(const ThetaGraph& t, const FlypeSet& fs, const WeightVector& u) {
    if (fs.empty()) return fs.positive_regions.empty();
    std::vector<int> labels;
    try {
        labels = labels_of(t, fs);
        for (const FlypeCircle& circle : fs.circles) {
            CircleCoords cc = coords_of(t, circle);
            const int k = t.components()[cc.component].size();
            if (u.at(t.coordinate(cc.component, cc.c)) < 1) return false;
            // The arc edge is the first labelled edge on the positive side.
            for (int step = 1; step < k; ++step) {
                int p = (cc.c + step) % k;
                if (labels[t.coordinate(cc.component, p)] == 0) continue;
                if (p != cc.a) return false;
                break;
            }
        }
    } catch (const PreconditionError&) {
        return false;
    }
    if (!fs.delta.empty() && fs.delta != labels) return false;
    auto a = region_set_for_delta(labels, t);
    return a && a->regions == fs.positive_regions;
}

PArcConfig p_arcs(const SurfaceModel& m, const FlypeSet& fs, EmptyConvention convention) {
    const Diagram& d = m.diagram;
    const ThetaGraph& t = m.theta();
    const EmbeddedGraph& f = m.pipeline.augmented;
    const ThetaExtraction& ex = m.pipeline.extraction;
    const int n = d.num_crossings();

    WeightVector base = t.base_vertex();
    if (!is_coherent(t, fs, base)) throw PreconditionError("flype set is not coherent");
    std::vector<int> labels = fs.empty() ? std::vector<int>(t.num_edges(), 0) : labels_of(t, fs);
    std::vector<bool> in_lambda(t.num_regions(), false);
    for (int r : fs.positive_regions) in_lambda[r] = true;

    // The flype crossing of an edge is its most negative crossing.
    auto first_crossing = [&](int fe) {
        const GraphEdge& e = f.edge(fe);
        return f.orientation(e.a) == Orientation::Ccw ? e.crossings.front() : e.crossings.back();
    };
    auto face_status = [&](int fe) {
        int r = ex.face_region.at(f.positive_side(fe, m.f_faces));
        if (ex.face_region.at(f.negative_side(fe, m.f_faces)) != r)
            throw InvariantError("edge outside theta(D) separates regions");
        return in_lambda[r];
    };

    PArcConfig p;
    p.crossing_arc.assign(n, ArcSide::Negative);
    std::vector<bool> flype_crossing(n, false);
    for (int x = 0; x < n; ++x) {
        bool positive;
        if (fs.empty()) {
            positive = convention == EmptyConvention::AllPositive;
        } else {
            int fe = m.f_edge[x];
            int coord = m.coordinate_of_f_edge[fe];
            if (coord < 0) {
                positive = face_status(fe);
            } else if (labels[coord] == 0) {
                positive = in_lambda[t.plus_owner(coord)];
            } else if (labels[coord] == 1) {
                positive = false;
            } else {
                flype_crossing[x] = x == first_crossing(fe);
                positive = true;
            }
        }
        if (flype_crossing[x]) {
            p.crossing_arc[x] = ArcSide::Flype;
            continue;
        }
        // Crossings on the positive side of the circles get arcs on their negative side.
        int pc = m.positive_corner[x];
        int corner = positive ? (pc + 2) % 4 : pc;
        p.crossing_arc[x] = positive ? ArcSide::Negative : ArcSide::Positive;
        p.arcs.emplace_back(d.edge_at(x, corner), d.edge_at(x, (corner + 1) % 4));
    }

    for (const FlypeCircle& circle : fs.circles) {
        CircleCoords cc = coords_of(t, circle);
        const int k = t.components()[cc.component].size();
        const int span = (cc.a - cc.c + k) % k;
        auto inside = [&](int local_face) { return (local_face - cc.c + k) % k < span; };
        const int g1 = first_crossing(ex.component_edges[cc.component][cc.c]);

        auto crossing_side = [&](int x) {
            int fe = m.f_edge[x];
            int coord = m.coordinate_of_f_edge[fe];
            if (coord >= 0 && t.component_of_coordinate(coord) == cc.component) {
                int j = t.position_of_coordinate(coord);
                if (j == cc.c) return true;
                if (j == cc.a) return false;
                int off = (j - cc.c + k) % k;
                return off > 0 && off < span;
            }
            return inside(ex.local_face[cc.component].at(f.positive_side(fe, m.f_faces)));
        };
        auto end_side = [&](StrandEnd s) {
            if (s.crossing == g1) {
                int pc = m.positive_corner[g1];
                return s.slot == pc || s.slot == (pc + 1) % 4;
            }
            return crossing_side(s.crossing);
        };
        std::vector<int> crossed;
        for (int e = 0; e < d.num_edges(); ++e)
            if (end_side(d.tail(e)) != end_side(d.head(e))) crossed.push_back(e);
        if (crossed.size() != 2) throw InvariantError("flype circle does not cross exactly two diagram edges");
        p.arcs.emplace_back(crossed[0], crossed[1]);
    }

    p.partner.assign(d.num_edges(), -1);
    for (auto [x, y] : p.arcs) {
        if (x == y || p.partner[x] >= 0 || p.partner[y] >= 0)
            throw InvariantError("P-arcs do not meet each diagram edge exactly once");
        p.partner[x] = y;
        p.partner[y] = x;
    }
    for (int e = 0; e < d.num_edges(); ++e)
        if (p.partner[e] < 0) throw InvariantError("P-arcs do not meet each diagram edge exactly once");
    return p;
}

CurveCounts trace_curves(const Diagram& d, const PArcConfig& p) {
    const int ne = d.num_edges();
    if (static_cast<int>(p.partner.size()) != ne) throw PreconditionError("P-arc configuration does not fit the diagram");
    auto count = [&](int s1, int s2) {
        std::vector<int> other(ne, -1);
        for (int x = 0; x < d.num_crossings(); ++x) {
            int a = d.edge_at(x, s1), b = d.edge_at(x, s2);
            if (other[a] >= 0 || other[b] >= 0) throw PreconditionError("diagram is not alternating");
            other[a] = b;
            other[b] = a;
        }
        std::vector<bool> seen(ne, false);
        int curves = 0;
        for (int start = 0; start < ne; ++start) {
            if (seen[start]) continue;
            ++curves;
            int e = start;
            do {
                seen[e] = true;
                int q = p.partner[e];
                if (q < 0) throw InvariantError("open trace");
                seen[q] = true;
                e = other[q];
            } while (e != start);
        }
        return curves;
    };
    return {count(1, 3), count(0, 2)};
}

int euler_characteristic(int n, int n_a, int n_b) { return -n + n_a + n_b; }

std::vector<WeightVector> neighbors_via_flypes(const ThetaGraph& t, const WeightVector& u) {
    std::vector<WeightVector> out;
    const int m = t.num_regions();
    if (t.empty()) return out;
    if (m > 24) throw PreconditionError("too many regions for subset enumeration");
    for (uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        std::vector<int> regions;
        for (int r = 0; r < m; ++r)
            if (mask & (1u << r)) regions.push_back(r);
        RegionSet a = make_region_set(t, regions);
        WeightVector v = u;
        bool ok = true;
        for (int e = 0; e < t.num_edges() && ok; ++e) {
            v[e] += a.delta[e];
            ok = std::abs(a.delta[e]) <= 1 && v[e] >= 0;
        }
        if (!ok) continue;
        auto found = adjacency(u, v, t);
        if (found && found->regions == a.regions) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SurfaceRealization realize(const SurfaceModel& m, const WeightVector& v, EmptyConvention convention) {
    SurfaceRealization s;
    s.vertex = v;
    const WeightVector base = m.theta().base_vertex();
    if (v != base) {
        auto a = adjacency(base, v, m.theta());
        if (!a) throw PreconditionError("vertex is not adjacent to the base vertex");
        s.flypes = flype_set_for_edge(m.theta(), base, *a);
    }
    s.arcs = p_arcs(m, s.flypes, convention);
    s.counts = trace_curves(m.diagram, s.arcs);
    s.chi = euler_characteristic(m.diagram.num_crossings(), s.counts.n_a, s.counts.n_b);
    return s;
}

} // namespace kakimizu
