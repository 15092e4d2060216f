#include "fixtures.hpp"
#include "oracles.hpp"

#include "kakimizu/complex.hpp"
#include "kakimizu/error.hpp"
#include "kakimizu/generators.hpp"
#include "kakimizu/json_io.hpp"
#include "kakimizu/surfaces.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kakimizu;

namespace {

int region_with_delta(const ThetaGraph& t, const std::vector<int>& delta) {
    for (const auto& r : t.regions())
        if (r.delta == delta) return r.id;
    return -1;
}

/// Neighbours of u in K by brute force over the 1-skeleton.
std::vector<WeightVector> skeleton_neighbours(const ThetaGraph& t, const WeightVector& u) {
    auto k = build_complex(t);
    auto adj = one_skeleton(k);
    std::vector<WeightVector> out;
    for (int v : adj[k.index_of(u)]) out.push_back(k.vertices[v]);
    std::sort(out.begin(), out.end());
    return out;
}

/// Checks that the P-arcs meet every edge once and the minimal-genus identity for every vertex
/// within distance one of the base vertex, under both empty-set conventions.
void check_realizations(const Diagram& d) {
    SurfaceModel m = make_surface_model(d);
    const int s = seifert(d).s;
    std::vector<WeightVector> targets{m.theta().base_vertex()};
    for (auto& v : neighbors_via_flypes(m.theta(), m.theta().base_vertex())) targets.push_back(v);
    for (const auto& v : targets) {
        for (auto conv : {EmptyConvention::AllPositive, EmptyConvention::AllNegative}) {
            auto r = realize(m, v, conv);
            CHECK(r.counts.n_a + r.counts.n_b == s);
            CHECK(r.chi == s - d.num_crossings());
            CHECK(r.arcs.arcs.size() == static_cast<size_t>(d.num_crossings()));
            std::vector<int> hits(d.num_edges(), 0);
            for (auto [a, b] : r.arcs.arcs) {
                ++hits[a];
                ++hits[b];
            }
            for (int h : hits) CHECK(h == 1);
            for (int e = 0; e < d.num_edges(); ++e) CHECK(r.arcs.partner[r.arcs.partner[e]] == e);
        }
    }
}

} // namespace

TEST_CASE("single flype circle") {
    SurfaceModel m = make_surface_model(fixtures::diagram("dalpha"));
    const ThetaGraph& t = m.theta();
    const WeightVector u = t.base_vertex();
    auto a = make_region_set(t, {region_with_delta(t, {0, 0, 1, 0, -1})});
    auto fs = flype_set_for_edge(t, u, a);
    REQUIRE(fs.circles.size() == 1);
    CHECK(fs.circles[0].component == 1);
    CHECK(fs.circles[0].crossing_edge == 5);
    CHECK(fs.circles[0].arc_edge == 3);
    CHECK(t.coordinate_of_edge(5) == 4);
    CHECK(fs.delta == a.delta);
    CHECK(is_coherent(t, fs, u));
}

TEST_CASE("two flype circles") {
    SurfaceModel m = make_surface_model(fixtures::diagram("dalpha"));
    const ThetaGraph& t = m.theta();
    const WeightVector u = t.base_vertex();
    auto a = adjacency(u, {0, 1, 3, 0, 0}, t);
    REQUIRE(a.has_value());
    auto fs = flype_set_for_edge(t, u, *a);
    REQUIRE(fs.circles.size() == 2);
    std::sort(fs.circles.begin(), fs.circles.end(),
              [](const FlypeCircle& x, const FlypeCircle& y) { return x.component < y.component; });
    CHECK(fs.circles[0].crossing_edge == 1);
    CHECK(fs.circles[0].arc_edge == 2);
    CHECK(fs.circles[1].crossing_edge == 5);
    CHECK(fs.circles[1].arc_edge == 3);
    CHECK(is_coherent(t, fs, u));

    FlypeSet broken = fs;
    std::swap(broken.circles[1].crossing_edge, broken.circles[1].arc_edge);
    CHECK_FALSE(is_coherent(t, broken, u));
}

TEST_CASE("labels that do not alternate are rejected") {
    ThetaComponent c;
    for (int i = 0; i < 4; ++i) c.edges.push_back({i, 1});
    ThetaGraph t({c});
    RegionSet bad;
    bad.delta = {1, 1, -1, -1};
    CHECK_THROWS_AS(flype_set_for_edge(t, {1, 1, 1, 1}, bad), InvariantError);
}

TEST_CASE("P-arcs with no flype circles") {
    SurfaceModel m = make_surface_model(fixtures::diagram("trefoil"));
    auto neg = p_arcs(m, FlypeSet{}, EmptyConvention::AllPositive);
    CHECK(neg.crossing_arc == std::vector<ArcSide>(3, ArcSide::Negative));
    CHECK(neg.arcs.size() == 3);
    auto pos = p_arcs(m, FlypeSet{}, EmptyConvention::AllNegative);
    CHECK(pos.crossing_arc == std::vector<ArcSide>(3, ArcSide::Positive));

    auto a = trace_curves(m.diagram, neg);
    auto b = trace_curves(m.diagram, pos);
    CHECK(a.n_a + a.n_b == 2);
    CHECK(b.n_a + b.n_b == 2);
}

TEST_CASE("euler characteristic formula") {
    CHECK(euler_characteristic(3, 1, 1) == -1);
    CHECK(euler_characteristic(2, 1, 1) == 0);
    CHECK(euler_characteristic(15, 4, 6) == -5);
}

TEST_CASE("realizations on fixtures") {
    for (const auto& name : fixtures::valid_diagrams()) {
        CAPTURE(name);
        check_realizations(fixtures::diagram(name));
    }
}

TEST_CASE("realization of a far vertex is refused") {
    SurfaceModel m = make_surface_model(fixtures::diagram("dalpha"));
    auto k = build_complex(m.theta());
    const int base = k.index_of(m.theta().base_vertex());
    auto dist = distances_from(k, base);
    const auto far = std::find_if(dist.begin(), dist.end(), [](int x) { return x >= 2; });
    REQUIRE(far != dist.end());
    CHECK_THROWS_AS(realize(m, k.vertices[far - dist.begin()]), PreconditionError);
}

TEST_CASE("surface model preconditions") {
    CHECK_THROWS_AS(make_surface_model(fixtures::diagram("trefoil_kink")), PreconditionError);
}

TEST_CASE("neighbours via flypes match the 1-skeleton") {
    ThetaGraph empty;
    CHECK(neighbors_via_flypes(empty, {}).empty());

    ThetaComponent c;
    c.edges = {{0, 1}, {1, 0}};
    ThetaGraph edge({c});
    CHECK(neighbors_via_flypes(edge, {1, 0}) == std::vector<WeightVector>{{0, 1}});

    ThetaGraph t = parse_theta(fixtures::text("dalpha.theta.json"));
    auto k = build_complex(t);
    for (const auto& v : k.vertices) CHECK(neighbors_via_flypes(t, v) == skeleton_neighbours(t, v));

    std::mt19937_64 rng(71);
    RandomThetaOptions opt;
    opt.max_facets = 300;
    for (int i = 0; i < 15; ++i) {
        ThetaGraph r = random_theta(rng, opt);
        auto base = r.base_vertex();
        CHECK(neighbors_via_flypes(r, base) == skeleton_neighbours(r, base));
        for (const auto& v : neighbors_via_flypes(r, base)) {
            auto a = adjacency(base, v, r);
            REQUIRE(a.has_value());
            CHECK(is_coherent(r, flype_set_for_edge(r, base, *a), base));
        }
    }
}

TEST_CASE("realizations on generated diagrams") {
    std::mt19937_64 rng(73);
    int checked = 0;
    for (int i = 0; i < 40 && checked < 15; ++i) {
        Diagram d = random_special_alternating(rng, 4 + i % 8);
        if (!validate(d).all()) continue;
        CAPTURE(diagram_to_json(d));
        check_realizations(d);
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("flype and P-arc JSON round trips") {
    SurfaceModel m = make_surface_model(fixtures::diagram("dalpha"));
    const ThetaGraph& t = m.theta();
    auto a = adjacency(t.base_vertex(), {0, 1, 3, 0, 0}, t);
    REQUIRE(a.has_value());
    auto fs = flype_set_for_edge(t, t.base_vertex(), *a);
    auto back = flype_set_from_json(to_json(fs));
    REQUIRE(back.circles.size() == fs.circles.size());
    for (size_t i = 0; i < fs.circles.size(); ++i) {
        CHECK(back.circles[i].component == fs.circles[i].component);
        CHECK(back.circles[i].crossing_edge == fs.circles[i].crossing_edge);
        CHECK(back.circles[i].arc_edge == fs.circles[i].arc_edge);
    }
    CHECK(back.delta == fs.delta);
    CHECK(back.positive_regions == fs.positive_regions);

    auto arcs = p_arcs(m, fs);
    auto arcs_back = p_arcs_from_json(to_json(arcs, m.diagram), m.diagram);
    CHECK(arcs_back.crossing_arc == arcs.crossing_arc);
    CHECK(arcs_back.arcs == arcs.arcs);
    CHECK(arcs_back.partner == arcs.partner);
}
