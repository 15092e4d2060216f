#include "fixtures.hpp"
#include "oracles.hpp"

#include "kakimizu/error.hpp"
#include "kakimizu/generators.hpp"
#include "kakimizu/theta.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kakimizu;

namespace {

std::vector<std::vector<int>> sorted_deltas(const ThetaGraph& t) {
    std::vector<std::vector<int>> out;
    for (const auto& r : t.regions()) out.push_back(r.delta);
    std::sort(out.begin(), out.end());
    return out;
}

ThetaComponent component(int id, std::vector<int> weights, Placement p = {}) {
    ThetaComponent c;
    c.id = id;
    for (size_t i = 0; i < weights.size(); ++i) c.edges.push_back({id * 10 + static_cast<int>(i), weights[i]});
    c.placement = p;
    return c;
}

/// A face bounded by two distinct edges.
bool is_bigon(const std::vector<HalfEdge>& face) { return face.size() == 2 && face[0].edge != face[1].edge; }

} // namespace

TEST_CASE("bigon reduction collapses parallel classes") {
    auto trefoil = reduce_bigons(black_region_graph(fixtures::diagram("trefoil")));
    REQUIRE(trefoil.num_edges() == 1);
    CHECK(trefoil.edge(trefoil.edge_ids()[0]).weight == 3);
    CHECK(trefoil.edge(trefoil.edge_ids()[0]).crossings.size() == 3);

    auto hopf = reduce_bigons(black_region_graph(fixtures::diagram("hopf")));
    REQUIRE(hopf.num_edges() == 1);
    CHECK(hopf.edge(hopf.edge_ids()[0]).weight == 2);

    auto again = reduce_bigons(trefoil);
    CHECK(rotation_signature(again) == rotation_signature(trefoil));
}

TEST_CASE("bigon reduction preserves total weight") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        Diagram d = random_special_alternating(rng, 3 + i % 8);
        auto g = reduce_bigons(black_region_graph(d));
        int total = 0;
        for (int id : g.edge_ids()) total += g.edge(id).weight;
        CHECK(total == d.num_crossings());
        auto ft = g.trace_faces();
        for (const auto& face : ft.darts) CHECK_FALSE(is_bigon(face));
    }
}

TEST_CASE("theta graph of the worked example") {
    auto p = theta_pipeline(fixtures::diagram("dalpha"));
    const ThetaGraph& t = p.theta();
    REQUIRE(t.num_components() == 2);
    std::vector<int> sizes, totals;
    for (const auto& c : t.components()) {
        sizes.push_back(c.size());
        totals.push_back(c.total_weight());
    }
    CHECK(sizes == std::vector<int>{2, 3});
    CHECK(totals == std::vector<int>{1, 3});
    CHECK(t.base_vertex() == std::vector<int>{1, 0, 2, 0, 1});
    CHECK(t.num_regions() == 4);
    CHECK(t.dimension() == 3);

    std::vector<std::vector<int>> expected{
        {-1, 1, 0, 0, 0}, {0, 0, 0, -1, 1}, {0, 0, 1, 0, -1}, {1, -1, -1, 1, 0}};
    CHECK(sorted_deltas(t) == expected);

    auto file = parse_theta(fixtures::text("dalpha.theta.json"));
    CHECK(equivalent(file, t));
}

TEST_CASE("graphs without parallel edges give an empty theta graph") {
    auto t = theta_pipeline(fixtures::diagram("trefoil")).theta();
    CHECK(t.empty());
    CHECK(t.num_edges() == 0);
    CHECK(t.base_vertex().empty());
}

TEST_CASE("regions of small theta graphs") {
    ThetaGraph single({component(0, {2, 1})});
    CHECK(single.num_regions() == 2);
    CHECK(sorted_deltas(single) == std::vector<std::vector<int>>{{-1, 1}, {1, -1}});

    ThetaGraph nested({component(0, {1, 1}), component(1, {1, 1}, {0, 1, 0})});
    CHECK(nested.num_regions() == 3);

    ThetaGraph side_by_side({component(0, {1, 1}), component(1, {1, 1})});
    CHECK(side_by_side.num_regions() == 3);
    for (const auto& t : {single, nested, side_by_side}) {
        auto oracle_deltas = oracle::region_deltas(t);
        std::sort(oracle_deltas.begin(), oracle_deltas.end());
        CHECK(sorted_deltas(t) == oracle_deltas);
    }
}

TEST_CASE("theta parse errors") {
    CHECK_THROWS_AS(parse_theta(R"({"components":[{"id":0,"edges":[{"id":0,"weight":1}],
        "placement":{"parent":"sphere","parent_face":0,"outer_face":0}}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_theta(R"({"components":[{"id":0,"edges":[{"id":0,"weight":0},{"id":1,"weight":0}],
        "placement":{"parent":"sphere","parent_face":0,"outer_face":0}}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_theta(R"({"components":[{"id":0,"edges":[{"id":0,"weight":1},{"id":1,"weight":0}],
        "placement":{"parent":7,"parent_face":0,"outer_face":0}}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_theta("[1,2"), ParseError);
}

TEST_CASE("region properties on random theta graphs") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        ThetaGraph t = random_theta(rng);
        CAPTURE(theta_to_json(t));
        int faces = 0;
        for (const auto& c : t.components()) faces += c.size();
        CHECK(t.num_regions() == faces - t.num_components() + 1);

        std::vector<int> plus(t.num_edges(), 0), minus(t.num_edges(), 0), sum(t.num_edges(), 0);
        for (const auto& r : t.regions()) {
            for (int c : r.boundary_plus) ++plus[c];
            for (int c : r.boundary_minus) ++minus[c];
            for (int e = 0; e < t.num_edges(); ++e) sum[e] += r.delta[e];
        }
        for (int e = 0; e < t.num_edges(); ++e) {
            CHECK(plus[e] == 1);
            CHECK(minus[e] == 1);
            CHECK(sum[e] == 0);
        }
        auto oracle_deltas = oracle::region_deltas(t);
        std::sort(oracle_deltas.begin(), oracle_deltas.end());
        CHECK(sorted_deltas(t) == oracle_deltas);
        CHECK(equivalent(parse_theta(theta_to_json(t)), t));
    }
}

TEST_CASE("augmentation is independent of the insertion order") {
    std::vector<Diagram> diagrams;
    for (const auto& name : fixtures::valid_diagrams()) diagrams.push_back(fixtures::diagram(name));
    std::mt19937_64 rng(41);
    for (int i = 0; i < 10; ++i) diagrams.push_back(random_special_alternating(rng, 4 + i));
    for (size_t i = 0; i < diagrams.size(); ++i) {
        auto reduced = reduce_bigons(black_region_graph(diagrams[i]));
        auto reference = rotation_signature(augment_flype_arcs(reduced));
        for (uint64_t seed = 1; seed <= 5; ++seed) {
            CAPTURE(i);
            CAPTURE(seed);
            CHECK(rotation_signature(augment_flype_arcs(reduced, seed)) == reference);
        }
    }
}

TEST_CASE("augmented graph has no bigon faces") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 20; ++i) {
        auto p = theta_pipeline(random_special_alternating(rng, 4 + i % 8));
        auto ft = p.augmented.trace_faces();
        for (const auto& face : ft.darts) CHECK_FALSE(is_bigon(face));
        CHECK(p.augmented.is_spherical(ft));
    }
}
