#include "fixtures.hpp"
#include "oracles.hpp"

#include "kakimizu/complex.hpp"
#include "kakimizu/error.hpp"
#include "kakimizu/generators.hpp"
#include "kakimizu/structure.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kakimizu;

namespace {

ThetaGraph single(std::vector<int> weights) {
    ThetaComponent c;
    for (size_t i = 0; i < weights.size(); ++i) c.edges.push_back({static_cast<int>(i), weights[i]});
    return ThetaGraph({c});
}

SimplicialComplex from_facets(int n, std::vector<std::vector<int>> facets) {
    SimplicialComplex c;
    for (int v = 0; v < n; ++v) c.vertices.push_back({v});
    c.maximal_simplices = std::move(facets);
    c.canonicalize();
    return c;
}

/// An interval with its two vertices ordered.
SimplicialComplex ordered_interval() {
    SimplicialComplex c = from_facets(2, {{0, 1}});
    VertexOrder o;
    o.add(0, 1);
    c.order = o;
    return c;
}

int64_t alternating_sum(const std::vector<int64_t>& f) {
    int64_t chi = 0;
    for (size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * f[k];
    return chi;
}

} // namespace

TEST_CASE("small edgewise subdivisions") {
    auto e11 = esd(1, 1);
    CHECK(e11.num_vertices() == 2);
    CHECK(e11.maximal_simplices.size() == 1);

    auto e12 = esd(1, 2);
    CHECK(e12.num_vertices() == 3);
    CHECK(e12.maximal_simplices.size() == 2);

    auto e22 = esd(2, 2);
    CHECK(e22.num_vertices() == 6);
    CHECK(e22.maximal_simplices.size() == 4);
    CHECK(e22.dimension() == 2);

    auto e0 = esd(0, 3);
    CHECK(e0.num_vertices() == 1);
}

TEST_CASE("colour scheme counts match the brute-force enumeration") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            auto schemes = colour_schemes(n, m);
            auto brute = oracle::colour_schemes(n, m);
            CHECK(schemes.size() == brute.size());
            for (const auto& s : schemes) CHECK(s.valid());
            std::set<std::vector<std::vector<int>>> a, b(brute.begin(), brute.end());
            for (const auto& s : schemes) {
                std::vector<std::vector<int>> cols;
                for (int j = 0; j < s.columns(); ++j) cols.push_back(s.column(j));
                a.insert(cols);
            }
            CHECK(a == b);
            auto e = esd(n, m);
            CHECK(e.maximal_simplices.size() == brute.size());
            CHECK(static_cast<int64_t>(e.num_vertices()) == oracle::binomial(n + m, n));
            CHECK(e.is_pure());
            CHECK(e.dimension() == n);
        }
}

TEST_CASE("colour scheme validity") {
    ColourScheme s;
    s.n = 2;
    s.rows = {{0, 0, 1}, {1, 2, 2}};
    CHECK(s.valid());
    s.rows = {{0, 1, 1}, {0, 1, 2}}; // not weakly increasing across rows
    CHECK_FALSE(s.valid());
    s.rows = {{0, 0, 0}, {1, 1, 1}}; // repeated columns
    CHECK_FALSE(s.valid());
}

TEST_CASE("B map") {
    CHECK(esd_column({2, 0, 1}) == std::vector<int>{0, 0, 2});
    CHECK(esd_weights({0, 0, 2}, 2) == std::vector<int>{2, 0, 1});
    CHECK(esd_column({0, 0, 3}) == std::vector<int>{2, 2, 2});

    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 4; ++m) {
            std::vector<int> w(n + 1, 0);
            w[0] = m;
            ThetaGraph t = single(w);
            auto k = build_complex(t);
            auto e = esd(n, m);
            auto f = theta_to_esd_map(t, k, e);
            CHECK(verify_iso(k, e, f));
        }
    CHECK_THROWS_AS(theta_to_esd_map(parse_theta(fixtures::text("dalpha.theta.json")), SimplicialComplex{},
                                     esd(1, 1)),
                    PreconditionError);
}

TEST_CASE("verify_iso rejects non-isomorphisms") {
    auto e = esd(2, 2);
    std::vector<int> id(e.num_vertices());
    for (int v = 0; v < e.num_vertices(); ++v) id[v] = v;
    CHECK(verify_iso(e, e, id));
    std::vector<int> swap = id;
    std::swap(swap[0], swap[1]);
    CHECK_FALSE(verify_iso(e, e, swap));
    std::vector<int> collapse = id;
    collapse[1] = 0;
    CHECK_FALSE(verify_iso(e, e, collapse));
}

TEST_CASE("ordered product of two intervals") {
    auto p = ordered_product(ordered_interval(), ordered_interval());
    CHECK(p.num_vertices() == 4);
    CHECK(p.maximal_simplices == std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}});
    REQUIRE(p.order.has_value());
    CHECK(audit_order(p, *p.order).ok());

    SimplicialComplex point = from_facets(1, {{0}});
    point.order = VertexOrder{};
    auto q = ordered_product(ordered_interval(), point);
    CHECK(q.num_vertices() == 2);
    CHECK(q.maximal_simplices.size() == 1);

    SimplicialComplex unordered = from_facets(2, {{0, 1}});
    unordered.order = VertexOrder{};
    CHECK_THROWS_AS(ordered_product(unordered, ordered_interval()), PreconditionError);
}

TEST_CASE("product decomposition of the worked example") {
    ThetaGraph t = parse_theta(fixtures::text("dalpha.theta.json"));
    auto k = build_complex(t);
    for (int r = 0; r < t.num_regions(); ++r) {
        CAPTURE(r);
        auto p = product_model(t, r);
        auto f = label_map(k, p);
        CHECK(verify_iso(k, p, f));
    }
    auto split = split_theta(t);
    CHECK(split.first.num_components() + split.second.num_components() == 2);
    CHECK_THROWS_AS(split_theta(single({1, 1})), PreconditionError);
}

TEST_CASE("product projections are simplicial") {
    SimplicialComplex a = esd(1, 2), b = esd(2, 1);
    for (auto* c : {&a, &b}) {
        VertexOrder o;
        // Lexicographic order on column labels is a product-compatible order for esd.
        auto adj = one_skeleton(*c);
        for (int u = 0; u < c->num_vertices(); ++u)
            for (int v : adj[u])
                if (c->vertices[u] < c->vertices[v]) o.add(u, v);
        c->order = o;
        REQUIRE(audit_order(*c, o).ok());
    }
    auto p = ordered_product(a, b);
    const int nb = b.num_vertices();
    auto is_face = [](const SimplicialComplex& c, std::set<int> s) {
        for (const auto& m : c.maximal_simplices)
            if (std::includes(m.begin(), m.end(), s.begin(), s.end())) return true;
        return false;
    };
    for (const auto& s : p.maximal_simplices) {
        std::set<int> first, second;
        for (int v : s) {
            first.insert(v / nb);
            second.insert(v % nb);
        }
        CHECK(is_face(a, first));
        CHECK(is_face(b, second));
    }
    CHECK(p.dimension() == a.dimension() + b.dimension());
}

TEST_CASE("homology examples") {
    auto simplex = homology(from_facets(4, {{0, 1, 2, 3}}));
    CHECK(simplex.reduced_trivial());
    CHECK(simplex.euler_characteristic == 1);

    auto circle = homology(from_facets(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK_FALSE(circle.reduced_trivial());
    CHECK(circle.reduced_betti.at(1) == 1);
    CHECK(circle.euler_characteristic == 0);

    // Minimal 6-vertex triangulation of the projective plane.
    auto rp2 = homology(from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}}));
    CHECK(rp2.f_vector == std::vector<int64_t>{6, 15, 10});
    CHECK(rp2.reduced_betti == std::vector<int>{0, 0, 0});
    CHECK(rp2.torsion.at(1) == std::vector<std::string>{"2"});
    CHECK_FALSE(rp2.reduced_trivial());

    // Seven-vertex torus.
    std::vector<std::vector<int>> torus;
    for (int i = 0; i < 7; ++i) {
        torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
        torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    auto t2 = homology(from_facets(7, torus));
    CHECK(t2.reduced_betti == std::vector<int>{0, 2, 1});
    CHECK(t2.euler_characteristic == 0);

    auto two_points = homology(from_facets(2, {{0}, {1}}));
    CHECK(two_points.reduced_betti.at(0) == 1);
}

TEST_CASE("homology of the worked example") {
    auto k = build_complex(parse_theta(fixtures::text("dalpha.theta.json")));
    auto h = homology(k);
    CHECK(h.f_vector == std::vector<int64_t>{20, 64, 72, 27});
    CHECK(h.reduced_trivial());
    CHECK(h.euler_characteristic == 1);
    CHECK(h.boundary_squares_to_zero);
}

TEST_CASE("Smith normal form") {
    // [[2, 4], [6, 8]] has invariant factors 2 and 4.
    auto inv = smith_invariants(2, 2, {{{0, 2}, {1, 4}}, {{0, 6}, {1, 8}}});
    CHECK(inv == std::vector<std::string>{"2", "4"});
    CHECK(smith_invariants(1, 3, {{{0, 1}, {1, 1}, {2, 1}}}) == std::vector<std::string>{"1"});
}

TEST_CASE("ball report") {
    ThetaGraph t = parse_theta(fixtures::text("dalpha.theta.json"));
    auto r = ball_report(t, build_complex(t));
    CHECK(r.ok());
    CHECK(r.dimension == 3);
    CHECK(r.regions == 4);

    ThetaGraph empty;
    auto e = ball_report(empty, build_complex(empty));
    CHECK(e.ok());
    CHECK(e.dimension == 0);

    for (int k = 2; k <= 5; ++k) {
        std::vector<int> w(k, 0);
        w[0] = 2;
        ThetaGraph s = single(w);
        auto b = ball_report(s, build_complex(s));
        CHECK(b.ok());
        CHECK(b.dimension == k - 1);
    }
}

TEST_CASE("homology and products on random theta graphs") {
    std::mt19937_64 rng(61);
    RandomThetaOptions opt;
    opt.max_facets = 300;
    for (int i = 0; i < 20; ++i) {
        ThetaGraph t = random_theta(rng, opt);
        CAPTURE(theta_to_json(t));
        auto k = build_complex(t);
        auto h = homology(k);
        CHECK(h.boundary_squares_to_zero);
        CHECK(h.euler_characteristic == alternating_sum(h.f_vector));
        int64_t from_betti = 1;
        for (size_t d = 0; d < h.reduced_betti.size(); ++d) from_betti += (d % 2 == 0 ? 1 : -1) * h.reduced_betti[d];
        CHECK(h.euler_characteristic == from_betti);
        CHECK(h.reduced_trivial());
        CHECK(ball_report(t, k).ok());
        for (int r = 0; r < t.num_regions(); ++r) CHECK(verify_iso(k, product_model(t, r), label_map(k, product_model(t, r))));
    }
}
