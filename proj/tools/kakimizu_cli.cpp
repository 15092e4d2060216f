// Command-line front end: reads diagram or theta JSON, prints JSON reports.

#include "kakimizu/complex.hpp"
#include "kakimizu/diagram.hpp"
#include "kakimizu/error.hpp"
#include "kakimizu/generators.hpp"
#include "kakimizu/json_io.hpp"
#include "kakimizu/structure.hpp"
#include "kakimizu/surfaces.hpp"
#include "kakimizu/theta.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

using namespace kakimizu;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

/// Bad command line or unreadable input file.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::string output;
    uint64_t seed = 1;
};

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A parsed input: a diagram (with its theta graph) or a bare theta graph.
struct Input {
    std::optional<Diagram> diagram;
    ThetaGraph theta;
};

Input load(const std::string& path, bool need_theta = true) {
    Json j = parse_json_text(read_text(path));
    Input in;
    if (j.is_object() && j.contains("crossings")) {
        in.diagram = diagram_from_json(j);
        if (need_theta) in.theta = theta_pipeline(*in.diagram).theta();
    } else if (j.is_object() && j.contains("components")) {
        in.theta = theta_from_json(j);
    } else {
        throw ParseError("input is neither a diagram nor a theta graph");
    }
    return in;
}

Diagram load_diagram(const std::string& path) {
    Input in = load(path, false);
    if (!in.diagram) throw ParseError("this command needs a diagram");
    return *in.diagram;
}

void emit(const Options& opt, const Json& j) {
    std::string text = opt.format == "compact" ? j.dump() : j.dump(2);
    if (opt.output.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw UsageError("cannot write " + opt.output);
    out << text << '\n';
}

bool connected(const SimplicialComplex& c) {
    for (int d : distances_from(c, 0))
        if (d < 0) return false;
    return true;
}

ThetaGraph single_component(int n, int m) {
    ThetaComponent c;
    for (int i = 0; i <= n; ++i) c.edges.push_back({i, i == 0 ? m : 0});
    return ThetaGraph({c});
}

/// Checks the randomized properties; returns the summary and whether all passed.
std::pair<Json, bool> selftest(uint64_t seed, int thetas, int diagrams) {
    std::mt19937_64 rng(seed);
    bool ok = true;
    Json failures = Json::array();
    auto fail = [&](const std::string& what, const Json& instance) {
        ok = false;
        failures.push_back({{"check", what}, {"instance", instance}});
    };

    for (int i = 0; i < thetas; ++i) {
        ThetaGraph t = random_theta(rng);
        SimplicialComplex k = build_complex(t);
        for (int r = 0; r < t.num_regions(); ++r) {
            SimplicialComplex p = product_model(t, r);
            if (!verify_iso(k, p, label_map(k, p))) fail("product model", to_json(t));
        }
        if (!ball_report(t, k).ok()) fail("ball", to_json(t));
        if (cycle_simplices(t, k) != k.maximal_simplices) fail("flag property", to_json(t));
        if (!connected(k)) fail("connected", to_json(t));
    }

    std::uniform_int_distribution<int> size(2, 10);
    for (int i = 0; i < diagrams; ++i) {
        Diagram d = random_special_alternating(rng, size(rng));
        Json jd = to_json(d);
        ValidationReport v = validate(d);
        if (!v.connected || !v.alternating || !v.special) fail("generated diagram", jd);
        ThetaPipeline p = theta_pipeline(d);
        auto reference = rotation_signature(p.augmented);
        for (uint64_t s = 1; s <= 5; ++s)
            if (rotation_signature(augment_flype_arcs(p.reduced, seed + s)) != reference) fail("augmentation order", jd);
        SurfaceModel m = make_surface_model(d);
        const ThetaGraph& t = m.theta();
        const int s_count = seifert(d).s;
        std::vector<WeightVector> vertices{t.base_vertex()};
        if (!t.empty() && predicted_facets(t) <= 20000) {
            SimplicialComplex k = build_complex(t);
            auto near = neighbors_via_flypes(t, t.base_vertex());
            std::vector<WeightVector> ball;
            auto dist = distances_from(k, k.index_of(t.base_vertex()));
            for (int u = 0; u < k.num_vertices(); ++u)
                if (dist[u] == 1) ball.push_back(k.vertices[u]);
            std::sort(ball.begin(), ball.end());
            if (near != ball) fail("neighbours", jd);
            vertices.insert(vertices.end(), near.begin(), near.end());
        }
        for (const WeightVector& u : vertices) {
            SurfaceRealization r = realize(m, u);
            if (r.counts.n_a + r.counts.n_b != s_count) fail("euler characteristic", jd);
        }
    }
    return {Json{{"seed", seed}, {"thetas", thetas}, {"diagrams", diagrams}, {"ok", ok}, {"failures", failures}}, ok};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial Kakimizu complexes of special alternating links"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "json (indented) or compact")
        ->check(CLI::IsMember({"json", "compact"}))
        ->capture_default_str();
    app.add_option("-o,--output", opt.output, "Write to a file instead of stdout");
    app.add_option("--seed", opt.seed, "Seed for randomized commands")->capture_default_str();

    std::string input;
    auto with_input = [&](CLI::App* sub, const char* what) {
        sub->add_option("input", input, what)->required();
        return sub;
    };

    auto* validate_cmd = with_input(app.add_subcommand("validate", "Check the diagram hypotheses"), "Diagram JSON");
    auto* seifert_cmd = with_input(app.add_subcommand("seifert", "Seifert circles and counts"), "Diagram JSON");

    bool stages = false;
    auto* theta_cmd = with_input(app.add_subcommand("theta", "Theta graph of a diagram"), "Diagram JSON");
    theta_cmd->add_flag("--stages", stages, "Also print G(D), the reduced graph and F(D)");

    std::optional<int> region;
    auto* complex_cmd = with_input(app.add_subcommand("complex", "The complex K"), "Diagram or theta JSON");
    complex_cmd->add_option("--region", region, "Attach the vertex order for this region");

    bool want_homology = false, want_flag = false, want_ball = false;
    std::vector<int> metric;
    auto* analyze_cmd = with_input(app.add_subcommand("analyze", "Properties of K"), "Diagram or theta JSON");
    analyze_cmd->add_flag("--homology", want_homology, "Reduced integer homology");
    analyze_cmd->add_flag("--flag-check", want_flag, "Compare cliques with region cycles");
    analyze_cmd->add_option("--metric", metric, "Distance between vertices U and V")->expected(2)->allow_extra_args(false);
    analyze_cmd->add_flag("--ball", want_ball, "Ball report");

    std::optional<int> esd_n, esd_m;
    auto* esd_cmd = app.add_subcommand("esd", "Edgewise subdivision of a simplex");
    esd_cmd->add_option("--n", esd_n, "Simplex dimension")->required();
    esd_cmd->add_option("--m", esd_m, "Subdivision factor")->required();

    int product_region = 0;
    auto* product_cmd = with_input(app.add_subcommand("product", "K as an ordered product"), "Diagram or theta JSON");
    product_cmd->add_option("--region", product_region, "Region defining the vertex order")->capture_default_str();

    auto* verify_esd_cmd = app.add_subcommand("verify-esd", "Check K against esd through the B map");
    verify_esd_cmd->add_option("--n", esd_n, "Simplex dimension (default: 1..3)");
    verify_esd_cmd->add_option("--m", esd_m, "Subdivision factor (default: 1..4)");

    auto* verify_product_cmd =
        with_input(app.add_subcommand("verify-product", "Check K against its product model"), "Diagram or theta JSON");

    auto* fibred_cmd = with_input(app.add_subcommand("fibred", "Fibredness test on G(D)"), "Diagram JSON");

    std::optional<int> vertex;
    std::string convention = "positive";
    auto* surface_cmd = with_input(app.add_subcommand("surface", "P-arc description of a vertex"), "Diagram JSON");
    surface_cmd->add_option("--vertex", vertex, "Vertex index in K (default: the base vertex)");
    surface_cmd->add_option("--convention", convention, "Sides used for the base vertex")
        ->check(CLI::IsMember({"positive", "negative"}))
        ->capture_default_str();

    int thetas = 20, diagrams = 20;
    auto* selftest_cmd = app.add_subcommand("selftest", "Randomized property checks");
    selftest_cmd->add_option("--thetas", thetas, "Random theta graphs")->capture_default_str();
    selftest_cmd->add_option("--diagrams", diagrams, "Random diagrams")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    if (const char* env = std::getenv("KAKIMIZU_SEED")) {
        try {
            opt.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "KAKIMIZU_SEED must be a nonnegative integer\n";
            return kUsage;
        }
    }

    try {
        if (*validate_cmd) {
            ValidationReport r = validate(load_diagram(input));
            emit(opt, to_json(r));
            return r.all() ? kOk : kFailed;
        }
        if (*seifert_cmd) {
            emit(opt, to_json(seifert(load_diagram(input))));
            return kOk;
        }
        if (*theta_cmd) {
            ThetaPipeline p = theta_pipeline(load_diagram(input));
            if (!stages) {
                emit(opt, to_json(p.theta()));
            } else {
                emit(opt, Json{{"theta", to_json(p.theta())},
                               {"black", to_json(p.black)},
                               {"reduced", to_json(p.reduced)},
                               {"augmented", to_json(p.augmented)}});
            }
            return kOk;
        }
        if (*complex_cmd) {
            Input in = load(input);
            SimplicialComplex k = build_complex(in.theta);
            if (region) {
                if (*region < 0 || *region >= in.theta.num_regions()) throw UsageError("region out of range");
                k.order = order_vertices(k, in.theta, *region);
                k.order_region = *region;
            }
            emit(opt, to_json(k));
            return kOk;
        }
        if (*analyze_cmd) {
            Input in = load(input);
            SimplicialComplex k = build_complex(in.theta);
            bool ok = true;
            Json j = {{"vertices", k.num_vertices()},
                      {"maximal_simplices", k.maximal_simplices.size()},
                      {"dimension", k.dimension()},
                      {"pure", k.is_pure()},
                      {"connected", connected(k)}};
            if (want_homology) j["homology"] = to_json(homology(k));
            if (want_flag) {
                bool same = cycle_simplices(in.theta, k) == k.maximal_simplices;
                ok = ok && same;
                j["flag_check"] = {{"cliques_match_cycles", same}};
            }
            if (!metric.empty()) {
                for (int v : metric)
                    if (v < 0 || v >= k.num_vertices()) throw UsageError("vertex index out of range");
                j["metric"] = {{"u", metric[0]}, {"v", metric[1]}, {"distance", distance(k, metric[0], metric[1])}};
            }
            if (want_ball) {
                BallReport b = ball_report(in.theta, k);
                ok = ok && b.ok();
                j["ball"] = to_json(b);
            }
            emit(opt, j);
            return ok ? kOk : kFailed;
        }
        if (*esd_cmd) {
            if (*esd_n < 0 || *esd_m < 1) throw UsageError("esd needs n >= 0 and m >= 1");
            emit(opt, to_json(esd(*esd_n, *esd_m)));
            return kOk;
        }
        if (*product_cmd) {
            Input in = load(input);
            if (product_region < 0 || product_region >= std::max(1, in.theta.num_regions()))
                throw UsageError("region out of range");
            emit(opt, to_json(product_model(in.theta, product_region)));
            return kOk;
        }
        if (*verify_esd_cmd) {
            std::vector<int> ns, ms;
            for (int n = esd_n.value_or(1); n <= esd_n.value_or(3); ++n) ns.push_back(n);
            for (int m = esd_m.value_or(1); m <= esd_m.value_or(4); ++m) ms.push_back(m);
            if (ns.empty() || ms.empty() || ns.front() < 1 || ms.front() < 1) throw UsageError("need n >= 1 and m >= 1");
            bool ok = true;
            Json results = Json::array();
            for (int n : ns)
                for (int m : ms) {
                    ThetaGraph t = single_component(n, m);
                    SimplicialComplex k = build_complex(t), e = esd(n, m);
                    bool iso = verify_iso(k, e, theta_to_esd_map(t, k, e));
                    ok = ok && iso;
                    results.push_back({{"n", n},
                                       {"m", m},
                                       {"vertices", k.num_vertices()},
                                       {"maximal_simplices", k.maximal_simplices.size()},
                                       {"isomorphic", iso}});
                }
            emit(opt, Json{{"results", results}, {"ok", ok}});
            return ok ? kOk : kFailed;
        }
        if (*verify_product_cmd) {
            Input in = load(input);
            SimplicialComplex k = build_complex(in.theta);
            bool ok = true;
            Json regions = Json::array();
            for (int r = 0; r < std::max(1, in.theta.num_regions()); ++r) {
                SimplicialComplex p = product_model(in.theta, r);
                bool iso = verify_iso(k, p, label_map(k, p)) && audit_order(p, *p.order).ok();
                ok = ok && iso;
                regions.push_back({{"region", r}, {"isomorphic", iso}});
            }
            BallReport b = ball_report(in.theta, k);
            ok = ok && b.ok();
            emit(opt, Json{{"regions", regions}, {"ball", to_json(b)}, {"ok", ok}});
            return ok ? kOk : kFailed;
        }
        if (*fibred_cmd) {
            EmbeddedGraph g = white_region_graph(load_diagram(input));
            emit(opt, Json{{"fibred", is_fibred(g)}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}});
            return kOk;
        }
        if (*surface_cmd) {
            SurfaceModel m = make_surface_model(load_diagram(input));
            WeightVector u = m.theta().base_vertex();
            if (vertex) {
                SimplicialComplex k = build_complex(m.theta());
                if (*vertex < 0 || *vertex >= k.num_vertices()) throw UsageError("vertex index out of range");
                u = k.vertices[*vertex];
            }
            auto conv = convention == "negative" ? EmptyConvention::AllNegative : EmptyConvention::AllPositive;
            SurfaceRealization s = realize(m, u, conv);
            Json j = to_json(s, m.diagram);
            j["s"] = seifert(m.diagram).s;
            emit(opt, j);
            return kOk;
        }
        if (*selftest_cmd) {
            if (thetas < 0 || diagrams < 0) throw UsageError("counts must be nonnegative");
            auto [j, ok] = selftest(opt.seed, thetas, diagrams);
            emit(opt, j);
            return ok ? kOk : kFailed;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
