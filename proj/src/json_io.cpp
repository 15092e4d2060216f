#include "kakimizu/json_io.hpp"

#include "kakimizu/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kakimizu {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

const Json& as_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

} // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

Diagram diagram_from_json(const Json& j) {
    const Json& list = as_array(field(j, "crossings"), "crossings");
    if (list.empty()) throw ParseError("no crossings");
    std::vector<PdCrossing> crossings;
    std::set<int> ids;
    for (const Json& c : list) {
        PdCrossing pc;
        pc.id = as_int(field(c, "id"), "crossing id");
        if (!ids.insert(pc.id).second) throw ParseError("duplicate crossing id " + std::to_string(pc.id));
        const Json& pd = as_array(field(c, "pd"), "pd");
        if (pd.size() != 4) throw ParseError("pd tuple must have four labels");
        for (int k = 0; k < 4; ++k) pc.pd[k] = as_int(pd[k], "pd label");
        crossings.push_back(pc);
    }
    if (crossings.size() < 2) throw ParseError("diagrams need at least two crossings");
    return Diagram::from_pd(std::move(crossings));
}

Diagram parse_diagram(const std::string& text) { return diagram_from_json(parse_json_text(text)); }

Json to_json(const Diagram& d) {
    Json list = Json::array();
    for (const PdCrossing& c : d.crossings()) list.push_back({{"id", c.id}, {"pd", c.pd}});
    return Json{{"crossings", list}};
}

std::string diagram_to_json(const Diagram& d) { return to_json(d).dump(); }

Json to_json(const ValidationReport& r) {
    return Json{{"connected", r.connected},
                {"alternating", r.alternating},
                {"special", r.special},
                {"reduced", r.reduced},
                {"prime", r.prime},
                {"cuttable_region_exists", r.cuttable_region_exists},
                {"messages", r.messages}};
}

Json to_json(const SeifertData& s) {
    return Json{{"circles", s.circles},
                {"s", s.s},
                {"n", s.n},
                {"black_regions", s.black_regions},
                {"white_regions", s.white_regions},
                {"chi", s.chi},
                {"genus_like", s.genus_like}};
}

ThetaGraph theta_from_json(const Json& j) {
    const Json& list = as_array(field(j, "components"), "components");
    std::vector<ThetaComponent> comps;
    for (const Json& c : list) {
        ThetaComponent tc;
        tc.id = as_int(field(c, "id"), "component id");
        for (const Json& e : as_array(field(c, "edges"), "edges"))
            tc.edges.push_back({as_int(field(e, "id"), "edge id"), as_int(field(e, "weight"), "edge weight")});
        if (c.contains("vertices")) {
            const Json& v = as_array(c.at("vertices"), "vertices");
            if (v.size() != 2) throw ParseError("vertices must be a pair");
            tc.vertices = {as_int(v[0], "vertex"), as_int(v[1], "vertex")};
        }
        const Json& p = field(c, "placement");
        const Json& parent = field(p, "parent");
        if (parent.is_string()) {
            if (parent.get<std::string>() != "sphere") throw ParseError("parent must be a component id or \"sphere\"");
            tc.placement.parent = kSphere;
        } else {
            tc.placement.parent = as_int(parent, "parent");
            if (tc.placement.parent < 0) throw ParseError("parent must be a component id or \"sphere\"");
        }
        tc.placement.parent_face = as_int(field(p, "parent_face"), "parent_face");
        tc.placement.outer_face = as_int(field(p, "outer_face"), "outer_face");
        comps.push_back(std::move(tc));
    }
    return ThetaGraph(std::move(comps));
}

ThetaGraph parse_theta(const std::string& text) { return theta_from_json(parse_json_text(text)); }

Json to_json(const ThetaGraph& t) {
    Json list = Json::array();
    for (const ThetaComponent& c : t.components()) {
        Json edges = Json::array();
        for (const ThetaEdge& e : c.edges) edges.push_back({{"id", e.id}, {"weight", e.weight}});
        Json placement = {{"parent", c.placement.parent == kSphere ? Json("sphere") : Json(c.placement.parent)},
                          {"parent_face", c.placement.parent_face},
                          {"outer_face", c.placement.outer_face}};
        Json jc = {{"id", c.id}, {"edges", edges}, {"placement", placement}};
        if (c.vertices.first >= 0) jc["vertices"] = {c.vertices.first, c.vertices.second};
        list.push_back(std::move(jc));
    }
    return Json{{"components", list}};
}

std::string theta_to_json(const ThetaGraph& t) { return to_json(t).dump(); }

Json to_json(const Region& r, const ThetaGraph& t) {
    auto ids = [&](const std::vector<int>& coords) {
        std::vector<int> out;
        auto order = t.global_edge_order();
        for (int c : coords) out.push_back(order[c]);
        return out;
    };
    Json faces = Json::array();
    for (auto [c, f] : r.faces) faces.push_back({t.components()[c].id, f});
    return Json{{"id", r.id},
                {"faces", faces},
                {"boundary_plus", ids(r.boundary_plus)},
                {"boundary_minus", ids(r.boundary_minus)},
                {"delta", r.delta}};
}

Json to_json(const SimplicialComplex& c) {
    Json j = {{"edge_order", c.edge_order}, {"vertices", c.vertices}, {"maximal_simplices", c.maximal_simplices}};
    if (c.order_region) j["order_region"] = *c.order_region;
    if (c.order) j["order"] = c.order->pairs();
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    SimplicialComplex c;
    if (j.contains("edge_order")) c.edge_order = field(j, "edge_order").get<std::vector<int>>();
    try {
        c.vertices = field(j, "vertices").get<std::vector<std::vector<int>>>();
        c.maximal_simplices = field(j, "maximal_simplices").get<std::vector<std::vector<int>>>();
        if (j.contains("order_region") && !j.at("order_region").is_null())
            c.order_region = j.at("order_region").get<int>();
        if (j.contains("order")) {
            VertexOrder o;
            for (const auto& [a, b] : j.at("order").get<std::vector<std::pair<int, int>>>()) o.add(a, b);
            c.order = std::move(o);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad complex document: ") + e.what());
    }
    for (const auto& s : c.maximal_simplices)
        for (int v : s)
            if (v < 0 || v >= c.num_vertices()) throw ParseError("simplex refers to an unknown vertex");
    return c;
}

Json to_json(const EmbeddedGraph& g) {
    Json edges = Json::array();
    FaceTrace ft = g.trace_faces();
    for (int id : g.edge_ids()) {
        const GraphEdge& e = g.edge(id);
        Json je = {{"id", id}, {"endpoints", {e.a, e.b}}, {"weight", e.weight}, {"crossings", e.crossings}};
        if (!e.is_loop() && g.orientation(e.a) != Orientation::None) je["positive_side"] = g.positive_side(id, ft);
        edges.push_back(std::move(je));
    }
    Json rotation = Json::array();
    for (int v = 0; v < g.num_vertices(); ++v) {
        Json r = Json::array();
        for (HalfEdge h : g.rotation(v)) r.push_back(h.edge);
        rotation.push_back(std::move(r));
    }
    Json orient = Json::array();
    for (int v = 0; v < g.num_vertices(); ++v) orient.push_back(static_cast<int>(g.orientation(v)));
    return Json{{"vertices", g.num_vertices()},
                {"edges", edges},
                {"rotation", rotation},
                {"orientation", orient},
                {"faces", ft.num_faces()}};
}

Json to_json(const FlypeSet& fs) {
    Json circles = Json::array();
    for (const FlypeCircle& c : fs.circles)
        circles.push_back({{"component", c.component}, {"crossing_edge", c.crossing_edge}, {"arc_edge", c.arc_edge}});
    return Json{{"circles", circles}, {"delta", fs.delta}, {"positive_regions", fs.positive_regions}};
}

FlypeSet flype_set_from_json(const Json& j) {
    FlypeSet fs;
    try {
        for (const Json& c : as_array(field(j, "circles"), "circles"))
            fs.circles.push_back({as_int(field(c, "component"), "component"),
                                  as_int(field(c, "crossing_edge"), "crossing_edge"),
                                  as_int(field(c, "arc_edge"), "arc_edge")});
        if (j.contains("delta")) fs.delta = j.at("delta").get<std::vector<int>>();
        if (j.contains("positive_regions")) fs.positive_regions = j.at("positive_regions").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad flype set document: ") + e.what());
    }
    return fs;
}

namespace {

const char* side_name(ArcSide s) {
    switch (s) {
    case ArcSide::Negative: return "negative";
    case ArcSide::Positive: return "positive";
    case ArcSide::Flype: return "flype";
    }
    return "";
}

} // namespace

Json to_json(const PArcConfig& p, const Diagram& d) {
    Json crossings = Json::array();
    for (size_t x = 0; x < p.crossing_arc.size(); ++x)
        crossings.push_back({{"id", d.crossings().at(x).id}, {"arc", side_name(p.crossing_arc[x])}});
    Json arcs = Json::array();
    for (auto [a, b] : p.arcs) arcs.push_back({a + 1, b + 1});
    return Json{{"crossings", crossings}, {"arcs", arcs}};
}

PArcConfig p_arcs_from_json(const Json& j, const Diagram& d) {
    PArcConfig p;
    std::map<int, int> index;
    for (int x = 0; x < d.num_crossings(); ++x) index[d.crossings()[x].id] = x;
    p.crossing_arc.assign(d.num_crossings(), ArcSide::Negative);
    std::vector<bool> seen(d.num_crossings(), false);
    for (const Json& c : as_array(field(j, "crossings"), "crossings")) {
        auto it = index.find(as_int(field(c, "id"), "crossing id"));
        if (it == index.end() || seen[it->second]) throw ParseError("unknown or repeated crossing in arc list");
        seen[it->second] = true;
        const Json& arc = field(c, "arc");
        std::string name = arc.is_string() ? arc.get<std::string>() : "";
        if (name == "negative") p.crossing_arc[it->second] = ArcSide::Negative;
        else if (name == "positive") p.crossing_arc[it->second] = ArcSide::Positive;
        else if (name == "flype") p.crossing_arc[it->second] = ArcSide::Flype;
        else throw ParseError("arc must be \"negative\", \"positive\" or \"flype\"");
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw ParseError("arc list misses a crossing");
    p.partner.assign(d.num_edges(), -1);
    for (const Json& a : as_array(field(j, "arcs"), "arcs")) {
        if (!a.is_array() || a.size() != 2) throw ParseError("an arc joins two edge labels");
        int x = as_int(a[0], "edge label") - 1, y = as_int(a[1], "edge label") - 1;
        if (x < 0 || y < 0 || x >= d.num_edges() || y >= d.num_edges() || x == y || p.partner[x] >= 0 || p.partner[y] >= 0)
            throw ParseError("arcs must meet each edge label once");
        p.arcs.emplace_back(x, y);
        p.partner[x] = y;
        p.partner[y] = x;
    }
    return p;
}

Json to_json(const SurfaceRealization& s, const Diagram& d) {
    return Json{{"vertex", s.vertex},
                {"flypes", to_json(s.flypes)},
                {"p_arcs", to_json(s.arcs, d)},
                {"n_a", s.counts.n_a},
                {"n_b", s.counts.n_b},
                {"chi", s.chi}};
}

Json to_json(const HomologyReport& h) {
    return Json{{"f_vector", h.f_vector},
                {"reduced_betti", h.reduced_betti},
                {"torsion", h.torsion},
                {"euler_characteristic", h.euler_characteristic},
                {"boundary_squares_to_zero", h.boundary_squares_to_zero}};
}

Json to_json(const BallReport& b) {
    return Json{{"dimension", b.dimension},
                {"expected_dimension", b.expected_dimension},
                {"dimension_matches", b.dimension_matches},
                {"pure", b.pure},
                {"homology_trivial", b.homology_trivial},
                {"euler_characteristic", b.euler_characteristic},
                {"regions", b.regions},
                {"regions_match", b.regions_match},
                {"ok", b.ok()}};
}

} // namespace kakimizu
