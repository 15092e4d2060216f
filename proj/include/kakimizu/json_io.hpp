#pragma once

#include "kakimizu/complex.hpp"
#include "kakimizu/diagram.hpp"
#include "kakimizu/structure.hpp"
#include "kakimizu/surfaces.hpp"
#include "kakimizu/theta.hpp"

#include <json.hpp>

namespace kakimizu {

using Json = nlohmann::ordered_json;

Json to_json(const Diagram& d);
Json to_json(const ValidationReport& r);
Json to_json(const SeifertData& s);
Json to_json(const ThetaGraph& t);
Json to_json(const Region& r, const ThetaGraph& t);
Json to_json(const SimplicialComplex& c);
Json to_json(const EmbeddedGraph& g);
Json to_json(const FlypeSet& fs);
/// Arcs use the diagram's normalized edge labels (1-based) and crossing ids.
Json to_json(const PArcConfig& p, const Diagram& d);
Json to_json(const SurfaceRealization& s, const Diagram& d);
Json to_json(const HomologyReport& h);
Json to_json(const BallReport& b);

Diagram diagram_from_json(const Json& j);
ThetaGraph theta_from_json(const Json& j);
SimplicialComplex complex_from_json(const Json& j);
FlypeSet flype_set_from_json(const Json& j);
PArcConfig p_arcs_from_json(const Json& j, const Diagram& d);

/// Parses text, raising ParseError on malformed JSON.
Json parse_json_text(const std::string& text);

} // namespace kakimizu
