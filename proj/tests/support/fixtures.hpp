#pragma once

#include "kakimizu/diagram.hpp"
#include "kakimizu/theta.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef KAKIMIZU_FIXTURE_DIR
#error "KAKIMIZU_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace fixtures {

inline std::string text(const std::string& name) {
    std::ifstream in(std::string(KAKIMIZU_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline kakimizu::Diagram diagram(const std::string& stem) { return kakimizu::parse_diagram(text(stem + ".json")); }

/// Diagrams that pass every validation flag.
inline std::vector<std::string> valid_diagrams() { return {"hopf", "trefoil", "torus24", "dalpha"}; }

/// Every diagram fixture.
inline std::vector<std::string> all_diagrams() {
    return {"hopf", "trefoil", "torus24", "dalpha", "trefoil_sum", "trefoil_kink"};
}

} // namespace fixtures
