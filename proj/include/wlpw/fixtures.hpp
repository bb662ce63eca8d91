#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wlpw/diagram.hpp"

namespace wlpw {

// A named k=2, n=6 diagram with the Le diagram of its cell.
struct NamedDiagram {
    std::string name;
    Diagram diagram;
    std::string le;
};

// The 21 admissible diagrams at k=2, n=6 with their conventional names.
const std::vector<NamedDiagram>& named_diagrams_2_6();

// Six-dimensional cells of Gr(2,6) that carry no admissible diagram, N1..N6.
const std::vector<std::pair<std::string, std::string>>& missing_cells_2_6();

// Name of a (2,6) diagram, if it is one of the fixtures.
std::optional<std::string> diagram_name(const Diagram& w);
// Throws std::invalid_argument for an unknown name.
const NamedDiagram& named_diagram(const std::string& name);

// Basis lists of the V1 and E6R cells, written as digit strings.
const std::vector<std::string>& v1_bases();
const std::vector<std::string>& e6r_bases();

// Le diagram used to illustrate the path graph construction at k=3, n=8.
inline constexpr const char* kPathGraphExampleLe = "+0+0/+0++/0+";

// Three-propagator diagram at n=8 whose denominator has two two-by-two factors.
Diagram shared_edge_example_3_8();
// Its denominator, factor by factor.
const std::vector<std::string>& shared_edge_example_factors();

}  // namespace wlpw
