#include "wlpw/fixtures.hpp"

#include <stdexcept>

namespace wlpw {

namespace {

NamedDiagram named(const char* name, Propagator a, Propagator b, const char* le) {
    return {name, Diagram(6, {a, b}), le};
}

}  // namespace

const std::vector<NamedDiagram>& named_diagrams_2_6() {
    static const std::vector<NamedDiagram> table{
        named("V1", {1, 3}, {1, 5}, "0+0+/++++"),
        named("V2", {2, 4}, {2, 6}, "+0++/0+++"),
        named("V3", {1, 3}, {3, 5}, "0+++/+++"),
        named("V4", {2, 4}, {4, 6}, "+++0/0+++"),
        named("V5", {1, 5}, {3, 5}, "++0+/+++"),
        named("V6", {2, 6}, {4, 6}, "+0+0/++++"),
        named("E1L", {2, 5}, {3, 5}, "+++/+++"),
        named("E1R", {2, 4}, {2, 5}, "+++/+++"),
        named("E2L", {3, 6}, {4, 6}, "+++0/+++"),
        named("E2R", {3, 5}, {3, 6}, "+++0/+++"),
        named("E3L", {1, 4}, {1, 5}, "+++0/+++0"),
        named("E3R", {1, 4}, {4, 6}, "+++0/+++0"),
        named("E4L", {2, 5}, {2, 6}, "++0+/++0+"),
        named("E4R", {1, 5}, {2, 5}, "++0+/++0+"),
        named("E5L", {1, 3}, {3, 6}, "+0++/+0++"),
        named("E5R", {2, 6}, {3, 6}, "+0++/+0++"),
        named("E6L", {1, 4}, {2, 4}, "0+++/0+++"),
        named("E6R", {1, 3}, {1, 4}, "0+++/0+++"),
        named("P1", {1, 3}, {4, 6}, "0++0/++++"),
        named("P2", {1, 5}, {2, 4}, "++0+/0+++"),
        named("P3", {2, 6}, {3, 5}, "+0++/+++"),
    };
    return table;
}

const std::vector<std::pair<std::string, std::string>>& missing_cells_2_6() {
    static const std::vector<std::pair<std::string, std::string>> cells{
        {"N1", "++00/++++"}, {"N2", "+00+/++++"}, {"N3", "00++/++++"},
        {"N4", "++++/00++"}, {"N5", "++++/0++"},  {"N6", "++++/++"},
    };
    return cells;
}

std::optional<std::string> diagram_name(const Diagram& w) {
    for (const auto& nd : named_diagrams_2_6()) {
        if (nd.diagram == w) {
            return nd.name;
        }
    }
    return std::nullopt;
}

const NamedDiagram& named_diagram(const std::string& name) {
    for (const auto& nd : named_diagrams_2_6()) {
        if (nd.name == name) {
            return nd;
        }
    }
    throw std::invalid_argument("unknown diagram name " + name);
}

const std::vector<std::string>& v1_bases() {
    static const std::vector<std::string> b{"12", "13", "14", "15", "16", "23", "24",
                                            "25", "26", "35", "36", "45", "46"};
    return b;
}

const std::vector<std::string>& e6r_bases() {
    static const std::vector<std::string> b{"12", "13", "14", "15", "23", "24", "25", "34", "35", "45"};
    return b;
}

Diagram shared_edge_example_3_8() { return Diagram(8, {{2, 8}, {2, 6}, {2, 4}}); }

const std::vector<std::string>& shared_edge_example_factors() {
    static const std::vector<std::string> f{
        "c_{1,3}", "(c_{1,2}c_{2,3} - c_{2,2}c_{1,3})", "(c_{2,2}c_{3,3} - c_{3,2}c_{2,3})",
        "c_{3,2}", "c_{3,4}", "c_{3,5}", "c_{2,6}", "c_{2,7}", "c_{1,1}", "c_{1,8}",
    };
    return f;
}

}  // namespace wlpw
