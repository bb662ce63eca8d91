#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wlpw/fixtures.hpp"
#include "wlpw/io.hpp"
#include "wlpw/reports.hpp"

using namespace wlpw;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("wlpw_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("Le grids render as ASCII") {
    CHECK(render_le("0+0+/++++", 2, 6) == "0 + 0 +\n+ + + +\n");
    CHECK(render_le("", 2, 6) == "(empty)\n");
    CHECK(render_le("+0++/+0++", 2, 6) == "+ 0 + +\n+ 0 + +\n");
    CHECK(render_le("+++0/+++", 2, 6) == "+ + + 0\n+ + +\n");
}

TEST_CASE("reports reproduce the fixtures and are byte-deterministic") {
    for (const std::string kind : {"table1", "missing-cells", "boundaries"}) {
        CAPTURE(kind);
        ReportOptions first;
        first.out_dir = scratch_dir(kind + "_a");
        ReportOptions second = first;
        second.out_dir = scratch_dir(kind + "_b");
        const ReportResult a = write_report(kind, first);
        const ReportResult b = write_report(kind, second);
        CHECK(a.fixtures_match);
        CHECK(a.mismatches.empty());
        REQUIRE(a.files.size() == b.files.size());
        for (std::size_t i = 0; i < a.files.size(); ++i) {
            CHECK(std::filesystem::exists(a.files[i]));
            CHECK(slurp(a.files[i]) == slurp(b.files[i]));
        }
    }
}

TEST_CASE("table1 report content") {
    ReportOptions o;
    o.out_dir = scratch_dir("table1_content");
    const ReportResult r = write_report("table1", o);
    const std::string csv = slurp(o.out_dir / "table1.csv");
    CHECK(csv.rfind("name,diagram,le,dimension\n", 0) == 0);
    for (const auto& nd : named_diagrams_2_6()) {
        CHECK(csv.find(nd.name + "," + csv_field(format_diagram(nd.diagram)) + "," + nd.le + ",6\n") != std::string::npos);
    }
}

TEST_CASE("missing cells report lists N1..N6") {
    ReportOptions o;
    o.out_dir = scratch_dir("missing");
    write_report("missing-cells", o);
    const std::string csv = slurp(o.out_dir / "missing_cells.csv");
    for (const auto& [name, le] : missing_cells_2_6()) {
        CHECK(csv.find(name + "," + le + ",6\n") != std::string::npos);
    }
}

TEST_CASE("unknown report kinds are rejected") {
    CHECK_THROWS_AS(write_report("figure9", ReportOptions{}), std::invalid_argument);
}

TEST_CASE("JSON forms round trip") {
    const Diagram v1 = named_diagram("V1").diagram;
    const Json j = diagram_to_json(v1);
    CHECK(j.dump() == R"({"n":6,"props":[[1,3],[1,5]]})");
    CHECK(diagram_from_json(j) == v1);
    const ExternalData d = generate_positive_data(6, 2, kDefaultSeed);
    const ExternalData back = data_from_json(data_to_json(d), 2);
    CHECK(back.nodes == d.nodes);
    CHECK(back.gauge == d.gauge);
    CHECK(back.z == d.z);
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("the three-propagator listing includes the eight-gon example") {
    const auto all = enumerate_admissible(3, 8);
    CHECK(std::find(all.begin(), all.end(), Diagram(8, {{2, 4}, {4, 7}, {5, 7}})) != all.end());
}
