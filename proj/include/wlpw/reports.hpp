#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wlpw/le.hpp"
#include "wlpw/positroid.hpp"

namespace wlpw {

// ASCII grid of the filling, one line per non-empty row; "(empty)" for the empty shape.
std::string render_le(const LeDiagram& le);
std::string render_le(const std::string& le, int k, int n);

inline const std::vector<std::string> kReportKinds{"table1", "missing-cells", "boundaries", "homology",
                                                   "cancellation"};

struct ReportOptions {
    int k = 2;
    int n = 6;
    std::uint64_t seed = kDefaultSeed;
    std::filesystem::path out_dir = "reports";
};

struct ReportResult {
    std::string kind;
    std::vector<std::filesystem::path> files;
    bool fixtures_match = true;            // comparison against the known (2,6) values
    std::vector<std::string> mismatches;   // human-readable reasons when not matching
    std::string summary;                   // one-line description for the console
};

// Writes the report files and compares against fixtures where they exist.
// Throws std::invalid_argument for an unknown kind.
ReportResult write_report(const std::string& kind, const ReportOptions& options);

}  // namespace wlpw
