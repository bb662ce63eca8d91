#include "wlpw/reports.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

#include "wlpw/complex.hpp"
#include "wlpw/fixtures.hpp"
#include "wlpw/homology.hpp"
#include "wlpw/io.hpp"
#include "wlpw/residue.hpp"

namespace wlpw {

std::string render_le(const LeDiagram& le) {
    std::string out;
    for (int r = 0; r < le.k(); ++r) {
        if (le.row_length(r) == 0) {
            continue;
        }
        std::string line;
        for (int c = 0; c < le.row_length(r); ++c) {
            line += c == 0 ? "" : " ";
            line += le.plus(r, c) ? '+' : '0';
        }
        out += line + "\n";
    }
    return out.empty() ? "(empty)\n" : out;
}

std::string render_le(const std::string& le, int k, int n) { return render_le(LeDiagram::parse(le, k, n)); }

namespace {

bool at_fixture_point(const ReportOptions& o) { return o.k == 2 && o.n == 6; }

std::filesystem::path write_file(const ReportOptions& o, const std::string& name, const std::string& content) {
    std::filesystem::create_directories(o.out_dir);
    const auto path = o.out_dir / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    f << content;
    return path;
}

std::string betti_text(const std::vector<long>& betti) {
    std::string s = "(";
    for (std::size_t i = 0; i < betti.size(); ++i) {
        s += (i ? "," : "") + std::to_string(betti[i]);
    }
    return s + ")";
}

ReportResult table1_report(const ReportOptions& o) {
    ReportResult res;
    std::string csv = "name,diagram,le,dimension\n";
    std::string txt;
    const auto diagrams = enumerate_admissible(o.k, o.n);
    for (const auto& w : diagrams) {
        const PositroidCell cell = cell_of(w);
        const std::string id = diagram_id(w);
        csv += csv_field(id) + "," + csv_field(format_diagram(w)) + "," + csv_field(cell.le.str()) + "," +
               std::to_string(cell.dim) + "\n";
        txt += id + "  " + format_diagram(w) + "  " + cell.le.str() + "\n" + render_le(cell.le) + "\n";
        if (at_fixture_point(o)) {
            const auto name = diagram_name(w);
            if (!name) {
                res.mismatches.push_back("diagram without a fixture name: " + format_diagram(w));
            } else if (named_diagram(*name).le != cell.le.str()) {
                res.mismatches.push_back(*name + ": expected " + named_diagram(*name).le + ", got " + cell.le.str());
            }
        }
    }
    if (at_fixture_point(o) && diagrams.size() != named_diagrams_2_6().size()) {
        res.mismatches.push_back(fmt::format("expected {} diagrams, got {}", named_diagrams_2_6().size(),
                                             diagrams.size()));
    }
    res.files.push_back(write_file(o, "table1.csv", csv));
    res.files.push_back(write_file(o, "table1.txt", txt));
    res.summary = fmt::format("{} admissible diagrams at k={}, n={}", diagrams.size(), o.k, o.n);
    return res;
}

ReportResult missing_cells_report(const ReportOptions& o) {
    ReportResult res;
    const FacePoset& poset = face_poset(o.k, o.n);
    std::vector<std::size_t> wld;
    int top = 0;
    for (const auto& w : enumerate_admissible(o.k, o.n)) {
        wld.push_back(*poset.catalog().find(cell_of(w).bases));
        top = std::max(top, poset.dim(wld.back()));
    }
    std::string csv = "name,le,dimension\n";
    std::string txt;
    std::vector<std::string> missing;
    for (std::size_t c = 0; c < poset.size(); ++c) {
        if (poset.dim(c) != top || std::find(wld.begin(), wld.end(), c) != wld.end()) {
            continue;
        }
        const std::string le = poset.cell(c).le.str();
        std::string name = le;
        if (at_fixture_point(o)) {
            for (const auto& [n_name, n_le] : missing_cells_2_6()) {
                if (n_le == le) {
                    name = n_name;
                }
            }
        }
        missing.push_back(le);
        csv += csv_field(name) + "," + csv_field(le) + "," + std::to_string(top) + "\n";
        txt += name + "  " + le + "\n" + render_le(poset.cell(c).le) + "\n";
    }
    if (at_fixture_point(o)) {
        std::vector<std::string> expected;
        for (const auto& [name, le] : missing_cells_2_6()) {
            expected.push_back(le);
        }
        std::sort(expected.begin(), expected.end());
        std::vector<std::string> got = missing;
        std::sort(got.begin(), got.end());
        if (got != expected) {
            res.mismatches.push_back("missing top cells differ from the N1..N6 fixture");
        }
    }
    res.files.push_back(write_file(o, "missing_cells.csv", csv));
    res.files.push_back(write_file(o, "missing_cells.txt", txt));
    res.summary = fmt::format("{} top-dimensional cells carry no diagram", missing.size());
    return res;
}

ReportResult boundaries_report(const ReportOptions& o) {
    ReportResult res;
    const SharedBoundaryReport rep = shared_boundary_report(o.k, o.n, o.seed);
    const std::size_t multi = rep.count(SharingClass::MultiDiagram);
    const std::size_t epair = rep.count(SharingClass::EPairOnly);
    const std::size_t single = rep.count(SharingClass::Single);
    Json summary{{"k", o.k}, {"n", o.n}, {"codim_one_cells", rep.rows.size()},
                 {"multi", multi}, {"e-pair", epair}, {"single", single}};
    if (at_fixture_point(o) && (multi != 38 || epair != 6 || single != 6)) {
        res.mismatches.push_back(fmt::format("classification {}/{}/{} differs from 38/6/6", multi, epair, single));
    }
    res.files.push_back(write_file(o, "boundaries.csv", adjacency_csv(rep)));
    res.files.push_back(write_file(o, "boundaries.json", summary.dump(2) + "\n"));
    res.summary = fmt::format("{} codimension-one cells: {} multi, {} e-pair, {} single", rep.rows.size(), multi,
                              epair, single);
    return res;
}

ReportResult homology_report(const ReportOptions& o) {
    ReportResult res;
    const Subcomplex w = build_w_complex(o.k, o.n);
    const Subcomplex full = full_complex(o.k, o.n);
    const HomologyResult hw = homology(w);
    const HomologyResult hf = homology(full);
    const HomologyResult cw = cellular_homology(w);
    const HomologyResult cf = cellular_homology(full);
    if (hw.betti != cw.betti || hf.betti != cf.betti) {
        res.mismatches.push_back("order-complex and cellular Betti numbers disagree");
    }
    if (at_fixture_point(o)) {
        if (hw.betti != std::vector<long>{1, 0, 0, 0, 0, 1, 0}) {
            res.mismatches.push_back("W(2,6) Betti numbers " + betti_text(hw.betti) + " differ from (1,0,0,0,0,1,0)");
        }
        std::vector<long> point(hf.betti.size(), 0);
        point.at(0) = 1;
        if (hf.betti != point) {
            res.mismatches.push_back("full complex is not acyclic: " + betti_text(hf.betti));
        }
    }
    Json j{{"k", o.k},
           {"n", o.n},
           {"w_complex", {{"cells", w.cells.size()}, {"homology", homology_to_json(hw)}}},
           {"full_complex", {{"cells", full.cells.size()}, {"homology", homology_to_json(hf)}}}};
    res.files.push_back(write_file(o, "homology.json", j.dump(2) + "\n"));
    res.summary = "W betti " + betti_text(hw.betti) + ", full betti " + betti_text(hf.betti);
    return res;
}

ReportResult cancellation_report_files(const ReportOptions& o) {
    ReportResult res;
    const CancellationReport rep = cancellation_report(o.k, o.n, o.seed);
    if (!rep.all_pass()) {
        res.mismatches.push_back(fmt::format("{} of {} boundary cells did not cancel", rep.rows.size() -
                                                                                            rep.count(Verdict::Pass),
                                             rep.rows.size()));
    }
    if (!rep.identities_hold()) {
        res.mismatches.push_back("a shared-support sigma pair is not opposite");
    }
    Json summary{{"k", o.k},
                 {"n", o.n},
                 {"seed", o.seed},
                 {"checked", rep.rows.size()},
                 {"pass", rep.count(Verdict::Pass)},
                 {"fail", rep.count(Verdict::Fail)},
                 {"inconclusive", rep.count(Verdict::Inconclusive)},
                 {"sigma_pairs", rep.identities.size()},
                 {"sigma_pairs_opposite", rep.identities_hold()}};
    res.files.push_back(write_file(o, "cancellation.csv", cancellation_csv(rep)));
    res.files.push_back(write_file(o, "cancellation.json", summary.dump(2) + "\n"));
    res.summary = fmt::format("{} of {} boundary cells cancel", rep.count(Verdict::Pass), rep.rows.size());
    return res;
}

}  // namespace

ReportResult write_report(const std::string& kind, const ReportOptions& options) {
    ReportResult res;
    if (kind == "table1") {
        res = table1_report(options);
    } else if (kind == "missing-cells") {
        res = missing_cells_report(options);
    } else if (kind == "boundaries") {
        res = boundaries_report(options);
    } else if (kind == "homology") {
        res = homology_report(options);
    } else if (kind == "cancellation") {
        res = cancellation_report_files(options);
    } else {
        throw std::invalid_argument("unknown report kind " + kind);
    }
    res.kind = kind;
    res.fixtures_match = res.mismatches.empty();
    return res;
}

}  // namespace wlpw
