// Command-line front end: enumeration, cells, boundaries, homology, amplitudes and reports.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <fmt/format.h>

#include "wlpw/amplitude.hpp"
#include "wlpw/complex.hpp"
#include "wlpw/errors.hpp"
#include "wlpw/fixtures.hpp"
#include "wlpw/homology.hpp"
#include "wlpw/io.hpp"
#include "wlpw/positroid.hpp"
#include "wlpw/reports.hpp"
#include "wlpw/residue.hpp"

using namespace wlpw;

namespace {

struct Globals {
    int k = 2;
    int n = 6;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text";
    std::string out;
};

void check_shape(const Globals& g) {
    if (g.k < 1 || g.n < 2 || g.k >= g.n || g.n > 32) {
        throw std::invalid_argument(fmt::format("need 1 <= k < n <= 32, got k={} n={}", g.k, g.n));
    }
}

// Writes to --out when given, otherwise to stdout.
void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + g.out);
    }
    f << text;
}

// Accepts a (2,6) fixture name, "n=6;props=1-3,1-5", or "1-3,1-5" with n taken from --n.
Diagram diagram_arg(const std::string& text, const Globals& g) {
    for (const auto& nd : named_diagrams_2_6()) {
        if (nd.name == text) {
            return nd.diagram;
        }
    }
    if (text.rfind("n=", 0) == 0) {
        return parse_diagram(text);
    }
    return parse_diagram(fmt::format("n={};props={}", g.n, text));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

int cmd_enumerate(const Globals& g) {
    check_shape(g);
    const auto diagrams = enumerate_admissible(g.k, g.n);
    const std::string note =
        diagrams.empty() ? fmt::format("no admissible diagrams: n={} is below k+4={}", g.n, g.k + 4) : "";
    if (g.format == "json") {
        Json rows = Json::array();
        for (const auto& w : diagrams) {
            const PositroidCell cell = cell_of(w);
            Json row{{"id", diagram_id(w)}, {"diagram", diagram_to_json(w)}, {"le", cell.le.str()},
                     {"dimension", cell.dim}};
            rows.push_back(std::move(row));
        }
        Json j{{"k", g.k}, {"n", g.n}, {"diagrams", rows}};
        if (!note.empty()) {
            j["note"] = note;
        }
        emit(g, j.dump(2) + "\n");
    } else if (g.format == "csv") {
        std::string s = "id,diagram,le,dimension\n";
        for (const auto& w : diagrams) {
            const PositroidCell cell = cell_of(w);
            s += csv_field(diagram_id(w)) + "," + csv_field(format_diagram(w)) + "," + csv_field(cell.le.str()) +
                 "," + std::to_string(cell.dim) + "\n";
        }
        emit(g, s);
        if (!note.empty()) {
            std::cerr << note << "\n";
        }
    } else {
        std::string s;
        for (const auto& w : diagrams) {
            const PositroidCell cell = cell_of(w);
            s += fmt::format("{:<6} {:<28} {:<14} dim {}\n", diagram_id(w), format_diagram(w), cell.le.str(),
                             cell.dim);
        }
        if (!note.empty()) {
            s += note + "\n";
        }
        emit(g, s);
    }
    return 0;
}

int cmd_le(const Globals& g, const std::string& le_text) {
    check_shape(g);
    if (!le_text.empty()) {
        const LeDiagram le = LeDiagram::parse(le_text, g.k, g.n);
        if (!validate_le(le)) {
            std::cerr << "not a Le diagram: " << le_text << "\n";
            return 1;
        }
        const BasisSet bases = le_bases(le);
        if (g.format == "json") {
            emit(g, Json{{"le", le.str()}, {"dimension", dimension(le)}, {"bases", bases_to_json(bases)}}.dump(2) +
                        "\n");
        } else {
            emit(g, render_le(le) + fmt::format("dimension {}\nbases {}\n", dimension(le), join(bases.labels(), " ")));
        }
        return 0;
    }
    const Catalog& catalog = Catalog::get(g.k, g.n);
    if (g.format == "json") {
        emit(g, catalog_to_json(catalog).dump(2) + "\n");
    } else if (g.format == "csv") {
        std::string s = "le,dimension,bases\n";
        for (const auto& e : catalog.entries()) {
            s += csv_field(e.le.str()) + "," + std::to_string(e.dim) + "," + join(e.bases.labels(), " ") + "\n";
        }
        emit(g, s);
    } else {
        std::map<int, std::size_t> by_dim;
        for (const auto& e : catalog.entries()) {
            ++by_dim[e.dim];
        }
        std::string s = fmt::format("{} cells of Gr>=0({},{})\n", catalog.size(), g.k, g.n);
        for (const auto& [d, c] : by_dim) {
            s += fmt::format("  dim {}: {}\n", d, c);
        }
        emit(g, s);
    }
    return 0;
}

// Bases of a diagram's cell, or of a Le diagram when the argument contains '/' or '+'.
int cmd_bases(const Globals& g, const std::string& arg) {
    BasisSet bases;
    if (arg.find_first_of("+/") != std::string::npos || arg.empty()) {
        check_shape(g);
        bases = le_bases(LeDiagram::parse(arg, g.k, g.n));
    } else {
        bases = cell_of(diagram_arg(arg, g)).bases;
    }
    if (g.format == "json") {
        emit(g, bases_to_json(bases).dump(2) + "\n");
    } else {
        emit(g, join(bases.labels(), g.format == "csv" ? "," : " ") + "\n");
    }
    return 0;
}

int cmd_cell(const Globals& g, const std::string& arg) {
    const Diagram w = diagram_arg(arg, g);
    const PositroidCell cell = cell_of(w);
    std::vector<Diagram> sources;
    for (const auto& other : enumerate_admissible(w.k(), w.n())) {
        if (cell_of(other) == cell) {
            sources.push_back(other);
        }
    }
    if (g.format == "json") {
        emit(g, cell_record_json(cell, sources).dump(2) + "\n");
    } else {
        std::vector<std::string> ids;
        for (const auto& s : sources) {
            ids.push_back(diagram_id(s));
        }
        emit(g, fmt::format("le {}\ndimension {}\nsources {}\n{}bases {}\n", cell.le.str(), cell.dim,
                            join(ids, " "), render_le(cell.le), join(cell.bases.labels(), " ")));
    }
    return 0;
}

int cmd_boundaries(const Globals& g, const std::string& arg) {
    if (!arg.empty()) {
        const Diagram w = diagram_arg(arg, g);
        Json rows = Json::array();
        std::string s;
        for (const auto& d : boundary_diagrams(w)) {
            std::vector<std::string> labels;
            for (const auto& [row, vertex] : d.labels) {
                const Propagator& p = w.prop(row);
                labels.push_back(fmt::format("{}-{}@{}", p.i, p.j, vertex));
            }
            std::string le = "-";
            if (!d.degenerate) {
                le = boundary_cell_of(d, g.seed).le.str();
            }
            rows.push_back(Json{{"labels", labels},
                                {"kind", d.kind == BoundaryKind::VertexDrop ? "vertex-drop" : "touch"},
                                {"degenerate", d.degenerate},
                                {"le", le}});
            s += fmt::format("{:<20} {:<12} {:<11} {}\n", join(labels, ";"),
                             d.kind == BoundaryKind::VertexDrop ? "vertex-drop" : "touch",
                             d.degenerate ? "degenerate" : "ok", le);
        }
        emit(g, g.format == "json" ? rows.dump(2) + "\n" : s);
        return 0;
    }
    check_shape(g);
    const SharedBoundaryReport rep = shared_boundary_report(g.k, g.n, g.seed);
    if (g.format == "csv") {
        emit(g, adjacency_csv(rep));
    } else {
        Json j{{"codim_one_cells", rep.rows.size()},
               {"multi", rep.count(SharingClass::MultiDiagram)},
               {"e-pair", rep.count(SharingClass::EPairOnly)},
               {"single", rep.count(SharingClass::Single)}};
        emit(g, g.format == "json" ? j.dump(2) + "\n"
                                   : fmt::format("{} codimension-one cells: {} multi, {} e-pair, {} single\n",
                                                 rep.rows.size(), rep.count(SharingClass::MultiDiagram),
                                                 rep.count(SharingClass::EPairOnly), rep.count(SharingClass::Single)));
    }
    return 0;
}

Subcomplex chosen_complex(const Globals& g, bool full) {
    check_shape(g);
    return full ? full_complex(g.k, g.n) : build_w_complex(g.k, g.n);
}

int cmd_complex(const Globals& g, bool full) {
    const Subcomplex s = chosen_complex(g, full);
    std::map<int, std::size_t> by_dim;
    for (std::size_t c : s.cells) {
        ++by_dim[s.poset->dim(c)];
    }
    if (g.format == "json") {
        Json counts = Json::object();
        for (const auto& [d, c] : by_dim) {
            counts[std::to_string(d)] = c;
        }
        emit(g, Json{{"cells", s.cells.size()}, {"by_dimension", counts}}.dump(2) + "\n");
    } else if (g.format == "csv") {
        std::string out = "le,dimension\n";
        for (std::size_t c : s.cells) {
            out += csv_field(s.poset->cell(c).le.str()) + "," + std::to_string(s.poset->dim(c)) + "\n";
        }
        emit(g, out);
    } else {
        std::string out = fmt::format("{} cells\n", s.cells.size());
        for (const auto& [d, c] : by_dim) {
            out += fmt::format("  dim {}: {}\n", d, c);
        }
        emit(g, out);
    }
    return 0;
}

int cmd_homology(const Globals& g, bool full, const std::string& route) {
    const Subcomplex s = chosen_complex(g, full);
    HomologyResult h;
    if (route == "order") {
        h = homology(s);
    } else if (route == "cellular") {
        h = cellular_homology(s);
    } else {
        throw std::invalid_argument("route must be order or cellular");
    }
    if (g.format == "json") {
        emit(g, homology_to_json(h).dump(2) + "\n");
    } else {
        std::string out = g.format == "csv" ? "degree,betti,torsion\n" : "";
        for (std::size_t d = 0; d < h.betti.size(); ++d) {
            std::vector<std::string> t;
            for (const auto& x : h.torsion[d]) {
                t.push_back(x.get_str());
            }
            out += g.format == "csv" ? fmt::format("{},{},{}\n", d, h.betti[d], join(t, " "))
                                     : fmt::format("H_{} = Z^{}{}\n", d, h.betti[d],
                                                   t.empty() ? "" : " + torsion " + join(t, " "));
        }
        emit(g, out);
    }
    return 0;
}

int cmd_amplitude(const Globals& g, const std::string& arg) {
    const Diagram w = diagram_arg(arg, g);
    const ExternalData data = generate_positive_data(w.n(), w.k(), g.seed);
    const RationalMatrix product = kernel_product(localized_matrix(w, data), data);
    bool kernel_zero = true;
    for (const auto& row : product) {
        for (const auto& x : row) {
            kernel_zero = kernel_zero && sgn(x) == 0;
        }
    }
    const LocalizedValue value = integral_value(w, data);
    const auto classes = pole_classification(w, g.seed);
    if (g.format == "json") {
        Json factors = Json::array();
        for (const auto& pc : classes) {
            factors.push_back(Json{{"factor", to_string(pc.factor)},
                                   {"multiplicity", pc.localized_multiplicity},
                                   {"simple", pc.simple}});
        }
        emit(g, Json{{"diagram", diagram_id(w)},
                     {"denominator", r_denominator_string(w)},
                     {"factors", factors},
                     {"kernel_zero", kernel_zero},
                     {"value", value.infinite ? "inf" : to_string(value.value)},
                     {"data", data_to_json(data)}}
                        .dump(2) +
                    "\n");
    } else {
        std::string out = fmt::format("R = {}\nkernel product zero: {}\nvalue: {}\n", r_denominator_string(w),
                                      kernel_zero ? "yes" : "no",
                                      value.infinite ? "infinite (" + value.vanishing + ")"
                                                     : fmt::format("{:.12e}", value.value.get_d()));
        for (const auto& pc : classes) {
            out += fmt::format("  {:<36} multiplicity {} {}\n", to_string(pc.factor), pc.localized_multiplicity,
                               pc.simple ? "simple" : "non-simple");
        }
        emit(g, out);
    }
    return kernel_zero ? 0 : 1;
}

int cmd_cancel(const Globals& g) {
    check_shape(g);
    const CancellationReport rep = cancellation_report(g.k, g.n, g.seed);
    if (g.format == "csv") {
        emit(g, cancellation_csv(rep));
    } else {
        Json j{{"checked", rep.rows.size()},
               {"pass", rep.count(Verdict::Pass)},
               {"fail", rep.count(Verdict::Fail)},
               {"inconclusive", rep.count(Verdict::Inconclusive)},
               {"sigma_pairs", rep.identities.size()},
               {"sigma_pairs_opposite", rep.identities_hold()}};
        emit(g, g.format == "json"
                    ? j.dump(2) + "\n"
                    : fmt::format("{} of {} boundary cells cancel; {} sigma pairs, opposite: {}\n",
                                  rep.count(Verdict::Pass), rep.rows.size(), rep.identities.size(),
                                  rep.identities_hold() ? "yes" : "no"));
    }
    return rep.all_pass() && rep.identities_hold() ? 0 : 1;
}

int cmd_report(const Globals& g, const std::string& kind) {
    check_shape(g);
    ReportOptions o;
    o.k = g.k;
    o.n = g.n;
    o.seed = g.seed;
    o.out_dir = g.out.empty() ? "reports" : g.out;
    std::vector<std::string> kinds{kind};
    if (kind == "all") {
        kinds = kReportKinds;
    }
    bool ok = true;
    for (const auto& kd : kinds) {
        const ReportResult r = write_report(kd, o);
        std::cout << kd << ": " << r.summary << "\n";
        for (const auto& f : r.files) {
            std::cout << "  wrote " << f.string() << "\n";
        }
        for (const auto& m : r.mismatches) {
            std::cout << "  MISMATCH " << m << "\n";
        }
        ok = ok && r.fixtures_match;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wilson loop diagrams, positroid cells and spurious pole cancellation"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--k", g.k, "number of propagators")->capture_default_str();
    app.add_option("--n", g.n, "number of vertices")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for random data")->envname("WLPW_SEED")->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "output file, or directory for reports");

    std::string arg;
    std::string route = "order";
    bool full = false;

    auto* enumerate = app.add_subcommand("enumerate", "admissible diagrams with their cells");
    auto* le = app.add_subcommand("le", "render one Le diagram, or summarize the catalog");
    le->add_option("le", arg, "Le diagram such as 0+0+/++++");
    auto* bases = app.add_subcommand("bases", "bases of a diagram's cell or of a Le diagram");
    bases->add_option("target", arg, "diagram or Le diagram")->required();
    auto* cell = app.add_subcommand("cell", "cell record of a diagram");
    cell->add_option("diagram", arg, "fixture name, n=6;props=1-3,1-5 or 1-3,1-5")->required();
    auto* boundaries = app.add_subcommand("boundaries", "shared boundary census, or boundaries of one diagram");
    boundaries->add_option("diagram", arg, "diagram whose boundary diagrams to list");
    auto* complex = app.add_subcommand("complex", "cells of W(k,n) or of the full complex");
    complex->add_flag("--full", full, "use every positroid cell");
    auto* homology_cmd = app.add_subcommand("homology", "integral homology of W(k,n)");
    homology_cmd->add_flag("--full", full, "use every positroid cell");
    homology_cmd->add_option("--route", route, "order or cellular")->capture_default_str();
    auto* amplitude = app.add_subcommand("amplitude", "denominator, pole classes and localized value");
    amplitude->add_option("diagram", arg, "diagram")->required();
    auto* cancel = app.add_subcommand("cancel", "residue cancellation on codimension-one cells");
    auto* report = app.add_subcommand("report", "write report files and compare with fixtures");
    std::vector<std::string> report_kinds = kReportKinds;
    report_kinds.push_back("all");
    report->add_option("kind", arg, "report kind")->required()->check(CLI::IsMember(report_kinds));

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) return cmd_enumerate(g);
        if (le->parsed()) return cmd_le(g, arg);
        if (bases->parsed()) return cmd_bases(g, arg);
        if (cell->parsed()) return cmd_cell(g, arg);
        if (boundaries->parsed()) return cmd_boundaries(g, arg);
        if (complex->parsed()) return cmd_complex(g, full);
        if (homology_cmd->parsed()) return cmd_homology(g, full, route);
        if (amplitude->parsed()) return cmd_amplitude(g, arg);
        if (cancel->parsed()) return cmd_cancel(g);
        if (report->parsed()) return cmd_report(g, arg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
