// Python bindings: a thin, string-oriented layer over the library.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "wlpw/amplitude.hpp"
#include "wlpw/complex.hpp"
#include "wlpw/diagram.hpp"
#include "wlpw/fixtures.hpp"
#include "wlpw/homology.hpp"
#include "wlpw/positroid.hpp"
#include "wlpw/reports.hpp"
#include "wlpw/residue.hpp"

namespace py = pybind11;
using namespace wlpw;

namespace {

py::dict cell_dict(const PositroidCell& c) {
    py::dict d;
    d["le"] = c.le.str();
    d["dim"] = c.dim;
    d["bases"] = c.bases.labels();
    return d;
}

py::dict homology_dict(const HomologyResult& h) {
    py::dict d;
    d["betti"] = h.betti;
    d["generators"] = h.generators;
    std::vector<std::vector<std::string>> torsion;
    for (const auto& t : h.torsion) {
        std::vector<std::string> row;
        for (const auto& z : t) {
            row.push_back(z.get_str());
        }
        torsion.push_back(row);
    }
    d["torsion"] = torsion;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Positroid cells, boundary complexes and localized integrands of admissible diagrams";
    m.attr("DEFAULT_SEED") = kDefaultSeed;

    m.def("enumerate", [](int k, int n) {
        std::vector<std::string> out;
        for (const auto& w : enumerate_admissible(k, n)) {
            out.push_back(format_diagram(w));
        }
        return out;
    }, py::arg("k"), py::arg("n"), "Admissible diagrams as text.");

    m.def("is_admissible", [](const std::string& diagram) { return is_admissible(parse_diagram(diagram)).admissible; },
          py::arg("diagram"));

    m.def("diagram_name", [](const std::string& diagram) { return diagram_name(parse_diagram(diagram)); },
          py::arg("diagram"));

    m.def("named_diagram", [](const std::string& name) { return format_diagram(named_diagram(name).diagram); },
          py::arg("name"));

    m.def("cell", [](const std::string& diagram) { return cell_dict(cell_of(parse_diagram(diagram))); },
          py::arg("diagram"), "Le diagram, dimension and bases of the cell of a diagram.");

    m.def("le_bases", [](const std::string& le, int k, int n) { return le_bases(LeDiagram::parse(le, k, n)).labels(); },
          py::arg("le"), py::arg("k"), py::arg("n"));

    m.def("catalog_size", [](int k, int n) { return Catalog::get(k, n).size(); }, py::arg("k"), py::arg("n"));

    m.def("render_le", py::overload_cast<const std::string&, int, int>(&render_le), py::arg("le"), py::arg("k"),
          py::arg("n"));

    m.def("homology", [](int k, int n, bool full, const std::string& route) {
        const Subcomplex s = full ? full_complex(k, n) : build_w_complex(k, n);
        if (route == "order") {
            return homology_dict(homology(s));
        }
        if (route == "cellular") {
            return homology_dict(cellular_homology(s));
        }
        throw std::invalid_argument("route must be 'order' or 'cellular'");
    }, py::arg("k") = 2, py::arg("n") = 6, py::arg("full") = false, py::arg("route") = "order");

    m.def("boundary_census", [](int k, int n) {
        const SharedBoundaryReport rep = shared_boundary_report(k, n);
        py::dict d;
        d["multi"] = rep.count(SharingClass::MultiDiagram);
        d["e_pair"] = rep.count(SharingClass::EPairOnly);
        d["single"] = rep.count(SharingClass::Single);
        return d;
    }, py::arg("k") = 2, py::arg("n") = 6);

    m.def("r_denominator", [](const std::string& diagram) {
        std::vector<std::string> out;
        for (const auto& f : r_denominator(parse_diagram(diagram))) {
            out.push_back(to_string(f));
        }
        return out;
    }, py::arg("diagram"));

    m.def("integrand", [](const std::string& diagram, std::uint64_t seed) {
        const Diagram w = parse_diagram(diagram);
        return to_string(integral_value(w, generate_positive_data(w.n(), w.k(), seed)).finite());
    }, py::arg("diagram"), py::arg("seed") = kDefaultSeed, "Exact integrand value as 'p/q'.");

    m.def("kernel_vanishes", [](const std::string& diagram, std::uint64_t seed) {
        const Diagram w = parse_diagram(diagram);
        const ExternalData d = generate_positive_data(w.n(), w.k(), seed);
        for (const auto& row : kernel_product(localized_matrix(w, d), d)) {
            for (const auto& x : row) {
                if (x != 0) {
                    return false;
                }
            }
        }
        return true;
    }, py::arg("diagram"), py::arg("seed") = kDefaultSeed);

    m.def("cancellation", [](int k, int n, std::uint64_t seed) {
        const CancellationReport rep = cancellation_report(k, n, seed);
        py::dict d;
        d["rows"] = rep.rows.size();
        d["pass"] = rep.count(Verdict::Pass);
        d["fail"] = rep.count(Verdict::Fail);
        d["inconclusive"] = rep.count(Verdict::Inconclusive);
        d["identities"] = rep.identities.size();
        d["identities_hold"] = rep.identities_hold();
        return d;
    }, py::arg("k") = 2, py::arg("n") = 6, py::arg("seed") = kDefaultSeed);

    m.def("write_report", [](const std::string& kind, const std::filesystem::path& out_dir, std::uint64_t seed) {
        ReportOptions o;
        o.out_dir = out_dir;
        o.seed = seed;
        const ReportResult r = write_report(kind, o);
        py::dict d;
        d["files"] = r.files;
        d["fixtures_match"] = r.fixtures_match;
        d["mismatches"] = r.mismatches;
        d["summary"] = r.summary;
        return d;
    }, py::arg("kind"), py::arg("out_dir"), py::arg("seed") = kDefaultSeed);
}
