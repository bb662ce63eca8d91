#include "wlpw/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "wlpw/fixtures.hpp"

namespace wlpw {

Json diagram_to_json(const Diagram& w) {
    Json props = Json::array();
    for (const auto& p : w.props()) {
        props.push_back({p.i, p.j});
    }
    return Json{{"n", w.n()}, {"props", props}};
}

Diagram diagram_from_json(const Json& j) {
    std::vector<Propagator> props;
    for (const auto& p : j.at("props")) {
        if (!p.is_array() || p.size() != 2) {
            throw std::invalid_argument("each propagator must be a pair of edge labels");
        }
        props.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    return Diagram(j.at("n").get<int>(), std::move(props));
}

Json bases_to_json(const BasisSet& b) {
    Json out = Json::array();
    for (SubsetMask m : b.masks()) {
        Json elems = Json::array();
        for (int a : mask_elements(m)) {
            elems.push_back(std::to_string(a));
        }
        out.push_back(std::move(elems));
    }
    return out;
}

Json catalog_to_json(const Catalog& catalog) {
    Json out = Json::array();
    for (const auto& e : catalog.entries()) {
        out.push_back(Json{{"le", e.le.str()}, {"dimension", e.dim}, {"bases", bases_to_json(e.bases)}});
    }
    return out;
}

std::string diagram_id(const Diagram& w) {
    if (w.n() == 6 && w.k() == 2) {
        if (auto name = diagram_name(w)) {
            return *name;
        }
    }
    return format_diagram(w);
}

Json cell_record_json(const PositroidCell& cell, const std::vector<Diagram>& sources) {
    Json ids = Json::array();
    for (const auto& w : sources) {
        ids.push_back(diagram_id(w));
    }
    return Json{{"le", cell.le.str()}, {"dim", cell.dim}, {"bases", bases_to_json(cell.bases)}, {"sources", ids}};
}

Json homology_to_json(const HomologyResult& h) {
    Json out = Json::array();
    for (std::size_t d = 0; d < h.betti.size(); ++d) {
        Json torsion = Json::array();
        for (const auto& t : h.torsion.at(d)) {
            torsion.push_back(t.get_str());
        }
        out.push_back(Json{{"degree", d}, {"betti", h.betti[d]}, {"torsion", torsion}});
    }
    return out;
}

Json data_to_json(const ExternalData& data) {
    Json nodes = Json::array();
    for (const auto& x : data.nodes) {
        nodes.push_back(to_string(x));
    }
    Json mu = Json::array();
    for (const auto& x : data.gauge_mu()) {
        mu.push_back(to_string(x));
    }
    return Json{{"nodes", nodes}, {"gauge_mu", mu}, {"seed", data.seed}};
}

ExternalData data_from_json(const Json& j, int k) {
    std::vector<Rational> nodes;
    for (const auto& x : j.at("nodes")) {
        nodes.push_back(parse_rational(x.get<std::string>()));
    }
    RationalVector mu;
    for (const auto& x : j.at("gauge_mu")) {
        mu.push_back(parse_rational(x.get<std::string>()));
    }
    return data_from_nodes(k, nodes, mu, j.value("seed", std::uint64_t{0}));
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

namespace {

// Fixture-style name of a top cell: its diagrams joined by '|', or a missing-cell label.
std::string top_cell_name(const SharedBoundaryReport& report, std::size_t cell) {
    std::vector<std::string> names;
    for (std::size_t d = 0; d < report.diagrams.size(); ++d) {
        if (report.diagram_cell[d] == cell) {
            names.push_back(diagram_id(report.diagrams[d]));
        }
    }
    const std::string le = face_poset(report.k, report.n).cell(cell).le.str();
    if (names.empty() && report.k == 2 && report.n == 6) {
        for (const auto& [name, missing_le] : missing_cells_2_6()) {
            if (missing_le == le) {
                return name;
            }
        }
    }
    if (names.empty()) {
        return le;
    }
    std::string out = names.front();
    for (std::size_t i = 1; i < names.size(); ++i) {
        out += "|" + names[i];
    }
    return out;
}

std::string label_text(const SharedBoundaryReport& report, const BoundaryLabel& l) {
    const Diagram& w = report.diagrams.at(l.diagram);
    const Propagator& p = w.prop(l.prop);
    return fmt::format("{}[{}-{}@{}]", diagram_id(w), p.i, p.j, l.vertex);
}

std::string decimal(const Rational& q) { return fmt::format("{:.12e}", q.get_d()); }

}  // namespace

std::string adjacency_csv(const SharedBoundaryReport& report) {
    const FacePoset& poset = face_poset(report.k, report.n);
    std::vector<std::size_t> tops;
    for (const auto& row : report.rows) {
        tops.insert(tops.end(), row.incident_tops.begin(), row.incident_tops.end());
    }
    std::sort(tops.begin(), tops.end());
    tops.erase(std::unique(tops.begin(), tops.end()), tops.end());

    std::ostringstream out;
    out << "cell,sharing";
    for (std::size_t t : tops) {
        out << "," << csv_field(top_cell_name(report, t));
    }
    out << ",labels\n";
    for (const auto& row : report.rows) {
        out << csv_field(poset.cell(row.cell).le.str()) << "," << to_string(row.sharing);
        for (std::size_t t : tops) {
            const bool incident =
                std::find(row.incident_tops.begin(), row.incident_tops.end(), t) != row.incident_tops.end();
            out << "," << (incident ? "1" : "0");
        }
        std::string labels;
        for (const auto& l : row.labels) {
            labels += (labels.empty() ? "" : ";") + label_text(report, l);
        }
        out << "," << csv_field(labels) << "\n";
    }
    return out.str();
}

std::string cancellation_csv(const CancellationReport& report) {
    const SharedBoundaryReport shared = shared_boundary_report(report.k, report.n, report.seed);
    std::ostringstream out;
    out << "cell,grouping,labels,diagrams,residues,sum,relative_sum,max_error,attempts,verdict\n";
    for (const auto& row : report.rows) {
        std::string labels;
        for (const auto& l : row.labels) {
            labels += (labels.empty() ? "" : ";") + label_text(shared, l);
        }
        std::string diagrams;
        std::string residues;
        for (std::size_t i = 0; i < row.diagrams.size(); ++i) {
            diagrams += (i ? ";" : "") + diagram_id(shared.diagrams[row.diagrams[i]]);
            residues += (i ? ";" : "") + decimal(row.residues[i].value);
        }
        const std::string relative = sgn(row.max_abs) == 0 ? "nan" : decimal(Rational(abs(row.sum) / row.max_abs));
        out << csv_field(row.le) << "," << row.grouping << "," << csv_field(labels) << "," << csv_field(diagrams)
            << "," << csv_field(residues) << "," << decimal(row.sum) << "," << relative << ","
            << decimal(row.max_error) << "," << row.attempts << "," << to_string(row.verdict) << "\n";
    }
    return out.str();
}

}  // namespace wlpw
