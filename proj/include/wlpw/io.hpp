#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "wlpw/amplitude.hpp"
#include "wlpw/complex.hpp"
#include "wlpw/homology.hpp"
#include "wlpw/le.hpp"
#include "wlpw/residue.hpp"

namespace wlpw {

using Json = nlohmann::ordered_json;

// {"n":6,"props":[[1,3],[1,5]]}
Json diagram_to_json(const Diagram& w);
Diagram diagram_from_json(const Json& j);

// Bases as arrays of element strings: [["1","2"],["1","3"],...].
Json bases_to_json(const BasisSet& b);

// [{le, dimension, bases}, ...] in catalog order.
Json catalog_to_json(const Catalog& catalog);

// {le, dim, bases, sources}; sources are fixture names when known, else diagram text.
Json cell_record_json(const PositroidCell& cell, const std::vector<Diagram>& sources);

// [{degree, betti, torsion:[...]}, ...]
Json homology_to_json(const HomologyResult& h);

// {nodes:["p/q",...], gauge_mu:[...], seed}
Json data_to_json(const ExternalData& data);
ExternalData data_from_json(const Json& j, int k);

// Label of a (2,6) diagram by fixture name, else its text form.
std::string diagram_id(const Diagram& w);

// Rows are codimension-one cells of W; columns are the incident top cells,
// each named by diagram or missing-cell label. Cells are listed by Le diagram.
std::string adjacency_csv(const SharedBoundaryReport& report);

// One line per checked boundary cell: cell id, labels, residues, sum, verdict.
std::string cancellation_csv(const CancellationReport& report);

// Minimal CSV quoting for fields that contain separators or quotes.
std::string csv_field(const std::string& s);

}  // namespace wlpw
