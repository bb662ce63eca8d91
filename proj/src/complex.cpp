#include "wlpw/complex.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace wlpw {

FacePoset::FacePoset(const Catalog& catalog) : catalog_(&catalog) {
    const auto all = k_subsets(catalog.n(), catalog.k());
    std::map<SubsetMask, std::size_t> rank;
    for (std::size_t i = 0; i < all.size(); ++i) {
        rank[all[i]] = i;
    }
    const std::size_t m = catalog.size();
    bits_.reserve(m);
    for (const auto& e : catalog.entries()) {
        boost::dynamic_bitset<> b(all.size());
        for (SubsetMask s : e.bases.masks()) {
            b.set(rank.at(s));
        }
        bits_.push_back(std::move(b));
    }
    down_.assign(m, {});
    up_.assign(m, {});
    // Entries are sorted by dimension, so anything strictly below i precedes it.
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> below;
        for (std::size_t j = 0; j < i; ++j) {
            if (dim(j) < dim(i) && leq(j, i)) {
                below.push_back(j);
            }
        }
        for (std::size_t j : below) {
            bool cover = true;
            for (std::size_t z : below) {
                if (z != j && dim(z) > dim(j) && leq(j, z)) {
                    cover = false;
                    break;
                }
            }
            if (cover) {
                down_[i].push_back(j);
                up_[j].push_back(i);
            }
        }
    }
}

std::vector<std::size_t> FacePoset::down_closure(const std::vector<std::size_t>& tops) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t t : tops) {
            if (leq(i, t)) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

std::size_t FacePoset::index_of(const std::string& le) const {
    auto idx = catalog_->find(le);
    if (!idx) {
        throw std::invalid_argument("no cell with Le diagram " + le);
    }
    return *idx;
}

bool Subcomplex::contains(std::size_t i) const { return std::binary_search(cells.begin(), cells.end(), i); }

bool Subcomplex::is_downward_closed() const {
    for (std::size_t c : cells) {
        for (std::size_t i = 0; i < poset->size(); ++i) {
            if (poset->leq(i, c) && !contains(i)) {
                return false;
            }
        }
    }
    return true;
}

int Subcomplex::top_dimension() const {
    int d = -1;
    for (std::size_t c : cells) {
        d = std::max(d, poset->dim(c));
    }
    return d;
}

const FacePoset& face_poset(int k, int n) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<FacePoset>> cache;
    const Catalog& catalog = Catalog::get(k, n);
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{k, n}];
    if (!slot) {
        slot = std::make_unique<FacePoset>(catalog);
    }
    return *slot;
}

Subcomplex full_complex(int k, int n) {
    const FacePoset& poset = face_poset(k, n);
    Subcomplex s{&poset, {}};
    for (std::size_t i = 0; i < poset.size(); ++i) {
        s.cells.push_back(i);
    }
    return s;
}

Subcomplex build_w_complex(int k, int n) {
    const FacePoset& poset = face_poset(k, n);
    std::vector<std::size_t> tops;
    for (const auto& w : enumerate_admissible(k, n)) {
        tops.push_back(*poset.catalog().find(cell_of(w).bases));
    }
    std::sort(tops.begin(), tops.end());
    tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
    return Subcomplex{&poset, poset.down_closure(tops)};
}

std::string to_string(SharingClass c) {
    switch (c) {
        case SharingClass::MultiDiagram: return "multi";
        case SharingClass::EPairOnly: return "e-pair";
        case SharingClass::Single: return "single";
    }
    return "unknown";
}

std::size_t SharedBoundaryReport::count(SharingClass c) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [c](const CodimOneRow& r) { return r.sharing == c; }));
}

std::vector<std::size_t> SharedBoundaryReport::shared_cells(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    for (const auto& row : rows) {
        const bool has_a = std::find(row.diagrams.begin(), row.diagrams.end(), a) != row.diagrams.end();
        const bool has_b = std::find(row.diagrams.begin(), row.diagrams.end(), b) != row.diagrams.end();
        if (has_a && has_b) {
            out.push_back(row.cell);
        }
    }
    return out;
}

SharedBoundaryReport shared_boundary_report(int k, int n, std::uint64_t seed) {
    const FacePoset& poset = face_poset(k, n);
    SharedBoundaryReport rep;
    rep.k = k;
    rep.n = n;
    rep.diagrams = enumerate_admissible(k, n);
    int top = 0;
    for (const auto& w : rep.diagrams) {
        rep.diagram_cell.push_back(*poset.catalog().find(cell_of(w).bases));
        top = std::max(top, poset.dim(rep.diagram_cell.back()));
    }
    std::vector<std::size_t> wld_cells = rep.diagram_cell;
    std::sort(wld_cells.begin(), wld_cells.end());
    wld_cells.erase(std::unique(wld_cells.begin(), wld_cells.end()), wld_cells.end());

    const Subcomplex w_complex{&poset, poset.down_closure(wld_cells)};
    std::map<std::size_t, std::size_t> row_of_cell;
    for (std::size_t c : w_complex.cells) {
        if (poset.dim(c) != top - 1) {
            continue;
        }
        CodimOneRow row;
        row.cell = c;
        for (std::size_t t : wld_cells) {
            if (poset.leq(c, t)) {
                row.top_cells.push_back(t);
            }
        }
        for (std::size_t d = 0; d < rep.diagrams.size(); ++d) {
            if (poset.leq(c, rep.diagram_cell[d])) {
                row.diagrams.push_back(d);
            }
        }
        for (std::size_t t = 0; t < poset.size(); ++t) {
            if (poset.dim(t) == top && poset.leq(c, t)) {
                row.incident_tops.push_back(t);
            }
        }
        if (row.top_cells.size() >= 2) {
            row.sharing = SharingClass::MultiDiagram;
        } else if (row.diagrams.size() >= 2) {
            row.sharing = SharingClass::EPairOnly;
        } else {
            row.sharing = SharingClass::Single;
        }
        row_of_cell[c] = rep.rows.size();
        rep.rows.push_back(std::move(row));
    }

    for (std::size_t d = 0; d < rep.diagrams.size(); ++d) {
        for (const auto& bd : boundary_diagrams(rep.diagrams[d])) {
            const BasisSet bases = bases_from_pattern(boundary_pattern(bd), seed);
            const std::size_t cell = *poset.catalog().find(poset.catalog().by_bases(bases).le.str());
            if (bd.degenerate) {
                rep.degenerate_label_cells.push_back(cell);
                continue;
            }
            auto it = row_of_cell.find(cell);
            if (it == row_of_cell.end()) {
                throw std::logic_error("nondegenerate boundary of " + format_diagram(rep.diagrams[d]) +
                                       " is not a codimension-one cell of W");
            }
            for (const auto& [prop, vertex] : bd.labels) {
                rep.rows[it->second].labels.push_back({d, prop, vertex});
            }
        }
    }
    return rep;
}

}  // namespace wlpw
