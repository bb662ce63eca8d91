#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "wlpw/diagram.hpp"
#include "wlpw/le.hpp"
#include "wlpw/positroid.hpp"

namespace wlpw {

// Cells of a catalog ordered by inclusion of basis sets. Node i is catalog entry i.
class FacePoset {
public:
    explicit FacePoset(const Catalog& catalog);

    const Catalog& catalog() const { return *catalog_; }
    std::size_t size() const { return catalog_->size(); }
    const CatalogEntry& cell(std::size_t i) const { return catalog_->entries()[i]; }
    int dim(std::size_t i) const { return cell(i).dim; }

    bool leq(std::size_t a, std::size_t b) const { return bits_[a].is_subset_of(bits_[b]); }

    // Covers from the transitive reduction: down[i] lists the cells i covers.
    const std::vector<std::size_t>& covers_down(std::size_t i) const { return down_[i]; }
    const std::vector<std::size_t>& covers_up(std::size_t i) const { return up_[i]; }

    // Sorted indices of every cell below some element of `tops`.
    std::vector<std::size_t> down_closure(const std::vector<std::size_t>& tops) const;

    std::size_t index_of(const std::string& le) const;

private:
    const Catalog* catalog_;
    std::vector<boost::dynamic_bitset<>> bits_;
    std::vector<std::vector<std::size_t>> down_;
    std::vector<std::vector<std::size_t>> up_;
};

// A downward-closed set of cells, stored as sorted poset indices.
struct Subcomplex {
    const FacePoset* poset = nullptr;
    std::vector<std::size_t> cells;

    bool contains(std::size_t i) const;
    bool is_downward_closed() const;
    int top_dimension() const;
};

// Shared instance over Catalog::get(k, n).
const FacePoset& face_poset(int k, int n);

Subcomplex full_complex(int k, int n);

// Downward closure of the cells of all admissible diagrams.
Subcomplex build_w_complex(int k, int n);

// A (diagram, row, vertex) boundary label.
struct BoundaryLabel {
    std::size_t diagram = 0;
    int prop = 0;
    int vertex = 0;
};

enum class SharingClass { MultiDiagram, EPairOnly, Single };
std::string to_string(SharingClass c);

struct CodimOneRow {
    std::size_t cell = 0;                   // poset index of the codimension-one cell
    std::vector<std::size_t> top_cells;     // WLD cells containing it
    std::vector<std::size_t> diagrams;      // admissible diagrams whose cell contains it
    std::vector<std::size_t> incident_tops; // every top-dimensional catalog cell containing it
    std::vector<BoundaryLabel> labels;      // nondegenerate boundary labels realizing it
    SharingClass sharing = SharingClass::Single;
};

struct SharedBoundaryReport {
    int k = 0;
    int n = 0;
    std::vector<Diagram> diagrams;
    std::vector<std::size_t> diagram_cell;  // poset index per diagram
    std::vector<CodimOneRow> rows;          // every (3k-1)-cell of W(k,n)
    std::vector<std::size_t> degenerate_label_cells;  // cells of degenerate boundaries, for reference

    std::size_t count(SharingClass c) const;
    // Codimension-one cells contained in the cells of both diagrams.
    std::vector<std::size_t> shared_cells(std::size_t a, std::size_t b) const;
};

SharedBoundaryReport shared_boundary_report(int k, int n, std::uint64_t seed = kDefaultSeed);

}  // namespace wlpw
