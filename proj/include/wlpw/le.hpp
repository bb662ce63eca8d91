#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wlpw/basis_set.hpp"

namespace wlpw {

// A +/0 filling of a Young shape inside the k x (n-k) box. Rows are stored
// top to bottom; true means '+'. The Le condition is checked by validate_le.
class LeDiagram {
public:
    LeDiagram() = default;
    LeDiagram(int k, int n, std::vector<std::vector<bool>> rows);

    // "0+0+/++++": rows joined by '/'; fewer than k rows are padded with empty rows.
    static LeDiagram parse(const std::string& text, int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    int row_length(int r) const { return static_cast<int>(rows_.at(r).size()); }
    bool plus(int r, int c) const { return rows_.at(r).at(c); }
    const std::vector<std::vector<bool>>& rows() const { return rows_; }

    std::string str() const;

    friend bool operator==(const LeDiagram&, const LeDiagram&) = default;

private:
    int k_ = 0;
    int n_ = 0;
    std::vector<std::vector<bool>> rows_;
};

// No 0 has a '+' somewhere to its left in its row and somewhere above it in its column.
bool validate_le(const LeDiagram& le);

// Number of '+' boxes.
int dimension(const LeDiagram& le);

// Directed graph on border labels 1..n and '+' boxes. Label a is node a-1;
// box nodes follow. Arcs point left along rows and down along columns.
struct LeGraph {
    int k = 0;
    int n = 0;
    int node_count = 0;
    SubsetMask sources = 0;  // row labels
    SubsetMask targets = 0;  // column labels
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::pair<int, int>> box_of_node;  // (row, col) for nodes >= n
    std::vector<int> row_label;                    // per row
    std::vector<int> column_label;                 // per column

    int label_node(int label) const { return label - 1; }
};

LeGraph gamma_graph(const LeDiagram& le);

// Pairwise vertex-disjoint paths from every element of I to distinct elements
// of J, decided by unit-vertex-capacity max flow. Throws on |I| != |J|.
bool vdp_exists(const LeGraph& g, SubsetMask sources_subset, SubsetMask targets_subset);

// B is a basis iff a vertex-disjoint path system joins S\B to T∩B.
BasisSet le_bases(const LeDiagram& le);

// Every Le diagram in the k x (n-k) box (not paired with bases).
std::vector<LeDiagram> enumerate_le_diagrams(int k, int n);

struct CatalogEntry {
    LeDiagram le;
    BasisSet bases;
    int dim = 0;
};

// The positroid cells of Gr>=0(k,n), indexed by Le diagram and by bases.
// Entries are sorted by dimension, then by Le string.
class Catalog {
public:
    Catalog(int k, int n);

    // Shared, lazily built instance per (k,n).
    static const Catalog& get(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    std::optional<std::size_t> find(const BasisSet& bases) const;
    std::optional<std::size_t> find(const std::string& le) const;

    // Throws NotAPositroid if no entry has these bases.
    const CatalogEntry& by_bases(const BasisSet& bases) const;

private:
    int k_;
    int n_;
    std::vector<CatalogEntry> entries_;
    std::unordered_map<BasisSet, std::size_t, BasisSetHash> by_bases_;
    std::unordered_map<std::string, std::size_t> by_le_;
};

std::vector<CatalogEntry> enumerate_le(int k, int n);

LeDiagram le_from_bases(const BasisSet& bases);

}  // namespace wlpw
