#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "wlpw/basis_set.hpp"
#include "wlpw/diagram.hpp"
#include "wlpw/le.hpp"

namespace wlpw {

inline constexpr std::uint64_t kDefaultSeed = 20260601;
inline constexpr int kSubstitutionDraws = 5;

// Indeterminate slots of C(W); row r is supported on rows[r]. Rows follow
// row_order(W); row_prop[r] is the canonical propagator index of row r.
struct SupportPattern {
    int k = 0;
    int n = 0;
    std::vector<SubsetMask> rows;
    std::vector<int> row_prop;

    bool slot(int row, int vertex) const { return (rows.at(row) & vertex_bit(vertex)) != 0; }
    // k x (n+1) grid with column 0 all true.
    std::vector<std::vector<bool>> starred() const;
};

SupportPattern c_pattern(const Diagram& w);

struct NoConstraint {};
struct ZeroEntry {
    int row = 0;
    int column = 0;
};
// Columns `column` and its cyclic successor of `second` are a multiple of those of `first`.
struct Rank1Block {
    int first = 0;
    int second = 0;
    int column = 0;
};
using Constraint = std::variant<NoConstraint, ZeroEntry, Rank1Block>;

struct BoundaryMatrixPattern {
    SupportPattern base;
    Constraint constraint;
};

BoundaryMatrixPattern boundary_pattern(const BoundaryDiagram& d);

// Transversal-matroid bases: B is a basis iff the rows can be matched to
// distinct columns of B inside their supports.
BasisSet bases_from_matching(const SupportPattern& p);

// Union over `draws` random rational points of the non-vanishing k x k minors.
// Throws std::domain_error if every minor vanishes in every draw.
BasisSet bases_from_substitution(const BoundaryMatrixPattern& p, std::uint64_t seed = kDefaultSeed,
                                 int draws = kSubstitutionDraws);

BasisSet bases_from_pattern(const SupportPattern& p);
BasisSet bases_from_pattern(const BoundaryMatrixPattern& p, std::uint64_t seed = kDefaultSeed);

struct PositroidCell {
    BasisSet bases;
    LeDiagram le;
    int dim = 0;

    friend bool operator==(const PositroidCell& a, const PositroidCell& b) { return a.bases == b.bases; }
};

// Throws NotAPositroid for bases outside the catalog.
PositroidCell cell_from_bases(const BasisSet& bases);

// Throws std::invalid_argument for inadmissible W.
PositroidCell cell_of(const Diagram& w);

// Throws DegenerateBoundary for degenerate boundary diagrams.
PositroidCell boundary_cell_of(const BoundaryDiagram& d, std::uint64_t seed = kDefaultSeed);

}  // namespace wlpw
