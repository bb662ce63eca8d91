#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wlpw/complex.hpp"

namespace wlpw {

// Integer column, sorted by row index.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// A free chain complex over Z with generators in degrees 0..top_degree().
class ChainComplex {
public:
    virtual ~ChainComplex() = default;
    virtual int top_degree() const = 0;
    virtual std::size_t generators(int degree) const = 0;
    // Column j of the boundary map from degree d to degree d-1 (d >= 1).
    virtual void boundary_column(int d, std::size_t j, SparseColumn& out) const = 0;
};

// Simplices stored per degree as lexicographically sorted vertex tuples.
class SimplicialComplex : public ChainComplex {
public:
    // Closure of the given facets (vertex lists, any order).
    static SimplicialComplex from_facets(const std::vector<std::vector<std::uint32_t>>& facets);
    // Chains of a poset restricted to `cells`; `cells` must be sorted along a linear extension.
    static SimplicialComplex order_complex(const FacePoset& poset, const std::vector<std::size_t>& cells);

    int top_degree() const override { return static_cast<int>(flat_.size()) - 1; }
    std::size_t generators(int degree) const override;
    void boundary_column(int d, std::size_t j, SparseColumn& out) const override;

    std::vector<std::uint32_t> simplex(int degree, std::size_t j) const;
    // Index of a sorted vertex tuple, or generators(degree) if absent.
    std::size_t find(int degree, const std::uint32_t* vertices) const;

private:
    std::vector<std::vector<std::uint32_t>> flat_;  // degree d: (d+1) entries per simplex
};

// Cells of a downward-closed poset subset with regular-CW incidence numbers.
class CellularComplex : public ChainComplex {
public:
    CellularComplex(const FacePoset& poset, const std::vector<std::size_t>& cells);

    int top_degree() const override { return static_cast<int>(columns_.size()) - 1; }
    std::size_t generators(int degree) const override { return cells_by_degree_.at(degree).size(); }
    void boundary_column(int d, std::size_t j, SparseColumn& out) const override { out = columns_.at(d).at(j); }

private:
    std::vector<std::vector<std::size_t>> cells_by_degree_;
    std::vector<std::vector<SparseColumn>> columns_;
};

struct HomologyResult {
    std::vector<std::size_t> generators;  // per degree
    std::vector<std::size_t> ranks;       // rank of the boundary out of degree d; ranks[0] = 0
    std::vector<long> betti;
    std::vector<std::vector<mpz_class>> torsion;  // invariant factors > 1 per degree
    bool unit_pivots = true;

    long euler_characteristic() const;
    long alternating_generator_sum() const;
};

// Column reduction with clearing over Z. Torsion is certified free when every
// pivot is a unit; otherwise a dense Smith form is computed when small enough.
HomologyResult homology(const ChainComplex& complex);

// Order-complex route.
HomologyResult homology(const Subcomplex& s);
// Cellular route with diamond-propagated incidence signs.
HomologyResult cellular_homology(const Subcomplex& s);

// Checks that consecutive boundary maps compose to zero in every degree.
bool boundary_squares_to_zero(const ChainComplex& complex);

// Diagonal of the Smith normal form (nonzero entries, ascending divisibility).
std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> m);

}  // namespace wlpw
