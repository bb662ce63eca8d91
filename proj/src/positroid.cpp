#include "wlpw/positroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "wlpw/errors.hpp"
#include "wlpw/rational.hpp"

namespace wlpw {

std::vector<std::vector<bool>> SupportPattern::starred() const {
    std::vector<std::vector<bool>> grid(k, std::vector<bool>(n + 1, false));
    for (int r = 0; r < k; ++r) {
        grid[r][0] = true;
        for (int a = 1; a <= n; ++a) {
            grid[r][a] = slot(r, a);
        }
    }
    return grid;
}

SupportPattern c_pattern(const Diagram& w) {
    SupportPattern p;
    p.k = w.k();
    p.n = w.n();
    p.row_prop = row_order(w);
    for (int b : p.row_prop) {
        p.rows.push_back(support_mask(w.prop(b), w.n()));
    }
    return p;
}

BoundaryMatrixPattern boundary_pattern(const BoundaryDiagram& d) {
    BoundaryMatrixPattern bp;
    bp.base = c_pattern(d.parent);
    auto row_of = [&](int prop) {
        return static_cast<int>(std::find(bp.base.row_prop.begin(), bp.base.row_prop.end(), prop) -
                                bp.base.row_prop.begin());
    };
    if (d.kind == BoundaryKind::VertexDrop) {
        bp.constraint = ZeroEntry{row_of(d.prop), d.vertex};
    } else {
        bp.constraint = Rank1Block{row_of(d.prop), row_of(d.touched), d.edge};
    }
    return bp;
}

BasisSet bases_from_matching(const SupportPattern& p) {
    std::vector<SubsetMask> out;
    for (SubsetMask b : k_subsets(p.n, p.k)) {
        const auto cols = mask_elements(b);
        std::vector<int> perm(p.k);
        std::iota(perm.begin(), perm.end(), 0);
        bool found = false;
        do {
            found = true;
            for (int r = 0; r < p.k && found; ++r) {
                found = p.slot(r, cols[perm[r]]);
            }
        } while (!found && std::next_permutation(perm.begin(), perm.end()));
        if (found) {
            out.push_back(b);
        }
    }
    return BasisSet(p.k, p.n, std::move(out));
}

BasisSet bases_from_substitution(const BoundaryMatrixPattern& p, std::uint64_t seed, int draws) {
    const int k = p.base.k;
    const int n = p.base.n;
    constexpr long kScale = 1000000;
    boost::random::mt19937_64 rng(seed);
    boost::random::uniform_int_distribution<long> dist(1, kScale - 1);
    auto sample = [&]() -> Rational {
        Rational q(dist(rng), kScale);
        q.canonicalize();
        return q + 1;
    };

    std::vector<SubsetMask> found;
    for (int draw = 0; draw < draws; ++draw) {
        RationalMatrix m(k, RationalVector(n + 1, Rational(0)));
        for (int r = 0; r < k; ++r) {
            for (int a = 1; a <= n; ++a) {
                if (p.base.slot(r, a)) {
                    m[r][a] = sample();
                }
            }
        }
        if (const auto* z = std::get_if<ZeroEntry>(&p.constraint)) {
            m.at(z->row).at(z->column) = 0;
        } else if (const auto* blk = std::get_if<Rank1Block>(&p.constraint)) {
            const Rational lambda = sample();
            const int a = blk->column;
            const int a1 = next_vertex(a, n);
            m.at(blk->second).at(a) = lambda * m.at(blk->first).at(a);
            m.at(blk->second).at(a1) = lambda * m.at(blk->first).at(a1);
        }
        for (SubsetMask b : k_subsets(n, k)) {
            const auto cols = mask_elements(b);
            RationalMatrix minor(k, RationalVector(k));
            for (int r = 0; r < k; ++r) {
                for (int c = 0; c < k; ++c) {
                    minor[r][c] = m[r][cols[c]];
                }
            }
            if (sgn(determinant(std::move(minor))) != 0) {
                found.push_back(b);
            }
        }
    }
    if (found.empty()) {
        throw std::domain_error("pattern is rank deficient: every maximal minor vanished");
    }
    return BasisSet(k, n, std::move(found));
}

BasisSet bases_from_pattern(const SupportPattern& p) { return bases_from_matching(p); }

BasisSet bases_from_pattern(const BoundaryMatrixPattern& p, std::uint64_t seed) {
    if (std::holds_alternative<NoConstraint>(p.constraint)) {
        return bases_from_matching(p.base);
    }
    return bases_from_substitution(p, seed);
}

PositroidCell cell_from_bases(const BasisSet& bases) {
    const auto& entry = Catalog::get(bases.rank(), bases.ground()).by_bases(bases);
    return {entry.bases, entry.le, entry.dim};
}

PositroidCell cell_of(const Diagram& w) {
    if (auto adm = is_admissible(w); !adm) {
        throw std::invalid_argument("cell_of needs an admissible diagram (" + to_string(adm.reason) + "): " +
                                    format_diagram(w));
    }
    return cell_from_bases(bases_from_matching(c_pattern(w)));
}

PositroidCell boundary_cell_of(const BoundaryDiagram& d, std::uint64_t seed) {
    if (d.degenerate) {
        throw DegenerateBoundary("boundary (" + std::to_string(d.prop) + "," + std::to_string(d.vertex) + ") of " +
                                 format_diagram(d.parent) + " is degenerate");
    }
    return cell_from_bases(bases_from_pattern(boundary_pattern(d), seed));
}

}  // namespace wlpw
