#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "wlpw/complex.hpp"
#include "wlpw/fixtures.hpp"
#include "wlpw/homology.hpp"
#include "wlpw/positroid.hpp"

using namespace wlpw;

TEST_CASE("every catalog basis set satisfies basis exchange") {
    for (const auto& e : Catalog::get(2, 6).entries()) {
        CHECK(oracle::exchange_axiom(e.bases.masks()));
    }
    const auto& big = Catalog::get(3, 8).entries();
    for (std::size_t i = 0; i < big.size(); i += 53) {
        CHECK(oracle::exchange_axiom(big[i].bases.masks()));
    }
}

TEST_CASE("Le diagrams round trip through their bases") {
    for (const auto& e : Catalog::get(2, 6).entries()) {
        CHECK(le_from_bases(le_bases(e.le)) == e.le);
    }
    const auto les = enumerate_le_diagrams(3, 8);
    for (std::size_t i = 0; i < les.size(); i += 97) {
        CHECK(le_from_bases(le_bases(les[i])) == les[i]);
    }
    CHECK(Catalog::get(3, 8).size() == oracle::decorated_permutations(3, 8));
}

TEST_CASE("dimension equals the box count minus zeros and absent boxes") {
    for (const auto& le : enumerate_le_diagrams(2, 6)) {
        int zeros = 0;
        int present = 0;
        for (const auto& row : le.rows()) {
            present += static_cast<int>(row.size());
            zeros += static_cast<int>(std::count(row.begin(), row.end(), false));
        }
        CHECK(dimension(le) == 2 * 4 - zeros - (2 * 4 - present));
    }
}

TEST_CASE("max-flow path systems agree with exhaustive search") {
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 6}, {3, 6}}) {
        for (const auto& le : enumerate_le_diagrams(k, n)) {
            const LeGraph g = gamma_graph(le);
            for (SubsetMask i = 0; i < (SubsetMask{1} << n); ++i) {
                if ((i & ~g.sources) != 0) {
                    continue;
                }
                for (SubsetMask j = 0; j < (SubsetMask{1} << n); ++j) {
                    if ((j & ~g.targets) != 0 || popcount(i) != popcount(j)) {
                        continue;
                    }
                    CHECK(vdp_exists(g, i, j) == oracle::vdp_search(g, i, j));
                }
            }
        }
    }
}

TEST_CASE("matching and substitution give the same bases") {
    std::vector<Diagram> diagrams = enumerate_admissible(2, 6);
    diagrams.push_back(Diagram(8, {{2, 4}, {4, 7}, {5, 7}}));
    diagrams.push_back(shared_edge_example_3_8());
    for (const auto& w : diagrams) {
        const SupportPattern p = c_pattern(w);
        const BasisSet matched = bases_from_matching(p);
        CHECK(matched.masks() == oracle::transversal_bases(p.rows, p.n));
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            CHECK(bases_from_substitution({p, NoConstraint{}}, seed, 1) == matched);
        }
    }
    for (const auto& w : enumerate_admissible(3, 8)) {
        const SupportPattern p = c_pattern(w);
        CHECK(bases_from_matching(p).masks() == oracle::transversal_bases(p.rows, p.n));
    }
}

TEST_CASE("bases are rotation equivariant") {
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 6}, {3, 8}}) {
        for (const auto& w : enumerate_admissible(k, n)) {
            const BasisSet base = cell_of(w).bases;
            for (int r = 1; r < n; ++r) {
                CHECK(cell_of(rotate(w, r)).bases == base.rotated(r));
            }
        }
    }
}

TEST_CASE("enumeration is closed under rotation") {
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 6}, {2, 7}, {3, 8}}) {
        const auto all = enumerate_admissible(k, n);
        const std::set<Diagram> lookup(all.begin(), all.end());
        for (const auto& w : all) {
            for (int r = 0; r < n; ++r) {
                CHECK(lookup.count(rotate(w, r)) == 1);
            }
        }
    }
}

TEST_CASE("admissible diagrams have four-vertex supports") {
    for (int k = 1; k <= 3; ++k) {
        for (int n = k + 4; n <= 8; ++n) {
            for (const auto& w : enumerate_admissible(k, n)) {
                for (const auto& p : w.props()) {
                    CHECK(support(w, p).size() == 4);
                }
                for (unsigned q = 1; q < (1U << k); ++q) {
                    CHECK(popcount(support_of_subset(w, q)) >= std::popcount(q) + 3);
                }
            }
        }
    }
}

TEST_CASE("equivalent diagrams share a cell") {
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 6}, {2, 7}}) {
        const auto all = enumerate_admissible(k, n);
        for (const auto& a : all) {
            for (const auto& b : all) {
                if (equivalent(a, b)) {
                    CHECK(cell_of(a) == cell_of(b));
                }
            }
        }
    }
}

TEST_CASE("boundary maps square to zero") {
    const Subcomplex w = build_w_complex(2, 6);
    CHECK(boundary_squares_to_zero(SimplicialComplex::order_complex(*w.poset, w.cells)));
    CHECK(boundary_squares_to_zero(CellularComplex(*w.poset, w.cells)));
    const Subcomplex full = full_complex(2, 5);
    CHECK(boundary_squares_to_zero(SimplicialComplex::order_complex(*full.poset, full.cells)));
}
