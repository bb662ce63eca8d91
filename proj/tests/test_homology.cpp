#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "wlpw/homology.hpp"

using namespace wlpw;

namespace {

using Facets = std::vector<std::vector<std::uint32_t>>;

Facets projective_plane() {
    return {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
}

Facets torus() {
    Facets out;
    for (std::uint32_t i = 0; i < 7; ++i) {
        out.push_back({i, (i + 1) % 7, (i + 3) % 7});
        out.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return out;
}

// Chains of each length in a poset restricted to `cells`, counted by dynamic programming.
std::vector<std::size_t> chain_counts(const FacePoset& poset, const std::vector<std::size_t>& cells) {
    std::vector<std::vector<std::size_t>> ending(cells.size());
    std::size_t longest = 0;
    // Process in dimension order so predecessors are complete.
    std::vector<std::size_t> order(cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return poset.dim(cells[x]) < poset.dim(cells[y]); });
    for (std::size_t a : order) {
        ending[a].assign(1, 1);
        for (std::size_t b : order) {
            if (poset.dim(cells[b]) >= poset.dim(cells[a]) || !poset.leq(cells[b], cells[a])) {
                continue;
            }
            if (ending[a].size() < ending[b].size() + 1) {
                ending[a].resize(ending[b].size() + 1, 0);
            }
            for (std::size_t len = 0; len < ending[b].size(); ++len) {
                ending[a][len + 1] += ending[b][len];
            }
        }
        longest = std::max(longest, ending[a].size());
    }
    std::vector<std::size_t> total(longest, 0);
    for (const auto& e : ending) {
        for (std::size_t len = 0; len < e.size(); ++len) {
            total[len] += e[len];
        }
    }
    return total;
}

std::vector<std::size_t> generator_counts(const ChainComplex& c) {
    std::vector<std::size_t> out;
    for (int d = 0; d <= c.top_degree(); ++d) {
        out.push_back(c.generators(d));
    }
    return out;
}

}  // namespace

TEST_CASE("homology of small simplicial complexes") {
    const auto sphere = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(homology(sphere).betti == std::vector<long>{1, 0, 1});
    CHECK(boundary_squares_to_zero(sphere));

    const auto t = SimplicialComplex::from_facets(torus());
    CHECK(homology(t).betti == std::vector<long>{1, 2, 1});
    CHECK(oracle::betti_mod_p(t, 1000003) == std::vector<long>{1, 2, 1});

    const auto rp2 = SimplicialComplex::from_facets(projective_plane());
    const HomologyResult h = homology(rp2);
    CHECK(h.betti == std::vector<long>{1, 0, 0});
    REQUIRE(h.torsion.size() == 3);
    CHECK(h.torsion[1] == std::vector<mpz_class>{2});
    CHECK(oracle::betti_mod_p(rp2, 2) == std::vector<long>{1, 1, 1});
    CHECK(oracle::betti_mod_p(rp2, 3) == std::vector<long>{1, 0, 0});
    CHECK(h.euler_characteristic() == h.alternating_generator_sum());
}

TEST_CASE("Smith invariants") {
    CHECK(smith_invariants({{2, 4}, {6, 8}}) == std::vector<mpz_class>{2, 4});
    CHECK(smith_invariants({{0, 0}, {0, 0}}).empty());
    CHECK(smith_invariants({{6}}) == std::vector<mpz_class>{6});
}

TEST_CASE("closure of a single top cell is contractible") {
    const FacePoset& poset = face_poset(2, 6);
    const Subcomplex closed{&poset, poset.down_closure({poset.index_of("0+0+/++++")})};
    const HomologyResult h = homology(closed);
    CHECK(h.betti == std::vector<long>{1, 0, 0, 0, 0, 0, 0});
    CHECK(cellular_homology(closed).betti == h.betti);
}

TEST_CASE("order complex of W(2,6) has the chain counts of its poset") {
    const Subcomplex w = build_w_complex(2, 6);
    const SimplicialComplex oc = SimplicialComplex::order_complex(*w.poset, w.cells);
    CHECK(generator_counts(oc) == chain_counts(*w.poset, w.cells));
    CHECK(generator_counts(oc) == std::vector<std::size_t>{460, 14188, 114072, 375264, 588504, 439680, 126096});
}

TEST_CASE("homology of W(2,6)") {
    const Subcomplex w = build_w_complex(2, 6);
    const HomologyResult h = homology(w);
    CHECK(h.betti == std::vector<long>{1, 0, 0, 0, 0, 1, 0});
    CHECK(h.unit_pivots);
    for (const auto& t : h.torsion) {
        CHECK(t.empty());
    }
    CHECK(h.euler_characteristic() == h.alternating_generator_sum());
    const CellularComplex cells(*w.poset, w.cells);
    CHECK(boundary_squares_to_zero(cells));
    CHECK(cellular_homology(w).betti == h.betti);
    CHECK(oracle::betti_mod_p(cells, 1000003) == h.betti);
    CHECK(oracle::betti_mod_p(cells, 2) == h.betti);
}

TEST_CASE("the full complex of Gr(2,6) by the cellular route") {
    const Subcomplex full = full_complex(2, 6);
    const CellularComplex cells(*full.poset, full.cells);
    CHECK(boundary_squares_to_zero(cells));
    const std::vector<long> point{1, 0, 0, 0, 0, 0, 0, 0, 0};
    CHECK(cellular_homology(full).betti == point);
    CHECK(oracle::betti_mod_p(cells, 1000003) == point);
}

TEST_CASE("order complex of a small Grassmannian") {
    const Subcomplex full = full_complex(2, 4);
    const SimplicialComplex oc = SimplicialComplex::order_complex(*full.poset, full.cells);
    CHECK(boundary_squares_to_zero(oc));
    CHECK(generator_counts(oc) == chain_counts(*full.poset, full.cells));
    const HomologyResult h = homology(full);
    CHECK(h.betti == std::vector<long>{1, 0, 0, 0, 0});
    CHECK(oracle::betti_mod_p(oc, 1000003) == h.betti);
}
