#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "wlpw/amplitude.hpp"
#include "wlpw/errors.hpp"
#include "wlpw/fixtures.hpp"
#include "wlpw/residue.hpp"

using namespace wlpw;

namespace {

RationalMatrix mu_rows(const std::vector<int>& rows, const ExternalData& data) {
    RationalMatrix m;
    for (int a : rows) {
        m.push_back(data.mu(a));
    }
    return m;
}

// det(Y)^4 / (R * prod of brackets), with Y assembled from the localized matrix and
// the fermionic columns, rows and fermionic columns both permuted by `perm`.
Rational integrand_by_hand(const Diagram& w, const ExternalData& data, const std::vector<int>& perm) {
    const RationalMatrix c = localized_matrix(w, data);
    const int k = w.k();
    RationalMatrix y(k, RationalVector(k, 0));
    for (int b = 0; b < k; ++b) {
        for (int col = 0; col < k; ++col) {
            for (int a = 1; a <= w.n(); ++a) {
                y[b][col] += c[perm[b]][a] * data.row(a)[4 + perm[col]];
            }
        }
    }
    Rational brackets = 1;
    for (const auto& p : w.props()) {
        brackets *= oracle::leibniz_det(mu_rows(bracket_rows(p, w.n()), data));
    }
    return power(oracle::leibniz_det(y), 4) / (r_value(w, data) * brackets);
}

}  // namespace

TEST_CASE("positive external data") {
    const ExternalData d = generate_positive_data(6, 2, kDefaultSeed);
    CHECK(all_maximal_minors_positive(d));
    CHECK(d.z.size() == 6);
    CHECK(d.z[0].size() == 6);
    CHECK(d.gauge[4] == 0);
    CHECK(d.gauge[5] == 0);
    CHECK(all_maximal_minors_positive(generate_positive_data(8, 3, kDefaultSeed)));
    std::vector<Rational> doubled;
    for (const auto& x : d.nodes) {
        doubled.push_back(2 * x);
    }
    CHECK(all_maximal_minors_positive(data_from_nodes(2, doubled, d.gauge_mu())));
    CHECK_THROWS(data_from_nodes(2, {Rational(2), Rational(1), Rational(3), Rational(4), Rational(5), Rational(6)},
                                 d.gauge_mu()));
}

TEST_CASE("four-brackets") {
    const ExternalData d = generate_positive_data(6, 2, kDefaultSeed);
    CHECK(bracket(1, 1, 3, 4, d) == 0);
    CHECK(bracket(1, 2, 3, 4, d) == -bracket(2, 1, 3, 4, d));
    CHECK(bracket(1, 2, 3, 4, d) > 0);
    CHECK(bracket(2, 3, 5, 6, d) == oracle::leibniz_det(mu_rows({2, 3, 5, 6}, d)));
    CHECK(bracket(kStar, 2, 3, 4, d) ==
          oracle::leibniz_det({d.gauge_mu(), d.mu(2), d.mu(3), d.mu(4)}));
    CHECK(bracket_rows({1, 6}, 6) == std::vector<int>{1, 2, 6, 1});
}

TEST_CASE("sigma replaces the vertex by the gauge in position") {
    const ExternalData d = generate_positive_data(6, 2, kDefaultSeed);
    const Propagator p{1, 4};
    CHECK(sigma(p, 2, d) == oracle::leibniz_det({d.mu(1), d.gauge_mu(), d.mu(4), d.mu(5)}));
    CHECK(sigma(p, 5, d) == oracle::leibniz_det({d.mu(1), d.mu(2), d.mu(4), d.gauge_mu()}));
    CHECK_THROWS_AS(sigma(p, 3, d), std::invalid_argument);
    const ExternalData at_vertex = with_gauge(d, d.mu(4));
    CHECK(sigma(p, 4, at_vertex) == bracket(1, 2, 4, 5, d));
    CHECK(dot(sigma_form(p, 2, d), d.gauge_mu()) == sigma(p, 2, d));
}

TEST_CASE("sigma pairs with equal reduced supports are opposite") {
    const ExternalData d = generate_positive_data(6, 2, kDefaultSeed);
    const auto ids = case_one_identities(2, 6, d);
    CHECK(ids.size() == 18);
    for (const auto& id : ids) {
        CHECK(id.ratio == -1);
        CHECK(sigma(id.p, id.v, d) == -sigma(id.q, id.w, d));
    }
}

TEST_CASE("the localized matrix annihilates the stacked data") {
    for (std::uint64_t seed : {kDefaultSeed, kDefaultSeed + 1}) {
        const ExternalData d = generate_positive_data(6, 2, seed);
        for (const auto& w : enumerate_admissible(2, 6)) {
            const RationalMatrix c = localized_matrix(w, d);
            CHECK(c.size() == 2);
            CHECK(c[0][0] == 1);
            CHECK(rank(c) == 2);
            for (const auto& row : kernel_product(c, d)) {
                for (const auto& x : row) {
                    CHECK(x == 0);
                }
            }
        }
    }
    const Diagram fig = shared_edge_example_3_8();
    const ExternalData d8 = generate_positive_data(8, 3, kDefaultSeed);
    for (const auto& row : kernel_product(localized_matrix(fig, d8), d8)) {
        for (const auto& x : row) {
            CHECK(x == 0);
        }
    }
}

TEST_CASE("denominator of the three-propagator example") {
    const Diagram w = shared_edge_example_3_8();
    std::vector<std::string> got;
    int quadratic = 0;
    for (const auto& f : r_denominator(w)) {
        got.push_back(to_string(f));
        quadratic += f.kind == PoleKind::TwoByTwo ? 1 : 0;
    }
    std::vector<std::string> expected = shared_edge_example_factors();
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
    CHECK(quadratic == 2);
    CHECK(r_denominator(w).size() == 10);
}

TEST_CASE("factor counts follow the per-edge rule") {
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 5}, {2, 6}, {2, 7}, {3, 8}}) {
        for (const auto& w : enumerate_admissible(k, n)) {
            std::vector<oracle::Pair> props;
            for (const auto& p : w.props()) {
                props.emplace_back(p.i, p.j);
            }
            CHECK(static_cast<int>(r_denominator(w).size()) == oracle::denominator_factor_count(props, n));
            CHECK(physical_factors(w).size() == static_cast<std::size_t>(k));
        }
    }
    // One propagator on an edge gives two entries; V1 shares edge 1 between its rows.
    const auto single = r_denominator(Diagram(5, {{1, 3}}));
    CHECK(single.size() == 4);
    const auto v1 = r_denominator(named_diagram("V1").diagram);
    CHECK(v1.size() == 7);
    CHECK(std::count_if(v1.begin(), v1.end(), [](const PoleFactor& f) { return f.kind == PoleKind::TwoByTwo; }) == 1);
}

TEST_CASE("R(W) is the product of its factors") {
    const ExternalData d = generate_positive_data(6, 2, kDefaultSeed);
    for (const auto& w : enumerate_admissible(2, 6)) {
        const LocalizedIntegrand integrand(w, d);
        Rational product = 1;
        for (const auto& f : integrand.factors()) {
            product *= integrand.factor_value(f, d.gauge_mu());
        }
        CHECK(product == r_value(w, d));
        CHECK(product != 0);
    }
}

TEST_CASE("integrand values") {
    const ExternalData d = generate_positive_data(6, 2, kDefaultSeed);
    Rational sum = 0;
    for (const auto& w : enumerate_admissible(2, 6)) {
        const LocalizedValue v = integral_value(w, d);
        REQUIRE_FALSE(v.infinite);
        CHECK(v.value != 0);
        CHECK(v.value == integrand_by_hand(w, d, {0, 1}));
        CHECK(v.value == integrand_by_hand(w, d, {1, 0}));
        sum += v.value;
    }
    // The sum over all diagrams does not depend on the gauge.
    const ExternalData moved = with_gauge(d, {Rational(3, 7), Rational(-2), Rational(5, 3), Rational(11, 13)});
    Rational moved_sum = 0;
    for (const auto& w : enumerate_admissible(2, 6)) {
        moved_sum += integral_value(w, moved).finite();
    }
    CHECK(sum == moved_sum);
    Rational frozen("1108076603070794355269510019123826403894171579156822836326963204367407/"
                    "1000000000000000000000000000000000000000000000000000000000");
    frozen.canonicalize();
    CHECK(sum == frozen);
}

TEST_CASE("a vanishing spurious factor gives a tagged infinity") {
    const ExternalData d = generate_positive_data(6, 2, kDefaultSeed);
    const Diagram v1 = named_diagram("V1").diagram;
    const LocalizedIntegrand integrand(v1, d);
    // Put the gauge on the plane of the first three support vectors of (1,3): sigma at vertex 4 vanishes.
    RationalVector on_plane(4);
    for (int i = 0; i < 4; ++i) {
        on_plane[i] = d.mu(1)[i] + 2 * d.mu(2)[i] - d.mu(3)[i];
    }
    const LocalizedValue v = integrand.value(on_plane);
    CHECK(v.infinite);
    CHECK_FALSE(v.vanishing.empty());
    CHECK_THROWS_AS(v.finite(), SpuriousPole);
}

TEST_CASE("pole classification matches boundary degeneracy") {
    for (const auto& w : enumerate_admissible(2, 6)) {
        CAPTURE(format_diagram(w));
        for (const auto& pc : pole_classification(w)) {
            REQUIRE(pc.factor.boundary.has_value());
            CHECK(pc.simple == !pc.factor.boundary->degenerate);
        }
    }
    const Diagram e6r = named_diagram("E6R").diagram;
    const int row = e6r.index_of({1, 4});
    bool found = false;
    for (const auto& pc : pole_classification(e6r)) {
        const auto& labels = pc.factor.boundary->labels;
        if (std::find(labels.begin(), labels.end(), std::pair{row, 5}) != labels.end()) {
            found = true;
            CHECK_FALSE(pc.simple);
            CHECK(pc.localized_multiplicity > 1);
        }
    }
    CHECK(found);
    const auto v1 = pole_classification(named_diagram("V1").diagram);
    CHECK(v1.size() == 7);
    for (const auto& pc : v1) {
        CHECK(pc.simple);
    }
}
