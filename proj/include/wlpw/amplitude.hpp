#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlpw/diagram.hpp"
#include "wlpw/positroid.hpp"
#include "wlpw/rational.hpp"

namespace wlpw {

// Index of the gauge vector in bracket arguments.
inline constexpr int kStar = 0;

// Positive external data: row a (1-based) is (1, x_a, x_a^2, ..., x_a^{3+k}).
struct ExternalData {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<Rational> nodes;  // strictly increasing, positive
    RationalMatrix z;             // n rows of 4+k entries
    RationalVector gauge;         // 4+k entries, fermionic tail zero

    const RationalVector& row(int a) const { return z.at(a - 1); }
    // First four entries of Z_a, or of the gauge for a == kStar.
    RationalVector mu(int a) const;
    RationalVector gauge_mu() const { return {gauge.begin(), gauge.begin() + 4}; }
};

// Vandermonde data on seeded increasing nodes with a random gauge.
ExternalData generate_positive_data(int n, int k, std::uint64_t seed);
// Data from explicit nodes and gauge; validates positivity and node order.
ExternalData data_from_nodes(int k, const std::vector<Rational>& nodes, const RationalVector& gauge_mu,
                             std::uint64_t seed = 0);
// Copy of `data` with a different gauge μ-part.
ExternalData with_gauge(const ExternalData& data, const RationalVector& gauge_mu);
// Exact check of every (4+k)x(4+k) minor.
bool all_maximal_minors_positive(const ExternalData& data);

// Determinant of the four μ-projections in the given order; index kStar is the gauge.
Rational bracket(int a, int b, int c, int d, const ExternalData& data);
Rational bracket(const std::vector<int>& rows, const ExternalData& data);

// Four-bracket of a propagator over its support, in the order i, i+1, j, j+1.
std::vector<int> bracket_rows(const Propagator& p, int n);

// σ for a propagator: its bracket with Z_a replaced in position by the gauge.
// Throws std::invalid_argument if a is not a support vertex.
Rational sigma(const Propagator& p, int a, const ExternalData& data);
// σ as a linear form in the gauge μ-part: sigma = form · μ.
RationalVector sigma_form(const Propagator& p, int a, const ExternalData& data);

enum class PoleKind { Sigma, TwoByTwo, PhysicalBracket };

// One factor of the denominator. Rows are positions in row_order(W), 0-based.
struct PoleFactor {
    PoleKind kind = PoleKind::Sigma;
    int row = 0;         // Sigma, TwoByTwo: first row
    int second_row = -1; // TwoByTwo: row further from vertex `column`
    int column = 0;      // vertex a; TwoByTwo uses columns a and a+1
    int next_column = 0; // TwoByTwo: a+1, cyclically
    int edge_i = 0;      // PhysicalBracket: propagator endpoints
    int edge_j = 0;
    int multiplicity = 1;
    std::optional<BoundaryDiagram> boundary;
};

// "c_{1,3}", "(c_{1,2}c_{2,3} - c_{2,2}c_{1,3})" or "<1 2 5 6>", with 1-based rows.
std::string to_string(const PoleFactor& f);

// Spurious factors of R(W), edge by edge, each linked to its boundary diagram.
std::vector<PoleFactor> r_denominator(const Diagram& w);
// Brackets of the propagators; they never vary with the gauge.
std::vector<PoleFactor> physical_factors(const Diagram& w);
// R(W) written out as a product of its factors.
std::string r_denominator_string(const Diagram& w);

// Exact scalar, or a tagged infinity from a vanishing tracked factor.
struct LocalizedValue {
    Rational value = 0;
    bool infinite = false;
    std::string vanishing;  // factor responsible for an infinity

    // Throws SpuriousPole for an infinite value.
    const Rational& finite() const;
};

enum class IntegrandForm {
    // det(Y)^4 over R(W) times the propagator brackets; invariant under the gauge.
    Normalized,
    // Product of (Y_b^{4+b})^4 over R(W).
    Literal,
};

// All gauge-independent data needed to evaluate the localized integrand.
class LocalizedIntegrand {
public:
    // Throws PhysicalSingularity if a propagator bracket vanishes.
    LocalizedIntegrand(const Diagram& w, const ExternalData& data);

    const Diagram& diagram() const { return w_; }
    const ExternalData& data() const { return data_; }
    int k() const { return w_.k(); }
    // Canonical propagator index of each matrix row.
    const std::vector<int>& rows() const { return rows_; }
    const Propagator& row_prop(int row) const { return w_.prop(rows_.at(row)); }
    const Rational& row_bracket(int row) const { return brackets_.at(row); }

    const RationalVector& form(int row, int a) const;
    Rational sigma(int row, int a, const RationalVector& mu) const;
    // Matrix entry: -σ/bracket, so that the localized matrix annihilates the gauge.
    Rational entry(int row, int a, const RationalVector& mu) const;

    // k x (n+1) matrix; column 0 holds the gauge coefficient 1.
    RationalMatrix matrix(const RationalVector& mu) const;
    Rational factor_value(const PoleFactor& f, const RationalVector& mu) const;
    Rational r_value(const RationalVector& mu) const;
    LocalizedValue value(const RationalVector& mu, IntegrandForm form = IntegrandForm::Normalized) const;

    const std::vector<PoleFactor>& factors() const { return factors_; }

private:
    Diagram w_;
    ExternalData data_;
    std::vector<int> rows_;
    std::vector<Rational> brackets_;
    std::vector<std::vector<RationalVector>> forms_;  // [row][a], a in 1..n; empty off support
    std::vector<PoleFactor> factors_;
};

RationalMatrix localized_matrix(const Diagram& w, const ExternalData& data);
// Product of the localized matrix with the stacked μ-parts (gauge first).
RationalMatrix kernel_product(const RationalMatrix& c, const ExternalData& data);
Rational r_value(const Diagram& w, const ExternalData& data);
LocalizedValue integral_value(const Diagram& w, const ExternalData& data,
                              IntegrandForm form = IntegrandForm::Normalized);

// Irreducible piece of a factor, as a polynomial in the gauge μ-part.
struct FactorComponent {
    bool linear = true;
    RationalVector form;     // linear: coefficients, first nonzero entry scaled to 1
    RationalMatrix quadric;  // otherwise: symmetric 4x4, first nonzero entry scaled to 1
    int power = 1;

    bool proportional_to(const FactorComponent& other) const;
};

// Splits a factor into rational components: linear forms or irreducible quadrics.
std::vector<FactorComponent> factor_components(const LocalizedIntegrand& integrand, const PoleFactor& f);

struct PoleClass {
    PoleFactor factor;
    std::vector<FactorComponent> components;
    int localized_multiplicity = 1;  // smallest multiplicity among its components across R(W)
    bool simple = true;
};

// Each factor of R(W) with its simplicity after localization on seeded data.
std::vector<PoleClass> pole_classification(const Diagram& w, std::uint64_t seed = kDefaultSeed);

}  // namespace wlpw
