#include "wlpw/amplitude.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "wlpw/basis_set.hpp"
#include "wlpw/errors.hpp"

namespace wlpw {

namespace {

Rational det4(const RationalVector& a, const RationalVector& b, const RationalVector& c, const RationalVector& d) {
    return determinant({a, b, c, d});
}

RationalVector normalized(RationalVector v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            const Rational lead = x;
            for (auto& y : v) {
                y /= lead;
            }
            break;
        }
    }
    return v;
}

RationalMatrix normalized(RationalMatrix m) {
    for (const auto& row : m) {
        for (const auto& x : row) {
            if (sgn(x) != 0) {
                const Rational lead = x;
                for (auto& r : m) {
                    for (auto& y : r) {
                        y /= lead;
                    }
                }
                return m;
            }
        }
    }
    return m;
}

bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

FactorComponent linear_component(const RationalVector& form, int power) {
    FactorComponent c;
    c.linear = true;
    c.form = normalized(form);
    c.power = power;
    return c;
}

FactorComponent quadric_component(const RationalMatrix& a) {
    FactorComponent c;
    c.linear = false;
    c.quadric = normalized(a);
    c.power = 1;
    return c;
}

// Components of the quadratic form x^T A x for a symmetric 4x4 matrix A.
std::vector<FactorComponent> quadric_components(const RationalMatrix& a) {
    const std::size_t r = rank(a);
    if (r == 0) {
        throw std::logic_error("a two-by-two factor vanishes identically");
    }
    std::vector<RationalVector> cols;
    for (int j = 0; j < 4 && cols.size() < r; ++j) {
        RationalVector col{a[0][j], a[1][j], a[2][j], a[3][j]};
        std::vector<RationalVector> trial = cols;
        trial.push_back(col);
        if (rank(trial) == trial.size()) {
            cols.push_back(col);
        }
    }
    if (r == 1) {
        return {linear_component(cols[0], 2)};
    }
    if (r > 2) {
        return {quadric_component(a)};
    }
    // A = U M U^T with U = [u1 u2]; recover M from an invertible 2x2 block of U.
    const RationalVector& u1 = cols[0];
    const RationalVector& u2 = cols[1];
    for (int s = 0; s < 4; ++s) {
        for (int t = s + 1; t < 4; ++t) {
            const Rational d = u1[s] * u2[t] - u1[t] * u2[s];
            if (sgn(d) == 0) {
                continue;
            }
            // Inverse of B = [[u1[s], u2[s]], [u1[t], u2[t]]].
            const RationalMatrix b_inv{{u2[t] / d, -u2[s] / d}, {-u1[t] / d, u1[s] / d}};
            const RationalMatrix blk{{a[s][s], a[s][t]}, {a[t][s], a[t][t]}};
            RationalMatrix m(2, RationalVector(2, Rational(0)));
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    for (int p = 0; p < 2; ++p) {
                        for (int q = 0; q < 2; ++q) {
                            m[i][j] += b_inv[i][p] * blk[p][q] * b_inv[j][q];
                        }
                    }
                }
            }
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    const Rational rebuilt = u1[i] * (m[0][0] * u1[j] + m[0][1] * u2[j]) +
                                             u2[i] * (m[1][0] * u1[j] + m[1][1] * u2[j]);
                    if (rebuilt != a[i][j]) {
                        throw std::logic_error("rank-two quadric failed to reconstruct");
                    }
                }
            }
            const Rational m11 = m[0][0];
            const Rational m12 = m[0][1];
            const Rational m22 = m[1][1];
            auto combo = [&](const Rational& x, const Rational& y) {
                RationalVector v(4);
                for (int i = 0; i < 4; ++i) {
                    v[i] = x * u1[i] + y * u2[i];
                }
                return v;
            };
            if (sgn(m11) == 0) {
                const Rational two_m12 = 2 * m12;
                return {linear_component(u2, 1), linear_component(combo(two_m12, m22), 1)};
            }
            const Rational disc = m12 * m12 - m11 * m22;
            Rational root;
            if (sgn(disc) < 0 || !rational_sqrt(disc, &root)) {
                return {quadric_component(a)};
            }
            const Rational r_plus = (-m12 + root) / m11;
            const Rational r_minus = (-m12 - root) / m11;
            return {linear_component(combo(1, -r_plus), 1), linear_component(combo(1, -r_minus), 1)};
        }
    }
    throw std::logic_error("rank-two quadric without an invertible block");
}

std::string c_name(int row, int column) {
    return "c_{" + std::to_string(row + 1) + "," + std::to_string(column) + "}";
}

}  // namespace

RationalVector ExternalData::mu(int a) const {
    const RationalVector& src = a == kStar ? gauge : row(a);
    return {src.begin(), src.begin() + 4};
}

ExternalData data_from_nodes(int k, const std::vector<Rational>& nodes, const RationalVector& gauge_mu,
                             std::uint64_t seed) {
    if (k < 1) {
        throw std::invalid_argument("external data needs k >= 1");
    }
    if (gauge_mu.size() != 4) {
        throw std::invalid_argument("gauge μ-part needs four entries");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (sgn(nodes[i]) <= 0 || (i > 0 && nodes[i] <= nodes[i - 1])) {
            throw std::invalid_argument("nodes must be positive and strictly increasing");
        }
    }
    ExternalData d;
    d.n = static_cast<int>(nodes.size());
    d.k = k;
    d.seed = seed;
    d.nodes = nodes;
    for (const auto& x : nodes) {
        RationalVector row(4 + k);
        row[0] = 1;
        for (int e = 1; e < 4 + k; ++e) {
            row[e] = row[e - 1] * x;
        }
        d.z.push_back(std::move(row));
    }
    d.gauge.assign(4 + k, Rational(0));
    std::copy(gauge_mu.begin(), gauge_mu.end(), d.gauge.begin());
    if (d.n < 4 + k) {
        throw std::invalid_argument("external data needs n >= k+4");
    }
    if (!all_maximal_minors_positive(d)) {
        throw std::logic_error("Vandermonde data failed the positivity check");
    }
    return d;
}

ExternalData generate_positive_data(int n, int k, std::uint64_t seed) {
    boost::random::mt19937_64 rng(seed);
    boost::random::uniform_int_distribution<long> step(0, 999);
    boost::random::uniform_int_distribution<long> numer(-50, 50);
    boost::random::uniform_int_distribution<long> denom(1, 20);
    std::vector<Rational> nodes;
    Rational x = 0;
    for (int i = 0; i < n; ++i) {
        Rational inc(step(rng), 1000);
        inc.canonicalize();
        x += 1 + inc;
        nodes.push_back(x);
    }
    RationalVector mu(4);
    do {
        for (auto& m : mu) {
            const long num = numer(rng);
            const long den = denom(rng);
            m = Rational(num, den);
            m.canonicalize();
        }
    } while (is_zero(mu));
    return data_from_nodes(k, nodes, mu, seed);
}

ExternalData with_gauge(const ExternalData& data, const RationalVector& gauge_mu) {
    if (gauge_mu.size() != 4) {
        throw std::invalid_argument("gauge μ-part needs four entries");
    }
    ExternalData d = data;
    std::copy(gauge_mu.begin(), gauge_mu.end(), d.gauge.begin());
    return d;
}

bool all_maximal_minors_positive(const ExternalData& data) {
    const int m = 4 + data.k;
    for (SubsetMask s : k_subsets(data.n, m)) {
        RationalMatrix minor;
        for (int a : mask_elements(s)) {
            minor.push_back(data.row(a));
        }
        if (sgn(determinant(std::move(minor))) <= 0) {
            return false;
        }
    }
    return std::all_of(data.gauge.begin() + 4, data.gauge.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational bracket(int a, int b, int c, int d, const ExternalData& data) {
    return det4(data.mu(a), data.mu(b), data.mu(c), data.mu(d));
}

Rational bracket(const std::vector<int>& rows, const ExternalData& data) {
    if (rows.size() != 4) {
        throw std::invalid_argument("a bracket takes four rows");
    }
    return bracket(rows[0], rows[1], rows[2], rows[3], data);
}

std::vector<int> bracket_rows(const Propagator& p, int n) {
    return {p.i, next_vertex(p.i, n), p.j, next_vertex(p.j, n)};
}

Rational sigma(const Propagator& p, int a, const ExternalData& data) {
    auto rows = bracket_rows(p, data.n);
    auto it = std::find(rows.begin(), rows.end(), a);
    if (it == rows.end()) {
        throw std::invalid_argument("vertex " + std::to_string(a) + " is not in the support");
    }
    *it = kStar;
    return bracket(rows, data);
}

RationalVector sigma_form(const Propagator& p, int a, const ExternalData& data) {
    const auto rows = bracket_rows(p, data.n);
    const auto pos = std::find(rows.begin(), rows.end(), a) - rows.begin();
    if (pos == 4) {
        throw std::invalid_argument("vertex " + std::to_string(a) + " is not in the support");
    }
    RationalVector form(4);
    for (int e = 0; e < 4; ++e) {
        RationalMatrix m;
        for (int r = 0; r < 4; ++r) {
            if (r == pos) {
                RationalVector unit(4, Rational(0));
                unit[e] = 1;
                m.push_back(std::move(unit));
            } else {
                m.push_back(data.mu(rows[r]));
            }
        }
        form[e] = determinant(std::move(m));
    }
    return form;
}

std::string to_string(const PoleFactor& f) {
    switch (f.kind) {
        case PoleKind::Sigma: return c_name(f.row, f.column);
        case PoleKind::TwoByTwo: {
            const int a = f.column;
            const int a1 = f.next_column;
            return "(" + c_name(f.row, a) + c_name(f.second_row, a1) + " - " + c_name(f.second_row, a) +
                   c_name(f.row, a1) + ")";
        }
        case PoleKind::PhysicalBracket:
            return "<" + std::to_string(f.edge_i) + " " + std::to_string(f.edge_i + 1) + " " +
                   std::to_string(f.edge_j) + " " + std::to_string(f.edge_j + 1) + ">";
    }
    return "?";
}

std::vector<PoleFactor> r_denominator(const Diagram& w) {
    const auto rows = row_order(w);
    std::vector<int> row_of(w.k());
    for (int b = 0; b < w.k(); ++b) {
        row_of[rows[b]] = b;
    }
    const auto bds = boundary_diagrams(w);
    auto linked = [&](int prop, int vertex) {
        const BoundaryDiagram single = boundary_diagram(w, prop, vertex);
        for (const auto& bd : bds) {
            if (bd.same_diagram(single)) {
                return bd;
            }
        }
        throw std::logic_error("boundary label missing from the boundary list");
    };
    std::vector<PoleFactor> out;
    auto add_sigma = [&](int prop, int a) {
        PoleFactor f;
        f.kind = PoleKind::Sigma;
        f.row = row_of[prop];
        f.column = a;
        f.boundary = linked(prop, a);
        if (f.boundary->kind != BoundaryKind::VertexDrop) {
            throw std::logic_error("single-entry factor linked to a touching boundary");
        }
        out.push_back(std::move(f));
    };
    for (int e = 1; e <= w.n(); ++e) {
        const auto order = edge_order(w, e);
        if (order.empty()) {
            continue;
        }
        const int e1 = next_vertex(e, w.n());
        if (order.size() == 1) {
            add_sigma(order[0], e);
            add_sigma(order[0], e1);
            continue;
        }
        add_sigma(order.front(), e1);
        for (std::size_t m = 0; m + 1 < order.size(); ++m) {
            PoleFactor f;
            f.kind = PoleKind::TwoByTwo;
            f.row = row_of[order[m]];
            f.second_row = row_of[order[m + 1]];
            f.column = e;
            f.next_column = e1;
            f.boundary = linked(order[m], e);
            const std::pair<int, int> pair{std::min(f.boundary->prop, f.boundary->touched),
                                           std::max(f.boundary->prop, f.boundary->touched)};
            if (f.boundary->kind != BoundaryKind::PropagatorTouch ||
                pair != std::make_pair(std::min(order[m], order[m + 1]), std::max(order[m], order[m + 1]))) {
                throw std::logic_error("two-by-two factor linked to the wrong boundary in " + format_diagram(w));
            }
            out.push_back(std::move(f));
        }
        add_sigma(order.back(), e);
    }
    return out;
}

std::vector<PoleFactor> physical_factors(const Diagram& w) {
    std::vector<PoleFactor> out;
    for (const auto& p : w.props()) {
        PoleFactor f;
        f.kind = PoleKind::PhysicalBracket;
        f.edge_i = p.i;
        f.edge_j = p.j;
        out.push_back(f);
    }
    return out;
}

std::string r_denominator_string(const Diagram& w) {
    std::string s;
    for (const auto& f : r_denominator(w)) {
        s += to_string(f);
    }
    return s;
}

const Rational& LocalizedValue::finite() const {
    if (infinite) {
        throw SpuriousPole("integrand is infinite: " + vanishing + " vanishes");
    }
    return value;
}

LocalizedIntegrand::LocalizedIntegrand(const Diagram& w, const ExternalData& data)
    : w_(w), data_(data), rows_(row_order(w)), factors_(r_denominator(w)) {
    if (data.n != w.n() || data.k != w.k()) {
        throw std::invalid_argument("external data shape does not match the diagram");
    }
    forms_.assign(w.k(), std::vector<RationalVector>(w.n() + 1));
    for (int b = 0; b < w.k(); ++b) {
        const Propagator& p = row_prop(b);
        const Rational br = bracket(bracket_rows(p, w.n()), data);
        if (sgn(br) == 0) {
            throw PhysicalSingularity("bracket of propagator " + std::to_string(p.i) + "-" + std::to_string(p.j) +
                                      " vanishes");
        }
        brackets_.push_back(br);
        for (int a : bracket_rows(p, w.n())) {
            forms_[b][a] = sigma_form(p, a, data);
        }
    }
}

const RationalVector& LocalizedIntegrand::form(int row, int a) const {
    const RationalVector& f = forms_.at(row).at(a);
    if (f.empty()) {
        throw std::invalid_argument("vertex " + std::to_string(a) + " is not in the support of row " +
                                    std::to_string(row + 1));
    }
    return f;
}

Rational LocalizedIntegrand::sigma(int row, int a, const RationalVector& mu) const { return dot(form(row, a), mu); }

Rational LocalizedIntegrand::entry(int row, int a, const RationalVector& mu) const {
    return -sigma(row, a, mu) / brackets_.at(row);
}

RationalMatrix LocalizedIntegrand::matrix(const RationalVector& mu) const {
    RationalMatrix c(k(), RationalVector(w_.n() + 1, Rational(0)));
    for (int b = 0; b < k(); ++b) {
        c[b][0] = 1;
        for (int a : bracket_rows(row_prop(b), w_.n())) {
            c[b][a] = entry(b, a, mu);
        }
    }
    return c;
}

Rational LocalizedIntegrand::factor_value(const PoleFactor& f, const RationalVector& mu) const {
    switch (f.kind) {
        case PoleKind::Sigma: return entry(f.row, f.column, mu);
        case PoleKind::TwoByTwo: {
            const int a = f.column;
            const int a1 = next_vertex(a, w_.n());
            return entry(f.row, a, mu) * entry(f.second_row, a1, mu) -
                   entry(f.second_row, a, mu) * entry(f.row, a1, mu);
        }
        case PoleKind::PhysicalBracket:
            return bracket(bracket_rows(Propagator{f.edge_i, f.edge_j}, w_.n()), data_);
    }
    return 0;
}

Rational LocalizedIntegrand::r_value(const RationalVector& mu) const {
    Rational r = 1;
    for (const auto& f : factors_) {
        r *= factor_value(f, mu);
    }
    return r;
}

LocalizedValue LocalizedIntegrand::value(const RationalVector& mu, IntegrandForm form) const {
    LocalizedValue out;
    Rational r = 1;
    for (const auto& f : factors_) {
        const Rational v = factor_value(f, mu);
        if (sgn(v) == 0) {
            out.infinite = true;
            out.vanishing = to_string(f);
            return out;
        }
        r *= v;
    }
    RationalMatrix y(k(), RationalVector(k(), Rational(0)));
    for (int b = 0; b < k(); ++b) {
        for (int a : bracket_rows(row_prop(b), w_.n())) {
            const Rational c = entry(b, a, mu);
            for (int col = 0; col < k(); ++col) {
                y[b][col] += c * data_.row(a)[4 + col];
            }
        }
    }
    if (form == IntegrandForm::Normalized) {
        Rational denom = r;
        for (const auto& br : brackets_) {
            denom *= br;
        }
        out.value = power(determinant(std::move(y)), 4) / denom;
    } else {
        Rational num = 1;
        for (int b = 0; b < k(); ++b) {
            num *= power(y[b][b], 4);
        }
        out.value = num / r;
    }
    return out;
}

RationalMatrix localized_matrix(const Diagram& w, const ExternalData& data) {
    return LocalizedIntegrand(w, data).matrix(data.gauge_mu());
}

RationalMatrix kernel_product(const RationalMatrix& c, const ExternalData& data) {
    RationalMatrix out(c.size(), RationalVector(4, Rational(0)));
    for (std::size_t b = 0; b < c.size(); ++b) {
        if (c[b].size() != static_cast<std::size_t>(data.n) + 1) {
            throw std::invalid_argument("localized matrix has the wrong number of columns");
        }
        for (int a = 0; a <= data.n; ++a) {
            if (sgn(c[b][a]) == 0) {
                continue;
            }
            const RationalVector mu = data.mu(a);
            for (int e = 0; e < 4; ++e) {
                out[b][e] += c[b][a] * mu[e];
            }
        }
    }
    return out;
}

Rational r_value(const Diagram& w, const ExternalData& data) {
    return LocalizedIntegrand(w, data).r_value(data.gauge_mu());
}

LocalizedValue integral_value(const Diagram& w, const ExternalData& data, IntegrandForm form) {
    return LocalizedIntegrand(w, data).value(data.gauge_mu(), form);
}

bool FactorComponent::proportional_to(const FactorComponent& other) const {
    if (linear != other.linear) {
        return false;
    }
    return linear ? form == other.form : quadric == other.quadric;
}

std::vector<FactorComponent> factor_components(const LocalizedIntegrand& integrand, const PoleFactor& f) {
    switch (f.kind) {
        case PoleKind::Sigma: return {linear_component(integrand.form(f.row, f.column), 1)};
        case PoleKind::TwoByTwo: {
            const int n = integrand.diagram().n();
            const RationalVector& u = integrand.form(f.row, f.column);
            const RationalVector& v = integrand.form(f.second_row, next_vertex(f.column, n));
            const RationalVector& s = integrand.form(f.second_row, f.column);
            const RationalVector& t = integrand.form(f.row, next_vertex(f.column, n));
            RationalMatrix a(4, RationalVector(4));
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    a[i][j] = (u[i] * v[j] + u[j] * v[i] - s[i] * t[j] - s[j] * t[i]) / 2;
                }
            }
            return quadric_components(a);
        }
        case PoleKind::PhysicalBracket: return {};
    }
    return {};
}

std::vector<PoleClass> pole_classification(const Diagram& w, std::uint64_t seed) {
    const LocalizedIntegrand integrand(w, generate_positive_data(w.n(), w.k(), seed));
    std::vector<PoleClass> out;
    std::vector<FactorComponent> all;
    for (const auto& f : integrand.factors()) {
        PoleClass pc;
        pc.factor = f;
        pc.components = factor_components(integrand, f);
        all.insert(all.end(), pc.components.begin(), pc.components.end());
        out.push_back(std::move(pc));
    }
    for (auto& pc : out) {
        // A factor gives a simple pole along any component that no other factor shares.
        pc.localized_multiplicity = 0;
        for (const auto& c : pc.components) {
            int total = 0;
            for (const auto& other : all) {
                if (c.proportional_to(other)) {
                    total += other.power;
                }
            }
            if (pc.localized_multiplicity == 0 || total < pc.localized_multiplicity) {
                pc.localized_multiplicity = total;
            }
        }
        pc.simple = pc.localized_multiplicity == 1;
    }
    return out;
}

}  // namespace wlpw
