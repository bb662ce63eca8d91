#include "wlpw/residue.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "wlpw/errors.hpp"

namespace wlpw {

namespace {

class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed), num_(-99, 99), den_(1, 99) {}

    Rational next() {
        const long num = num_(rng_);
        const long den = den_(rng_);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    Rational nonzero() {
        Rational q = next();
        while (sgn(q) == 0) {
            q = next();
        }
        return q;
    }

    RationalVector vector(std::size_t size) {
        RationalVector v(size);
        for (auto& x : v) {
            x = next();
        }
        return v;
    }

private:
    boost::random::mt19937_64 rng_;
    boost::random::uniform_int_distribution<long> num_;
    boost::random::uniform_int_distribution<long> den_;
};

Rational abs_value(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

const PoleFactor& factor_for_label(const LocalizedIntegrand& integrand, int prop, int vertex) {
    for (const auto& f : integrand.factors()) {
        for (const auto& [p, v] : f.boundary->labels) {
            if (p == prop && v == vertex) {
                return f;
            }
        }
    }
    throw std::logic_error("no factor of R(W) carries the boundary label");
}

struct FactorCoefficients {
    Rational c0, c1, c2;
};

FactorCoefficients coefficients_along(const LocalizedIntegrand& integrand, const PoleFactor& f, const GaugePath& path) {
    const Rational at0 = integrand.factor_value(f, path.at(0));
    const Rational at1 = integrand.factor_value(f, path.at(1));
    const Rational atm1 = integrand.factor_value(f, path.at(-1));
    return {at0, (at1 - atm1) / 2, (at1 + atm1) / 2 - at0};
}

}  // namespace

RationalVector GaugePath::at(const Rational& t) const {
    RationalVector v(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        v[i] = base[i] + t * direction[i];
    }
    return v;
}

std::vector<int> default_ladder() { return {10, 11, 12, 13, 14, 15, 16}; }

ResidueEstimate richardson(const std::vector<Rational>& samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("extrapolation needs at least two samples");
    }
    // Neville-style table; each round cancels the next power of t.
    std::vector<Rational> prev = samples;
    Rational before_last;
    Rational scale = 1;
    while (prev.size() > 1) {
        scale *= 2;
        before_last = prev.back();
        std::vector<Rational> cur;
        for (std::size_t i = 1; i < prev.size(); ++i) {
            cur.push_back(prev[i] + (prev[i] - prev[i - 1]) / (scale - 1));
        }
        prev = std::move(cur);
    }
    const Rational last_diag = prev.front();
    ResidueEstimate est;
    est.value = last_diag;
    est.error = abs_value(last_diag - before_last);
    est.samples = samples;
    return est;
}

int vanishing_order(const LocalizedIntegrand& integrand, const PoleFactor& f, const GaugePath& path) {
    const auto [c0, c1, c2] = coefficients_along(integrand, f, path);
    if (sgn(c0) != 0) {
        return 0;
    }
    if (sgn(c1) != 0) {
        return 1;
    }
    return sgn(c2) != 0 ? 2 : -1;
}

int pole_order(const LocalizedIntegrand& integrand, const GaugePath& path) {
    int total = 0;
    for (const auto& f : integrand.factors()) {
        const int o = vanishing_order(integrand, f, path);
        if (o < 0) {
            return -1;
        }
        total += o;
    }
    return total;
}

GaugePath rescaled_path(const std::vector<const LocalizedIntegrand*>& integrands, GaugePath path) {
    Rational radius = 1;
    for (const auto* integrand : integrands) {
        for (const auto& f : integrand->factors()) {
            const auto [c0, c1, c2] = coefficients_along(*integrand, f, path);
            Rational bound = 1;
            if (sgn(c0) != 0) {
                // Cauchy bound: every root of c0 + c1 t + c2 t^2 has |t| >= |c0| / (|c0| + max |ci|).
                const Rational big = std::max(abs_value(c1), abs_value(c2));
                bound = abs_value(c0) / (abs_value(c0) + big);
            } else if (sgn(c1) != 0 && sgn(c2) != 0) {
                bound = abs_value(c1) / abs_value(c2);
            }
            radius = std::min(radius, bound);
        }
    }
    for (auto& x : path.direction) {
        x *= radius;
    }
    return path;
}

GaugePath path_for_factor(const LocalizedIntegrand& integrand, const PoleFactor& f, std::uint64_t seed) {
    RationalSampler sample(seed);
    GaugePath path;
    if (f.kind == PoleKind::Sigma) {
        const RationalVector& form = integrand.form(f.row, f.column);
        do {
            path.direction = sample.vector(4);
        } while (sgn(dot(form, path.direction)) == 0);
        path.base = sample.vector(4);
        const Rational shift = dot(form, path.base) / dot(form, path.direction);
        for (int i = 0; i < 4; ++i) {
            path.base[i] -= shift * path.direction[i];
        }
        return path;
    }
    if (f.kind != PoleKind::TwoByTwo) {
        throw std::invalid_argument("physical brackets do not depend on the gauge");
    }
    // Rows b and c proportional on columns a, a+1 with a random ratio.
    const Rational lambda = sample.nonzero();
    const int a = f.column;
    const int a1 = f.next_column;
    RationalMatrix block(2, RationalVector(4));
    for (int i = 0; i < 4; ++i) {
        block[0][i] = integrand.form(f.row, a)[i] - lambda * integrand.form(f.second_row, a)[i];
        block[1][i] = integrand.form(f.row, a1)[i] - lambda * integrand.form(f.second_row, a1)[i];
    }
    const auto kernel = nullspace(block);
    path.base.assign(4, Rational(0));
    for (const auto& v : kernel) {
        const Rational coeff = sample.nonzero();
        for (int i = 0; i < 4; ++i) {
            path.base[i] += coeff * v[i];
        }
    }
    path.direction = sample.vector(4);
    return path;
}

ResidueEstimate residue_estimate(const LocalizedIntegrand& integrand, const GaugePath& path,
                                 const std::vector<int>& ladder) {
    std::vector<Rational> samples;
    for (int m : ladder) {
        Rational t = 1;
        mpq_div_2exp(t.get_mpq_t(), t.get_mpq_t(), static_cast<unsigned long>(m));
        const Rational v = integrand.value(path.at(t)).finite();
        samples.push_back(t * v);
    }
    return richardson(samples);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

CancellationRow cancellation_check(const SharedBoundaryReport& report, const CodimOneRow& row,
                                   const ExternalData& data, std::uint64_t path_seed,
                                   const std::vector<int>& ladder) {
    CancellationRow out;
    out.cell = row.cell;
    out.le = face_poset(report.k, report.n).cell(row.cell).le.str();
    out.labels = row.labels;
    if (row.labels.empty()) {
        return out;
    }
    std::vector<LocalizedIntegrand> integrands;
    for (const auto& w : report.diagrams) {
        integrands.emplace_back(w, data);
    }
    std::set<std::size_t> label_diagrams;
    for (const auto& l : row.labels) {
        label_diagrams.insert(l.diagram);
    }
    const BoundaryLabel& first = row.labels.front();
    const PoleFactor& factor = factor_for_label(integrands[first.diagram], first.prop, first.vertex);

    boost::random::mt19937_64 seeds(path_seed ^ (0x9E3779B97F4A7C15ULL * (row.cell + 1)));
    for (int attempt = 1; attempt <= kPathRetries; ++attempt) {
        out.attempts = attempt;
        GaugePath path = path_for_factor(integrands[first.diagram], factor, seeds());
        // Only diagrams whose cell carries a label of this boundary take part.
        std::vector<std::size_t> poles(label_diagrams.begin(), label_diagrams.end());
        bool usable = true;
        for (std::size_t d : poles) {
            usable = usable && pole_order(integrands[d], path) == 1;
        }
        if (!usable) {
            continue;
        }
        std::vector<const LocalizedIntegrand*> involved;
        for (std::size_t d : poles) {
            involved.push_back(&integrands[d]);
        }
        path = rescaled_path(involved, path);
        try {
            std::vector<ResidueEstimate> residues;
            for (std::size_t d : poles) {
                residues.push_back(residue_estimate(integrands[d], path, ladder));
            }
            out.diagrams = poles;
            out.residues = std::move(residues);
        } catch (const SpuriousPole&) {
            continue;
        }
        break;
    }
    if (out.residues.empty()) {
        return out;
    }
    out.sum = 0;
    out.max_abs = 0;
    out.max_error = 0;
    for (const auto& r : out.residues) {
        out.sum += r.value;
        out.max_abs = std::max(out.max_abs, abs_value(r.value));
        out.max_error = std::max(out.max_error, r.error);
    }
    bool epair = false;
    for (std::size_t a = 0; a < out.diagrams.size(); ++a) {
        for (std::size_t b = a + 1; b < out.diagrams.size(); ++b) {
            epair = epair || report.diagram_cell[out.diagrams[a]] == report.diagram_cell[out.diagrams[b]];
        }
    }
    if (epair) {
        out.grouping = "e-pair";
    } else if (out.diagrams.size() == 2) {
        out.grouping = "pair";
    } else if (out.diagrams.size() == 3) {
        out.grouping = "triple";
    } else {
        out.grouping = "other";
    }
    const Rational allowed = kCancellationTolerance * out.max_abs;
    if (sgn(out.max_abs) == 0 || out.max_error > allowed) {
        out.verdict = Verdict::Inconclusive;
    } else {
        out.verdict = abs_value(out.sum) <= allowed ? Verdict::Pass : Verdict::Fail;
    }
    return out;
}

std::vector<SignIdentity> case_one_identities(int k, int n, const ExternalData& data) {
    std::set<Propagator> props;
    for (const auto& w : enumerate_admissible(k, n)) {
        props.insert(w.props().begin(), w.props().end());
    }
    std::vector<SignIdentity> out;
    for (auto it = props.begin(); it != props.end(); ++it) {
        for (auto jt = std::next(it); jt != props.end(); ++jt) {
            const SubsetMask vp = support_mask(*it, n);
            const SubsetMask vq = support_mask(*jt, n);
            for (int v : mask_elements(vp)) {
                for (int w : mask_elements(vq)) {
                    if ((vp & ~vertex_bit(v)) != (vq & ~vertex_bit(w))) {
                        continue;
                    }
                    SignIdentity s;
                    s.p = *it;
                    s.v = v;
                    s.q = *jt;
                    s.w = w;
                    s.ratio = sigma(*it, v, data) / sigma(*jt, w, data);
                    out.push_back(s);
                }
            }
        }
    }
    return out;
}

std::size_t CancellationReport::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [v](const CancellationRow& r) { return r.verdict == v; }));
}

bool CancellationReport::all_pass() const { return !rows.empty() && count(Verdict::Pass) == rows.size(); }

bool CancellationReport::identities_hold() const {
    return !identities.empty() &&
           std::all_of(identities.begin(), identities.end(), [](const SignIdentity& s) { return s.ratio == -1; });
}

CancellationReport cancellation_report(int k, int n, std::uint64_t seed, const std::vector<int>& ladder) {
    CancellationReport rep;
    rep.k = k;
    rep.n = n;
    rep.seed = seed;
    const ExternalData data = generate_positive_data(n, k, seed);
    const SharedBoundaryReport shared = shared_boundary_report(k, n, seed);
    for (const auto& row : shared.rows) {
        if (row.labels.empty()) {
            continue;
        }
        rep.rows.push_back(cancellation_check(shared, row, data, seed, ladder));
    }
    rep.identities = case_one_identities(k, n, data);
    return rep;
}

}  // namespace wlpw
