#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wlpw/amplitude.hpp"
#include "wlpw/complex.hpp"

namespace wlpw {

// Relative tolerance for a vanishing residue sum.
inline const Rational kCancellationTolerance{1, 100000000};
// Path retries before a boundary is reported inconclusive.
inline constexpr int kPathRetries = 32;

// Gauge μ-part moving on a line: base + t * direction.
struct GaugePath {
    RationalVector base;
    RationalVector direction;

    RationalVector at(const Rational& t) const;
};

// Exponents m of the sample points t = 2^-m.
std::vector<int> default_ladder();

struct ResidueEstimate {
    Rational value;
    Rational error;  // gap between the two most refined extrapolants
    std::vector<Rational> samples;
};

// Richardson extrapolation to t = 0 of samples taken at t = 2^-m for consecutive m.
ResidueEstimate richardson(const std::vector<Rational>& samples);

// Order of vanishing at t = 0 of a factor along the path; -1 if it vanishes identically.
int vanishing_order(const LocalizedIntegrand& integrand, const PoleFactor& f, const GaugePath& path);
// Sum of vanishing orders over R(W); -1 if some factor vanishes identically.
int pole_order(const LocalizedIntegrand& integrand, const GaugePath& path);

// Random path on which the factor has a simple zero at t = 0: a hyperplane point for a
// single entry, a point of proportional row blocks for a two-by-two factor.
GaugePath path_for_factor(const LocalizedIntegrand& integrand, const PoleFactor& f, std::uint64_t seed);

// Shrinks the direction so that every factor root other than t = 0 has |t| >= 1.
GaugePath rescaled_path(const std::vector<const LocalizedIntegrand*>& integrands, GaugePath path);

// Limit of t * I(W)(gauge(t)) at t = 0.
ResidueEstimate residue_estimate(const LocalizedIntegrand& integrand, const GaugePath& path,
                                 const std::vector<int>& ladder = default_ladder());

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct CancellationRow {
    std::size_t cell = 0;
    std::string le;
    std::vector<BoundaryLabel> labels;
    std::vector<std::size_t> diagrams;  // distinct diagrams among the labels
    std::vector<ResidueEstimate> residues;
    std::string grouping;  // "pair", "triple", "e-pair" or "other"
    Rational sum;
    Rational max_abs;
    Rational max_error;
    int attempts = 0;
    Verdict verdict = Verdict::Inconclusive;
};

// Sums the residues of the labelled diagrams along a path through a codimension-one cell.
CancellationRow cancellation_check(const SharedBoundaryReport& report, const CodimOneRow& row,
                                   const ExternalData& data, std::uint64_t path_seed,
                                   const std::vector<int>& ladder = default_ladder());

struct SignIdentity {
    Propagator p;
    int v = 0;
    Propagator q;
    int w = 0;
    Rational ratio;  // sigma(p, v) / sigma(q, w)
};

// Pairs of propagators from admissible diagrams whose supports agree after
// removing one vertex each, with the ratio of the two σ values.
std::vector<SignIdentity> case_one_identities(int k, int n, const ExternalData& data);

struct CancellationReport {
    int k = 0;
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<CancellationRow> rows;  // codimension-one cells realized by boundary labels
    std::vector<SignIdentity> identities;

    std::size_t count(Verdict v) const;
    bool all_pass() const;
    bool identities_hold() const;
};

CancellationReport cancellation_report(int k, int n, std::uint64_t seed, const std::vector<int>& ladder = default_ladder());

}  // namespace wlpw
