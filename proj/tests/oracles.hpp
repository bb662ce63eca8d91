#pragma once
// Slow, independent reference implementations used to cross-check the library.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "wlpw/basis_set.hpp"
#include "wlpw/homology.hpp"
#include "wlpw/le.hpp"
#include "wlpw/rational.hpp"

namespace oracle {

using wlpw::Rational;
using wlpw::RationalMatrix;
using wlpw::SubsetMask;

using Pair = std::pair<int, int>;

// Admissibility from first principles: explicit vertex sets for every subset
// and chord crossing by endpoint positions on the circle.
bool admissible(const std::vector<Pair>& props, int n);

// Every admissible propagator set, each sorted, in lexicographic order.
std::vector<std::vector<Pair>> admissible_sets(int k, int n);

// Number of decorated permutations of [n] with k anti-exceedances.
std::size_t decorated_permutations(int k, int n);

// Le fillings of every shape in the k x (n-k) box, by brute force over fillings.
std::size_t le_fillings(int k, int n);

// Backtracking search for vertex-disjoint paths from the sources to the targets.
bool vdp_search(const wlpw::LeGraph& g, SubsetMask sources, SubsetMask targets);

// Bases of a transversal matroid: B is a basis iff some bijection rows -> B
// respects the supports (tried over all permutations).
std::vector<SubsetMask> transversal_bases(const std::vector<SubsetMask>& supports, int n);

// Symmetric exchange: for A, B bases and a in A\B there is b in B\A with A-a+b a basis.
bool exchange_axiom(const std::vector<SubsetMask>& bases);

// Permutation expansion of the determinant.
Rational leibniz_det(const RationalMatrix& m);

// Betti numbers over F_p by dense elimination of every boundary matrix.
std::vector<long> betti_mod_p(const wlpw::ChainComplex& complex, std::int64_t p);

// Limit of t * N(t) / D(t) at t = 0 when N and D are polynomials of degree at most
// `degree` and D has a simple root at 0. N and D are sampled at t = 1..degree+1.
Rational simple_pole_residue(const std::function<Rational(const Rational&)>& numerator,
                             const std::function<Rational(const Rational&)>& denominator, int degree);

// Per-edge factor count of the denominator: an edge met by s >= 1 propagators contributes s + 1.
int denominator_factor_count(const std::vector<Pair>& props, int n);

}  // namespace oracle
