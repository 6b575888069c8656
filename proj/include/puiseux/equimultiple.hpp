#ifndef PUISEUX_EQUIMULTIPLE_HPP
#define PUISEUX_EQUIMULTIPLE_HPP

#include <optional>
#include <vector>

#include "puiseux/galois.hpp"
#include "puiseux/series.hpp"

namespace puiseux {

// A height-one prime (Z, c(X, Y)) of the equimultiple locus. generator is an
// element of R; composite marks a leftover that was not split into linear
// factors over the session field.
struct CurvePrime {
    PuiseuxPoly generator;
    bool composite = false;
};

// Dichotomy for nu < 1: either no height-one primes exist, or the series has
// the form X^lambda * unit (symmetrically Y) and (axis, Z) is equimultiple.
struct NontransversalVerdict {
    bool axis_form = false;
    char axis = 'X';
    Rat lambda;
};

struct EquimultipleReport {
    bool transversal = true;
    PuiseuxPoly max_divisor;  // transversal case: gcd of the conjugates
    std::vector<CurvePrime> curves;
    std::optional<NontransversalVerdict> verdict;  // non-transversal case
};

// Divisibility criterion for transversal series: (Z, c) is equimultiple iff
// c | zeta. Requires nu(zeta) >= 1 and c a nonzero non-unit element of R.
bool is_equimultiple_criterion(const PuiseuxPoly& zeta, const PuiseuxPoly& c);

// Independent ideal-power oracle: F in (Z, c)^mult, i.e. c^{max(0, mult-k)}
// divides every coefficient of Z^k. Works for any transversality class.
bool is_equimultiple_oracle(const SurfacePoly& F, const PuiseuxPoly& c, long long mult);

// nu(zeta) < 1 only: detects the X^lambda * unit (or Y^lambda * unit) form.
NontransversalVerdict classify_nontransversal(const PuiseuxPoly& zeta);

EquimultipleReport find_equimultiple(const PuiseuxPoly& zeta);

// The section-3.2 transversalization: for zeta = X^lambda u(X^{1/m}, Y^{1/m})
// with u a unit whose constant has a mu-th root in the session field
// (mu = m lambda), returns eta = Z^{m/mu} G^m(Y^{1/m}, Z^{1/mu}) truncated at
// the requested precision (measured in the order of eta's variables).
// Symmetric Y-axis inputs are handled by swapping variables.
TruncatedSeries transversalize(const PuiseuxPoly& zeta, const Rat& precision);

// The underlying inverted parametrization x = t G(y, t) as a series in
// (T, Y) with T = Z^{1/mu}: substituting it for X^{1/m} in zeta cancels
// everything below t^{mu * precision}. Exposed for the residual contract.
TruncatedSeries transversalize_parametrization(const PuiseuxPoly& zeta, const Rat& precision);

}  // namespace puiseux

#endif
