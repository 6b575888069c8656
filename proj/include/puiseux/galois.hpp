#ifndef PUISEUX_GALOIS_HPP
#define PUISEUX_GALOIS_HPP

#include <vector>

#include "puiseux/lattice.hpp"
#include "puiseux/series.hpp"

namespace puiseux {

// Element (a, b) of G = C_m x C_m acting by X^{1/m} -> delta^a X^{1/m},
// Y^{1/m} -> delta^b Y^{1/m}.
struct GroupElement {
    long long a = 0;
    long long b = 0;
};

enum class Transversality { strictly, tangentially, non_transversal };

struct SurfaceInvariants {
    unsigned m = 1;
    long long d = 1;       // lattice index d(zeta)
    long long degree = 1;  // n = m^2 / d
    Rat nu;                // order of zeta
    long long multiplicity = 1;  // min(n, n*nu)
    Transversality transversal = Transversality::strictly;
};

// All distinct Galois conjugates of zeta, scanned in row-major (a, b) order
// and deduplicated structurally. |orbit| = m^2 / d(zeta).
std::vector<PuiseuxPoly> orbit(const PuiseuxPoly& zeta);

// {(a, b) : (a,b)(zeta) = zeta}; |orbit| * |stabilizer| = m^2.
std::vector<GroupElement> stabilizer(const PuiseuxPoly& zeta);

// F(Z) = prod over the orbit of (Z - zeta_i). Monic of degree m^2/d with
// coefficients in R (integral exponents); F(zeta) = 0 exactly.
SurfacePoly minimal_polynomial(const PuiseuxPoly& zeta);

// Z -> Z - a_{n-1}/n. Requires a monic input; the result has no Z^{n-1}
// term. On minimal polynomials this equals minimal_polynomial(strip_integral).
SurfacePoly tchirnhausen(const SurfacePoly& F);

// D = prod_{i<j} (zeta_i - zeta_j)^2 over the orbit, and the quasi-ordinary
// test: D is a monomial times a unit iff its componentwise-minimal exponent
// corner is attained by an actual term.
std::pair<PuiseuxPoly, bool> discriminant_and_qo_test(const PuiseuxPoly& zeta);

SurfaceInvariants surface_invariants(const PuiseuxPoly& zeta);

}  // namespace puiseux

#endif
