#ifndef PUISEUX_TANGENT_CONE_HPP
#define PUISEUX_TANGENT_CONE_HPP

#include <vector>

#include "puiseux/galois.hpp"
#include "puiseux/series.hpp"

namespace puiseux {

enum class ConeCase { A, B, C };  // nu > 1, nu = 1, nu < 1

struct PlaneFactor {
    enum class Axis { X, Y, Slant };
    Axis axis = Axis::Slant;
    CycElem beta;        // Slant only: the plane X - beta Y
    long long exponent = 1;
};

// Squarefree non-linear factor whose roots lie outside the session field,
// homogenized back to X, Y.
struct UnresolvedFactor {
    PuiseuxPoly factor;
    long long exponent = 1;
};

struct TangentConeReport {
    ConeCase cone_case = ConeCase::A;
    // Normalized cone equation: Z^n (case A), minimal_polynomial(initial
    // form)^power (case B), or the monic product of the listed factors
    // (case C).
    SurfacePoly cone;
    // Exact initial form of the expanded minimal polynomial; equals
    // cone scaled by unit.
    SurfacePoly exact_initial_form;
    CycElem unit;
    std::vector<PlaneFactor> planes;          // case C
    std::vector<UnresolvedFactor> unresolved; // case C
    long long power = 1;                      // case B: d(initial)/d(zeta)
    SurfaceInvariants invariants;
};

// mult(S) = min(n, n nu) with n = m^2/d.
long long multiplicity(const PuiseuxPoly& zeta);

// prod over m-th roots of unity delta of (X^{1/m} - delta alpha Y^{1/m})
// = X - alpha^m Y. Requires alpha != 0.
PuiseuxPoly monic_conjugate_product(const CycElem& alpha, unsigned m);

// The three-case tangent cone computation. Requires zeta != 0 with
// Delta(zeta) disjoint from (mZ)^2 (apply strip_integral first).
TangentConeReport tangent_cone(const PuiseuxPoly& zeta);

// Tangent cone of prod_{k=1..mu} (X^{1/m} + m^k Y^{1/m}); exactly mu planes.
TangentConeReport plane_count_demo(unsigned m, unsigned mu);

}  // namespace puiseux

#endif
