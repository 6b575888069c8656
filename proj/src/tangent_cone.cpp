#include "puiseux/tangent_cone.hpp"

#include <algorithm>

namespace puiseux {

long long multiplicity(const PuiseuxPoly& zeta) {
    return surface_invariants(zeta).multiplicity;
}

PuiseuxPoly monic_conjugate_product(const CycElem& alpha, unsigned m) {
    if (alpha.is_zero()) throw DomainError("monic_conjugate_product: alpha must be nonzero");
    if (m == 0) throw DomainError("monic_conjugate_product: m must be positive");
    unsigned L = lcm_u(alpha.order(), m);
    CycElem a = alpha.embedded(L);
    PuiseuxPoly acc = PuiseuxPoly::constant(CycElem::one(L));
    PuiseuxPoly x = PuiseuxPoly::variable_x(m);
    PuiseuxPoly y = PuiseuxPoly::variable_y(m);
    for (unsigned k = 0; k < m; ++k) {
        CycElem delta = CycElem::delta_pow(L, static_cast<long>(k) * (L / m));
        acc = acc * (x - y.scaled(delta * a));
    }
    return acc;
}

namespace {

PuiseuxPoly slant_plane(const CycElem& beta) {
    // X - beta Y
    return PuiseuxPoly::variable_x(1) - PuiseuxPoly::variable_y(1).scaled(beta);
}

// Decompose a homogeneous integral binary form into axis powers, slant
// planes over the session field and unresolved squarefree leftovers.
struct FormDecomposition {
    long long x_exp = 0, y_exp = 0;
    std::vector<std::pair<CycElem, long long>> slants;
    std::vector<UnresolvedFactor> unresolved;
    CycElem unit;
};

FormDecomposition decompose_binary_form(const PuiseuxPoly& form) {
    if (form.is_zero() || !form.is_integral())
        throw InternalError("binary-form decomposition expects a nonzero integral form");
    const unsigned L = form.field_order();
    FormDecomposition out;
    out.unit = CycElem::one(L);

    long long min_i = -1, min_j = -1, deg = -1;
    for (const auto& [e, c] : form.terms()) {
        min_i = min_i < 0 ? e.i : std::min(min_i, e.i);
        min_j = min_j < 0 ? e.j : std::min(min_j, e.j);
        if (deg < 0) deg = e.i + e.j;
        if (e.i + e.j != deg) throw InternalError("cone form is not homogeneous");
    }
    out.x_exp = min_i;
    out.y_exp = min_j;

    // Remaining form, dehomogenized in t = X/Y.
    const std::size_t pdeg = static_cast<std::size_t>(deg - min_i - min_j);
    std::vector<CycElem> pc(pdeg + 1, CycElem::zero(L));
    for (const auto& [e, c] : form.terms()) pc[static_cast<std::size_t>(e.i - min_i)] = c;
    UniPoly P(L, std::move(pc));
    if (P.degree() <= 0) {
        out.unit = P.coeff(0);
        return out;
    }
    out.unit = P.leading();
    for (const auto& [s, k] : squarefree_decompose(P)) {
        RootSplit split = known_field_roots(s);
        for (const CycElem& beta : split.roots) {
            if (beta.is_zero())
                throw InternalError("axis root left after monomial extraction");
            out.slants.push_back({beta, k});
        }
        if (split.remainder.degree() >= 1) {
            // homogenize back: s_hom(X, Y) = Y^deg s(X/Y)
            std::vector<std::pair<Exp2, CycElem>> terms;
            long sd = static_cast<long>(split.remainder.degree());
            for (long i = 0; i <= sd; ++i) {
                CycElem c = split.remainder.coeff(static_cast<std::size_t>(i));
                if (!c.is_zero()) terms.push_back({{i, sd - i}, c});
            }
            out.unresolved.push_back({PuiseuxPoly::from_terms(1, L, terms), k});
        }
    }
    return out;
}

}  // namespace

TangentConeReport tangent_cone(const PuiseuxPoly& zeta) {
    if (zeta.is_zero()) throw DomainError("tangent_cone: zero series");
    if (zeta != zeta.strip_integral())
        throw DomainError("tangent_cone: series has integral-exponent terms; strip first");

    TangentConeReport rep;
    rep.invariants = surface_invariants(zeta);
    rep.unit = CycElem::one(zeta.field_order());
    const long long n = rep.invariants.degree;

    if (rep.invariants.nu > 1) {
        rep.cone_case = ConeCase::A;
        rep.cone = SurfacePoly::z_power(static_cast<unsigned long>(n), zeta.field_order());
        rep.exact_initial_form = rep.cone;
        return rep;
    }

    SurfacePoly F = minimal_polynomial(zeta);
    SurfacePoly Fbar = F.initial_form();
    rep.exact_initial_form = Fbar;

    if (rep.invariants.nu == 1) {
        rep.cone_case = ConeCase::B;
        PuiseuxPoly zbar = zeta.initial_form();
        SurfacePoly base = minimal_polynomial(zbar);
        long long nbar = static_cast<long long>(base.degree());
        if (n % nbar != 0)
            throw InternalError("tangent cone power d(initial)/d(zeta) is not an integer");
        rep.power = n / nbar;
        rep.cone = base.pow(static_cast<unsigned long>(rep.power));
        if (!(rep.cone == Fbar))
            throw InternalError(
                "case B cross-check failed: power of the initial-form minimal polynomial "
                "differs from the initial form of F");
        return rep;
    }

    rep.cone_case = ConeCase::C;
    // nu < 1: the initial form of F is Z-free.
    if (Fbar.coeffs().size() != 1 || Fbar.coeffs().begin()->first != 0)
        throw InternalError("case C initial form is not Z-free");
    PuiseuxPoly form = Fbar.coeff(0);
    FormDecomposition dec = decompose_binary_form(form);
    rep.unit = dec.unit;

    PuiseuxPoly product = PuiseuxPoly::constant(CycElem::one(form.field_order()));
    if (dec.x_exp > 0) {
        rep.planes.push_back({PlaneFactor::Axis::X, CycElem::one(form.field_order()), dec.x_exp});
        product = product * PuiseuxPoly::variable_x(1).pow(static_cast<unsigned long>(dec.x_exp));
    }
    if (dec.y_exp > 0) {
        rep.planes.push_back({PlaneFactor::Axis::Y, CycElem::one(form.field_order()), dec.y_exp});
        product = product * PuiseuxPoly::variable_y(1).pow(static_cast<unsigned long>(dec.y_exp));
    }
    for (const auto& [beta, e] : dec.slants) {
        rep.planes.push_back({PlaneFactor::Axis::Slant, beta, e});
        product = product * slant_plane(beta).pow(static_cast<unsigned long>(e));
    }
    for (const auto& u : dec.unresolved) {
        rep.unresolved.push_back(u);
        product = product * u.factor.pow(static_cast<unsigned long>(u.exponent));
    }
    if (!(product.scaled(rep.unit) == form))
        throw InternalError("case C decomposition does not reproduce the initial form");
    // Resolved plane exponents must be multiples of m/gcd(m, d).
    const long long m = rep.invariants.m;
    const long long d = rep.invariants.d;
    for (const auto& p : rep.planes)
        if (p.axis == PlaneFactor::Axis::Slant && (p.exponent * d) % m != 0)
            throw InternalError("plane exponent is not m r/d for an integer r");
    rep.cone = SurfacePoly::from_coeff(0, product);
    return rep;
}

TangentConeReport plane_count_demo(unsigned m, unsigned mu) {
    if (mu < 1 || mu > m - 1)
        throw DomainError("plane_count_demo: mu must satisfy 1 <= mu <= m-1");
    PuiseuxPoly x = PuiseuxPoly::variable_x(m);
    PuiseuxPoly y = PuiseuxPoly::variable_y(m);
    PuiseuxPoly zeta = PuiseuxPoly::constant(CycElem::one(1));
    Int mk(1);
    for (unsigned k = 1; k <= mu; ++k) {
        mk *= static_cast<long>(m);
        zeta = zeta * (x + y.scaled(make_rat(mk, Int(1))));
    }
    TangentConeReport rep = tangent_cone(zeta);
    if (rep.planes.size() != mu)
        throw InternalError("plane count differs from mu");
    return rep;
}

}  // namespace puiseux
