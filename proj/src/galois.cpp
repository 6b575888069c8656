#include "puiseux/galois.hpp"

#include <algorithm>
#include <set>

namespace puiseux {

std::vector<PuiseuxPoly> orbit(const PuiseuxPoly& zeta) {
    if (zeta.is_zero()) throw DomainError("orbit: zero series");
    const long long m = zeta.m();
    std::vector<PuiseuxPoly> out;
    std::set<PuiseuxPoly> seen;
    for (long long a = 0; a < m; ++a) {
        for (long long b = 0; b < m; ++b) {
            PuiseuxPoly c = zeta.conjugate(a, b);
            if (seen.insert(c).second) out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<GroupElement> stabilizer(const PuiseuxPoly& zeta) {
    if (zeta.is_zero()) throw DomainError("stabilizer: zero series");
    const long long m = zeta.m();
    std::vector<Exp2> delta = zeta.exponents();
    std::vector<GroupElement> out;
    for (long long a = 0; a < m; ++a)
        for (long long b = 0; b < m; ++b) {
            bool fixes = true;
            for (const Exp2& e : delta)
                if ((a * e.i + b * e.j) % m != 0) {
                    fixes = false;
                    break;
                }
            if (fixes) out.push_back({a, b});
        }
    return out;
}

namespace {

// Balanced product tree; deterministic and independent of evaluation order.
SurfacePoly product_tree(std::vector<SurfacePoly> factors) {
    if (factors.empty())
        return SurfacePoly::from_coeff(0, PuiseuxPoly::constant(CycElem::one(1)));
    while (factors.size() > 1) {
        std::vector<SurfacePoly> next;
        next.reserve(factors.size() / 2 + 1);
        for (std::size_t k = 0; k + 1 < factors.size(); k += 2)
            next.push_back(factors[k] * factors[k + 1]);
        if (factors.size() % 2) next.push_back(factors.back());
        factors = std::move(next);
    }
    return factors.front();
}

PuiseuxPoly poly_product_tree(std::vector<PuiseuxPoly> factors) {
    if (factors.empty()) return PuiseuxPoly::constant(CycElem::one(1));
    while (factors.size() > 1) {
        std::vector<PuiseuxPoly> next;
        next.reserve(factors.size() / 2 + 1);
        for (std::size_t k = 0; k + 1 < factors.size(); k += 2)
            next.push_back(factors[k] * factors[k + 1]);
        if (factors.size() % 2) next.push_back(factors.back());
        factors = std::move(next);
    }
    return factors.front();
}

}  // namespace

SurfacePoly minimal_polynomial(const PuiseuxPoly& zeta) {
    std::vector<PuiseuxPoly> orb = orbit(zeta);
    std::vector<SurfacePoly> factors;
    factors.reserve(orb.size());
    const unsigned L = lcm_u(zeta.field_order(), zeta.m());
    for (const PuiseuxPoly& z : orb)
        factors.push_back(SurfacePoly::z_power(1, L) - SurfacePoly::from_coeff(0, z));
    SurfacePoly F = product_tree(std::move(factors));
    if (!F.is_integral())
        throw InternalError("minimal polynomial has non-integral coefficients");
    return F;
}

SurfacePoly tchirnhausen(const SurfacePoly& F) {
    if (F.is_zero()) throw DomainError("tchirnhausen: zero polynomial");
    if (!F.is_monic()) throw DomainError("tchirnhausen: leading coefficient must be 1");
    const unsigned long n = F.degree();
    if (n == 0) return F;
    PuiseuxPoly shift = F.coeff(n - 1).scaled(make_rat(-1, static_cast<long long>(n)));
    if (shift.is_zero()) return F;
    // Z -> Z + shift
    SurfacePoly z_plus = SurfacePoly::z_power(1, shift.field_order()) +
                         SurfacePoly::from_coeff(0, shift);
    SurfacePoly out;
    for (const auto& [k, c] : F.coeffs())
        out = out + z_plus.pow(k).scaled(c);
    return out;
}

std::pair<PuiseuxPoly, bool> discriminant_and_qo_test(const PuiseuxPoly& zeta) {
    std::vector<PuiseuxPoly> orb = orbit(zeta);
    std::vector<PuiseuxPoly> factors;
    factors.reserve(orb.size() * (orb.size() - 1) / 2);
    for (std::size_t i = 0; i < orb.size(); ++i)
        for (std::size_t j = i + 1; j < orb.size(); ++j) {
            PuiseuxPoly d = orb[i] - orb[j];
            factors.push_back(d * d);
        }
    PuiseuxPoly D = poly_product_tree(std::move(factors));
    if (D.is_zero()) throw InternalError("vanishing discriminant over a deduplicated orbit");
    long long min_i = 0, min_j = 0;
    bool first = true;
    for (const auto& [e, c] : D.terms()) {
        if (first) {
            min_i = e.i;
            min_j = e.j;
            first = false;
        } else {
            min_i = std::min(min_i, e.i);
            min_j = std::min(min_j, e.j);
        }
    }
    bool qo = D.terms().count({min_i, min_j}) > 0;
    return {D, qo};
}

SurfaceInvariants surface_invariants(const PuiseuxPoly& zeta) {
    if (zeta.is_zero()) throw DomainError("surface_invariants: zero series");
    SurfaceInvariants inv;
    inv.m = zeta.m();
    inv.d = lattice_index(zeta.exponents(), inv.m);
    inv.degree = static_cast<long long>(inv.m) * inv.m / inv.d;
    inv.nu = zeta.order();
    Rat n_nu = inv.nu * Rat(static_cast<long>(inv.degree));
    Rat mult = std::min(n_nu, Rat(static_cast<long>(inv.degree)));
    if (mult.get_den() != 1)
        throw InternalError("multiplicity min(n, n*nu) is not an integer");
    inv.multiplicity = static_cast<long long>(mult.get_num().get_si());
    if (inv.nu > 1)
        inv.transversal = Transversality::strictly;
    else if (inv.nu == 1)
        inv.transversal = Transversality::tangentially;
    else
        inv.transversal = Transversality::non_transversal;
    return inv;
}

}  // namespace puiseux
