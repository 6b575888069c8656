#include "puiseux/transforms.hpp"

#include "puiseux/equimultiple.hpp"

namespace puiseux {

namespace {

struct Mono {
    long long x, y, z;
    CycElem c;
};

std::vector<Mono> monomials_of(const SurfacePoly& F) {
    if (F.is_zero()) throw DomainError("transform of the zero polynomial");
    if (!F.is_integral())
        throw DomainError("transform requires integral exponents; coefficients must lie in R");
    std::vector<Mono> out;
    for (const auto& [k, coef] : F.coeffs())
        for (const auto& [e, c] : coef.terms())
            out.push_back({e.i, e.j, static_cast<long long>(k), c});
    return out;
}

SurfacePoly rebuild(const std::vector<Mono>& monos, unsigned L) {
    std::map<unsigned long, std::vector<std::pair<Exp2, CycElem>>> by_z;
    for (const Mono& m : monos) {
        if (m.x < 0 || m.y < 0 || m.z < 0)
            throw InternalError("chart division not exact: negative exponent produced");
        by_z[static_cast<unsigned long>(m.z)].push_back({{m.x, m.y}, m.c});
    }
    SurfacePoly out;
    for (const auto& [k, terms] : by_z) {
        PuiseuxPoly c = PuiseuxPoly::from_terms(1, L, terms);
        if (!c.is_zero()) out = out + SurfacePoly::from_coeff(k, c);
    }
    return out;
}

long long integral_order(const SurfacePoly& F) {
    Rat w = F.weighted_order();
    if (w.get_den() != 1) throw InternalError("integral polynomial with fractional order");
    return w.get_num().get_si();
}

}  // namespace

SurfacePoly quadratic_transform(const SurfacePoly& F, const TransformSpec& spec) {
    if (spec.kind != TransformSpec::Kind::quadratic)
        throw DomainError("quadratic_transform: spec.kind mismatch");
    SurfacePoly G = F;
    if (spec.translation)
        G = translate_z(F, spec.translation->first, spec.translation->second);
    std::vector<Mono> monos = monomials_of(G);
    const long long mult = integral_order(G);
    const unsigned L = G.field_order();
    for (Mono& m : monos) {
        switch (spec.chart) {
            case TransformSpec::Chart::Z:
                // X -> XZ, Y -> YZ, divide by Z^mult
                m.z += m.x + m.y - mult;
                break;
            case TransformSpec::Chart::X:
                // X -> X, Y -> XY, Z -> XZ, divide by X^mult
                m.x += m.y + m.z - mult;
                break;
            case TransformSpec::Chart::Y:
                m.y += m.x + m.z - mult;
                break;
        }
    }
    return rebuild(monos, L);
}

SurfacePoly monoidal_transform(const SurfacePoly& F, const TransformSpec& spec) {
    if (spec.kind != TransformSpec::Kind::monoidal)
        throw DomainError("monoidal_transform: spec.kind mismatch");
    if (spec.chart == TransformSpec::Chart::Y && spec.center == TransformSpec::Center::XZ)
        throw DomainError("monoidal_transform: Y-chart is not a chart of the (X,Z) blow-up");
    if (spec.chart == TransformSpec::Chart::X && spec.center == TransformSpec::Center::YZ)
        throw DomainError("monoidal_transform: X-chart is not a chart of the (Y,Z) blow-up");
    std::vector<Mono> monos = monomials_of(F);
    const long long mult = integral_order(F);
    const unsigned L = F.field_order();
    if (spec.validate) {
        PuiseuxPoly axis = spec.center == TransformSpec::Center::XZ
                               ? PuiseuxPoly::variable_x(1)
                               : PuiseuxPoly::variable_y(1);
        if (!is_equimultiple_oracle(F, axis, mult))
            throw DomainError("monoidal_transform: center is not permissible (F is not in the "
                              "mult-th power of the center ideal)");
    }
    const bool cx = spec.center == TransformSpec::Center::XZ;
    for (Mono& m : monos) {
        if (spec.chart == TransformSpec::Chart::Z) {
            // center (X,Z): X -> XZ, divide by Z^mult
            m.z += (cx ? m.x : m.y) - mult;
        } else if (cx) {
            // X-chart: Z -> XZ, divide by X^mult
            m.x += m.z - mult;
        } else {
            m.y += m.z - mult;
        }
    }
    return rebuild(monos, L);
}

namespace {

CycElem det3(const std::array<std::array<CycElem, 3>, 3>& a, unsigned L) {
    auto e = [&](int r, int c) { return a[r][c].embedded(L); };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
           e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace

SurfacePoly linear_change(const SurfacePoly& F,
                          const std::array<std::array<CycElem, 3>, 3>& matrix) {
    std::vector<Mono> monos = monomials_of(F);
    unsigned L = F.field_order();
    for (const auto& row : matrix)
        for (const CycElem& c : row) L = lcm_u(L, c.order());
    if (det3(matrix, L).is_zero()) throw DomainError("linear_change: substitution not invertible");

    std::array<SurfacePoly, 3> images;
    for (int k = 0; k < 3; ++k) {
        SurfacePoly img;
        PuiseuxPoly xy = PuiseuxPoly::variable_x(1).scaled(matrix[k][0].embedded(L)) +
                         PuiseuxPoly::variable_y(1).scaled(matrix[k][1].embedded(L));
        if (!xy.is_zero()) img = img + SurfacePoly::from_coeff(0, xy);
        if (!matrix[k][2].is_zero())
            img = img + SurfacePoly::from_coeff(
                            1, PuiseuxPoly::constant(matrix[k][2].embedded(L)));
        images[k] = img;
    }

    SurfacePoly out;
    for (const Mono& m : monos) {
        SurfacePoly term = SurfacePoly::from_coeff(0, PuiseuxPoly::constant(m.c.embedded(L)));
        term = term * images[0].pow(static_cast<unsigned long>(m.x));
        term = term * images[1].pow(static_cast<unsigned long>(m.y));
        term = term * images[2].pow(static_cast<unsigned long>(m.z));
        out = out + term;
    }
    return out;
}

SurfacePoly translate_z(const SurfacePoly& F, const CycElem& xi, const CycElem& eta) {
    unsigned L = lcm_u(F.field_order(), lcm_u(xi.order(), eta.order()));
    std::array<std::array<CycElem, 3>, 3> m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m[r][c] = r == c ? CycElem::one(L) : CycElem::zero(L);
    m[2][0] = xi.embedded(L);
    m[2][1] = eta.embedded(L);
    return linear_change(F, m);
}

}  // namespace puiseux
