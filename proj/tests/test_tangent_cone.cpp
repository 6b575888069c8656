#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "puiseux/tangent_cone.hpp"
#include "support.hpp"

using namespace puiseux;
using puiseux::testing::PF;
using puiseux::testing::PS;
using puiseux::testing::SeriesGen;

namespace {

SurfacePoly zfree(const PuiseuxPoly& p) { return SurfacePoly::from_coeff(0, p); }

}  // namespace

TEST_CASE("multiplicity") {
    CHECK(multiplicity(PS("X^(2/5) + Y^(2/5)")) == 10);
    CHECK(multiplicity(PS("X^(3/2) + X*Y^(1/2) - X^(1/2)*Y - Y^(3/2)")) == 4);
    CHECK(multiplicity(PS("X^(1/2)")) == 1);
}

TEST_CASE("monic_conjugate_product") {
    CHECK(monic_conjugate_product(CycElem::one(1), 2) == PS("X - Y"));
    CHECK(monic_conjugate_product(CycElem::from_int(1, 2), 4) == PS("X - 16*Y"));
    CHECK(monic_conjugate_product(CycElem::from_int(1, -3), 3) == PS("X + 27*Y"));
    SUBCASE("closed form for random alpha") {
        SeriesGen gen(3);
        for (int rep = 0; rep < 20; ++rep) {
            unsigned m = static_cast<unsigned>(gen.pick(2, 8));
            CycElem a = gen.coefficient(m);
            if (a.is_zero()) continue;
            PuiseuxPoly expect =
                PuiseuxPoly::variable_x(1) - PuiseuxPoly::variable_y(1).scaled(a.pow(m));
            CHECK(monic_conjugate_product(a, m) == expect);
        }
    }
}

TEST_CASE("tangent cone cases") {
    SUBCASE("2.2 example: (X-Y)^8 (X-16Y)^4") {
        TangentConeReport rep = tangent_cone(
            PS("X^(3/4) + 2*X^(2/4)*Y^(1/4) - X^(1/4)*Y^(2/4) - 2*Y^(3/4) + X^(6/4)"));
        CHECK(rep.cone_case == ConeCase::C);
        CHECK(rep.cone == zfree(PS("X - Y").pow(8) * PS("X - 16*Y").pow(4)));
        REQUIRE(rep.planes.size() == 2);
        CHECK(rep.planes[0].axis == PlaneFactor::Axis::Slant);
        CHECK(rep.planes[0].beta == CycElem::from_int(4, 1));
        CHECK(rep.planes[0].exponent == 8);
        CHECK(rep.planes[1].beta == CycElem::from_int(4, 16));
        CHECK(rep.planes[1].exponent == 4);
        CHECK(rep.unresolved.empty());
        CHECK(rep.unit.is_one());
    }
    SUBCASE("final remark pair: same exponents, different cones") {
        PuiseuxPoly z1 = PS("X^(2/4) + (1 + i)*X^(1/4)*Y^(1/4) + i*Y^(2/4)");
        PuiseuxPoly z2 = PS("X^(2/4) + 2*X^(1/4)*Y^(1/4) + 2*Y^(2/4)");
        REQUIRE(z1.exponents() == z2.exponents());
        TangentConeReport r1 = tangent_cone(z1);
        TangentConeReport r2 = tangent_cone(z2);
        CHECK(r1.cone == zfree(PS("X - Y").pow(4)));
        // The paper's displayed value for the second cone, (X-Y)^2(X-4Y)^2,
        // contradicts its own monic-conjugate decomposition: the roots of
        // t^2+2t+2 are -1+i and -1-i, which differ by the factor i and hence
        // form ONE class with (-1+i)^4 = -4. The correct cone is (X+4Y)^4.
        CHECK(r2.cone == zfree(PS("X + 4*Y").pow(4)));
        CHECK_FALSE(r1.cone == r2.cone);
        REQUIRE(r2.planes.size() == 1);
        CHECK(r2.planes[0].beta == CycElem::from_int(4, -4));
        CHECK(r2.planes[0].exponent == 4);
    }
    SUBCASE("case B: X^(1/2)Y^(1/2) + XY^(1/2) -> (Z^2 - XY)^2") {
        TangentConeReport rep = tangent_cone(PS("X^(1/2)*Y^(1/2) + X*Y^(1/2)"));
        CHECK(rep.cone_case == ConeCase::B);
        CHECK(rep.power == 2);
        CHECK(rep.cone == PF("Z^2 - X*Y").pow(2));
    }
    SUBCASE("case A: order above one gives Z^n") {
        TangentConeReport rep = tangent_cone(PS("X^(3/2) + X*Y^(1/2) - X^(1/2)*Y - Y^(3/2)"));
        CHECK(rep.cone_case == ConeCase::A);
        CHECK(rep.cone == PF("Z^4"));
    }
    SUBCASE("degenerate Y-absent branch: X^(1/3)") {
        TangentConeReport rep = tangent_cone(PS("X^(1/3)"));
        CHECK(rep.cone_case == ConeCase::C);
        CHECK(rep.cone == zfree(PS("X")));
        REQUIRE(rep.planes.size() == 1);
        CHECK(rep.planes[0].axis == PlaneFactor::Axis::X);
        CHECK(rep.planes[0].exponent == 1);
        // Z^3 - X has initial form -X
        CHECK(rep.unit == CycElem::from_int(rep.unit.order(), -1));
    }
    SUBCASE("precondition: integral terms must be stripped first") {
        CHECK_THROWS_AS(tangent_cone(PS("X^(1/3) + X")), DomainError);
        CHECK_THROWS_AS(tangent_cone(PuiseuxPoly::zero()), DomainError);
    }
}

TEST_CASE("plane_count_demo") {
    SUBCASE("m=3, mu=2: (X+27Y)^3 (X+729Y)^3") {
        TangentConeReport rep = plane_count_demo(3, 2);
        CHECK(rep.cone == zfree(PS("X + 27*Y").pow(3) * PS("X + 729*Y").pow(3)));
        REQUIRE(rep.planes.size() == 2);
        CHECK(rep.planes[0].exponent + rep.planes[1].exponent == 6);
    }
    SUBCASE("m=2, mu=1: (X-4Y)^2") {
        TangentConeReport rep = plane_count_demo(2, 1);
        CHECK(rep.cone == zfree(PS("X - 4*Y").pow(2)));
        CHECK(rep.planes.size() == 1);
    }
    SUBCASE("mu = m-1 планes exist for every m up to 6") {
        for (unsigned m = 2; m <= 6; ++m) {
            TangentConeReport rep = plane_count_demo(m, m - 1);
            CHECK(rep.planes.size() == m - 1);
        }
    }
    CHECK_THROWS_AS(plane_count_demo(3, 3), DomainError);
    CHECK_THROWS_AS(plane_count_demo(3, 0), DomainError);
}

TEST_CASE("tangent cone consistency properties") {
    SeriesGen gen(37);
    int done = 0;
    for (int rep = 0; rep < 60 && done < 25; ++rep) {
        unsigned m = static_cast<unsigned>(gen.pick(2, 6));
        PuiseuxPoly z = gen.series(m, 4);
        if (z.strip_integral() != z || z.is_zero()) continue;
        ++done;
        TangentConeReport tc = tangent_cone(z);
        // order of the cone equals the multiplicity
        CHECK(tc.cone.weighted_order() == Rat(static_cast<long>(multiplicity(z))));
        // the two computation paths agree: initial form of expanded F
        SurfacePoly F = minimal_polynomial(z);
        CHECK(tc.exact_initial_form == F.initial_form());
        if (tc.cone_case == ConeCase::C) {
            // degree = nu * m^2 / d; factors account for all of it
            SurfaceInvariants inv = tc.invariants;
            Rat deg = inv.nu * Rat(static_cast<long>(inv.degree));
            long long total = 0;
            for (const auto& p : tc.planes) total += p.exponent;
            for (const auto& u : tc.unresolved)
                total += u.exponent * (u.factor.is_zero() ? 0 : u.factor.order().get_num().get_si());
            CHECK(Rat(static_cast<long>(total)) == deg);
            long long g = std::gcd(static_cast<long long>(inv.m), inv.d);
            for (const auto& p : tc.planes)
                if (p.axis == PlaneFactor::Axis::Slant)
                    CHECK(p.exponent % (inv.m / g) == 0);
        }
    }
    CHECK(done >= 20);
}

TEST_CASE("lemma: single linear form maps to (X - alpha^m Y)^m") {
    SeriesGen gen(43);
    for (int rep = 0; rep < 20; ++rep) {
        unsigned m = static_cast<unsigned>(gen.pick(2, 8));
        CycElem alpha = gen.coefficient(m);
        while (alpha.is_zero()) alpha = gen.coefficient(m);
        PuiseuxPoly z = PuiseuxPoly::variable_x(m) -
                        PuiseuxPoly::variable_y(m).scaled(alpha);
        TangentConeReport rep2 = tangent_cone(z);
        PuiseuxPoly expect =
            (PuiseuxPoly::variable_x(1) - PuiseuxPoly::variable_y(1).scaled(alpha.pow(m)))
                .pow(m);
        CHECK(rep2.cone == zfree(expect));
    }
}
