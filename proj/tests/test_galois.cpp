#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "puiseux/galois.hpp"
#include "support.hpp"

using namespace puiseux;
using puiseux::testing::PF;
using puiseux::testing::PS;
using puiseux::testing::SeriesGen;

TEST_CASE("lattice_index") {
    CHECK(lattice_index({{7, 4}, {12, 11}}, 9) == 1);
    CHECK(lattice_index({{1, 0}}, 2) == 2);
    CHECK(lattice_index({{2, 0}, {0, 2}}, 5) == 1);
    SUBCASE("invariant under the choice of privileged set") {
        PuiseuxPoly z = PS(
            "X^(13/9)*Y^(16/9) - 2*X^(22/9)*Y^(7/9) + 7*X^(12/9)*Y^(11/9) - 5*X^(7/9)*Y^(4/9)");
        long long d_full = lattice_index(z.exponents(), 9);
        CHECK(lattice_index({{7, 4}, {12, 11}}, 9) == d_full);
        CHECK(lattice_index({{12, 11}, {13, 16}}, 9) == d_full);
        CHECK(lattice_index({{12, 11}, {22, 7}}, 9) == d_full);
    }
}

TEST_CASE("orbit") {
    SUBCASE("X^(2/5)+Y^(2/5) has 25 distinct conjugates") {
        CHECK(orbit(PS("X^(2/5) + Y^(2/5)")).size() == 25);
    }
    SUBCASE("an element of R is fixed") {
        auto orb = orbit(PS("X"));
        REQUIRE(orb.size() == 1);
        CHECK(orb[0] == PS("X"));
    }
    SUBCASE("X^(1/2)+Y^(1/2) has the four sign combinations") {
        auto orb = orbit(PS("X^(1/2) + Y^(1/2)"));
        REQUIRE(orb.size() == 4);
        std::vector<PuiseuxPoly> expect = {
            PS("X^(1/2) + Y^(1/2)"), PS("X^(1/2) - Y^(1/2)"),
            PS("-X^(1/2) + Y^(1/2)"), PS("-X^(1/2) - Y^(1/2)")};
        for (const auto& e : expect)
            CHECK(std::count(orb.begin(), orb.end(), e) == 1);
    }
    SUBCASE("orbit-stabilizer: |orbit| * |stab| = m^2, |orbit| = m^2/d") {
        SeriesGen gen(11);
        for (int rep = 0; rep < 40; ++rep) {
            PuiseuxPoly z = gen.series(static_cast<unsigned>(gen.pick(2, 7)), 5);
            long long m = z.m();
            auto orb = orbit(z);
            auto stab = stabilizer(z);
            CHECK(static_cast<long long>(orb.size() * stab.size()) == m * m);
            CHECK(static_cast<long long>(orb.size()) ==
                  m * m / lattice_index(z.exponents(), m));
        }
    }
}

TEST_CASE("minimal_polynomial") {
    SUBCASE("section 4: degree 25 with the six displayed coefficients") {
        SurfacePoly F = minimal_polynomial(PS("X^(2/5) + Y^(2/5)"));
        CHECK(F.degree() == 25);
        CHECK(F.is_monic());
        CHECK(F.coeff(20) == PS("-5*X^2 - 5*Y^2"));
        CHECK(F.coeff(15) == PS("10*X^4 - 605*X^2*Y^2 + 10*Y^4"));
        CHECK(F.coeff(10) == PS("-10*X^6 - 1905*X^4*Y^2 - 1905*X^2*Y^4 - 10*Y^6"));
        CHECK(F.coeff(5) ==
              PS("5*X^8 - 605*X^6*Y^2 + 1905*X^4*Y^4 - 605*X^2*Y^6 + 5*Y^8"));
        CHECK(F.coeff(0) ==
              PS("-X^10 - 5*X^8*Y^2 - 10*X^6*Y^4 - 10*X^4*Y^6 - 5*X^2*Y^8 - Y^10"));
        for (unsigned long k : {1ul, 2ul, 3ul, 4ul, 6ul, 24ul}) CHECK(F.coeff(k).is_zero());
        SUBCASE("F(zeta) = 0 exactly") {
            CHECK(F.eval(PS("X^(2/5) + Y^(2/5)")).is_zero());
        }
    }
    SUBCASE("Z^2 - X") {
        CHECK(minimal_polynomial(PS("X^(1/2)")) == PF("Z^2 - X"));
    }
    SUBCASE("section 3: F1 as displayed") {
        SurfacePoly F1 = minimal_polynomial(PS("X^(3/2) + X*Y^(1/2) - X^(1/2)*Y - Y^(3/2)"));
        CHECK(F1 == PF("Z^4 - 2*X^3*Z^2 + 2*X^2*Y*Z^2 + 2*X*Y^2*Z^2 - 2*Y^3*Z^2 "
                       "+ X^6 - 6*X^5*Y + 15*X^4*Y^2 - 20*X^3*Y^3 + 15*X^2*Y^4 - 6*X*Y^5 + Y^6"));
    }
    SUBCASE("section 3: F2 as displayed") {
        SurfacePoly F2 = minimal_polynomial(PS("X^(3/2) + 3*X*Y^(1/2) + 3*X^(1/2)*Y + Y^(3/2)"));
        CHECK(F2.coeff(2) == PS("-2*X^3 - 30*X^2*Y - 30*X*Y^2 - 2*Y^3"));
        CHECK(F2.coeff(0) == PS("X - Y").pow(6));
        CHECK(F2.coeff(3).is_zero());
        CHECK(F2.coeff(1).is_zero());
    }
    SUBCASE("properties on random series") {
        SeriesGen gen(13);
        for (int rep = 0; rep < 15; ++rep) {
            unsigned m = static_cast<unsigned>(gen.pick(2, 5));
            PuiseuxPoly z = gen.series(m, 3);
            SurfacePoly F = minimal_polynomial(z);
            CHECK(F.degree() == orbit(z).size());
            CHECK(F.eval(z).is_zero());
            CHECK(F.is_integral());
            // Galois stability of every coefficient
            long a = gen.pick(0, m - 1), b = gen.pick(0, m - 1);
            for (const auto& [k, c] : F.coeffs()) CHECK(c.conjugate(a, b) == c);
        }
    }
}

TEST_CASE("tchirnhausen") {
    SUBCASE("Z^2 - 2XZ + X^2 - X -> Z^2 - X") {
        CHECK(tchirnhausen(PF("Z^2 - 2*X*Z + X^2 - X")) == PF("Z^2 - X"));
    }
    SUBCASE("fixed point when the subleading coefficient vanishes") {
        SurfacePoly F = PF("Z^3 + X*Z - Y");
        CHECK(tchirnhausen(F) == F);
    }
    SUBCASE("matches the minimal polynomial of the stripped series") {
        PuiseuxPoly z = PS("X^(1/3) + Y");
        CHECK(tchirnhausen(minimal_polynomial(z)) == minimal_polynomial(PS("X^(1/3)")));
        CHECK(minimal_polynomial(PS("X^(1/3)")) == PF("Z^3 - X"));
        PuiseuxPoly w = PS("X^(1/2) + X");
        CHECK(tchirnhausen(minimal_polynomial(w)) ==
              minimal_polynomial(w.strip_integral()));
    }
    SUBCASE("kills the subleading coefficient in general") {
        SeriesGen gen(19);
        for (int rep = 0; rep < 10; ++rep) {
            PuiseuxPoly z = gen.series(static_cast<unsigned>(gen.pick(2, 4)), 3);
            SurfacePoly F = minimal_polynomial(z);
            SurfacePoly G = tchirnhausen(F);
            if (G.degree() >= 1) CHECK(G.coeff(G.degree() - 1).is_zero());
            CHECK(G == minimal_polynomial(z.strip_integral().is_zero()
                                              ? z  // nothing stripped
                                              : z.strip_integral()));
        }
    }
    SUBCASE("requires a monic input") {
        CHECK_THROWS_AS(tchirnhausen(PF("X*Z^2 - Y")), DomainError);
    }
}

TEST_CASE("discriminant and quasi-ordinary test") {
    SUBCASE("X^(1/2): D = 4X, quasi-ordinary") {
        auto [D, qo] = discriminant_and_qo_test(PS("X^(1/2)"));
        CHECK(D == PS("4*X"));
        CHECK(qo);
    }
    SUBCASE("the F1 series is not quasi-ordinary") {
        auto [D, qo] = discriminant_and_qo_test(PS("X^(3/2) + X*Y^(1/2) - X^(1/2)*Y - Y^(3/2)"));
        CHECK_FALSE(qo);
    }
    SUBCASE("X^(1/2)Y^(1/2): D = 4XY, quasi-ordinary") {
        auto [D, qo] = discriminant_and_qo_test(PS("X^(1/2)*Y^(1/2)"));
        CHECK(D == PS("4*X*Y"));
        CHECK(qo);
    }
    SUBCASE("agrees with the closed-form discriminant for n = 2") {
        SeriesGen gen(29);
        for (int rep = 0; rep < 20; ++rep) {
            PuiseuxPoly z = gen.series(2, 3);
            if (orbit(z).size() != 2) continue;
            SurfacePoly F = minimal_polynomial(z);
            // disc(Z^2 + bZ + c) = b^2 - 4c
            PuiseuxPoly b = F.coeff(1), c = F.coeff(0);
            auto [D, qo] = discriminant_and_qo_test(z);
            (void)qo;
            CHECK(D == b * b - c.scaled(make_rat(4)));
        }
    }
    SUBCASE("agrees with the closed-form discriminant for a cubic") {
        // disc(Z^3 + pZ + q) = -4p^3 - 27q^2
        PuiseuxPoly z = PS("X^(1/3)*Y^(2/3)");
        SurfacePoly F = minimal_polynomial(z);
        REQUIRE(F.degree() == 3);
        PuiseuxPoly p = F.coeff(1), q = F.coeff(0);
        auto [D, qo] = discriminant_and_qo_test(z);
        (void)qo;
        PuiseuxPoly closed =
            -(p * p * p).scaled(make_rat(4)) - (q * q).scaled(make_rat(27));
        CHECK(D == closed);
    }
}

TEST_CASE("surface invariants") {
    SUBCASE("section 4 analyze values") {
        SurfaceInvariants inv = surface_invariants(PS("X^(2/5) + Y^(2/5)"));
        CHECK(inv.m == 5);
        CHECK(inv.d == 1);
        CHECK(inv.degree == 25);
        CHECK(inv.nu == make_rat(2, 5));
        CHECK(inv.multiplicity == 10);
        CHECK(inv.transversal == Transversality::non_transversal);
    }
    SUBCASE("degree formula matches the expanded order") {
        SurfacePoly F = minimal_polynomial(PS("X^(2/5) + Y^(2/5)"));
        Rat w = F.weighted_order();
        CHECK(w == 10);
    }
}
