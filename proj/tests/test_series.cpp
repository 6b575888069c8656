#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace puiseux;
using puiseux::testing::PS;
using puiseux::testing::SeriesGen;

TEST_CASE("order") {
    CHECK(PS("X^(3/2) + Y^(1/2)*X").order() == make_rat(3, 2));
    CHECK(PS("X^(2/5) + Y^(2/5)").order() == make_rat(2, 5));
    CHECK(PS("X").order() == 1);
    CHECK_THROWS_AS(PS("X - X").order(), DomainError);
}

TEST_CASE("initial form") {
    SUBCASE("2.2 example series") {
        PuiseuxPoly z =
            PS("X^(3/4) + 2*X^(2/4)*Y^(1/4) - X^(1/4)*Y^(2/4) - 2*Y^(3/4) + X^(6/4)");
        CHECK(z.initial_form() ==
              PS("X^(3/4) + 2*X^(2/4)*Y^(1/4) - X^(1/4)*Y^(2/4) - 2*Y^(3/4)"));
    }
    SUBCASE("homogeneous input is its own initial form") {
        PuiseuxPoly z = PS("X^(2/5) + Y^(2/5)");
        CHECK(z.initial_form() == z);
    }
    CHECK(PS("X^(1/2) + X").initial_form() == PS("X^(1/2)"));
}

TEST_CASE("conjugate") {
    SUBCASE("m=2, (1,0)") {
        CHECK(PS("X^(1/2) + Y^(1/2)").conjugate(1, 0) == PS("-X^(1/2) + Y^(1/2)"));
    }
    SUBCASE("(0,0) is the identity") {
        PuiseuxPoly z = PS("X^(13/9)*Y^(16/9) - 2*X^(22/9)*Y^(7/9)");
        CHECK(z.conjugate(0, 0) == z);
    }
    SUBCASE("m=5, (1,0) multiplies the X term by delta_5^2") {
        PuiseuxPoly got = PS("X^(2/5) + Y^(2/5)").conjugate(1, 0);
        CHECK(got == PS("rou(5,2)*X^(2/5) + Y^(2/5)"));
    }
    SUBCASE("group action and support preservation") {
        SeriesGen gen(42);
        for (int rep = 0; rep < 25; ++rep) {
            unsigned m = static_cast<unsigned>(gen.pick(2, 6));
            PuiseuxPoly f = gen.series(m, 4);
            long a = gen.pick(0, m - 1), b = gen.pick(0, m - 1);
            long a2 = gen.pick(0, m - 1), b2 = gen.pick(0, m - 1);
            CHECK(f.conjugate(a, b).conjugate(a2, b2) == f.conjugate(a + a2, b + b2));
            CHECK(f.conjugate(a, b).exponents() == f.exponents());
        }
    }
}

TEST_CASE("strip_integral") {
    CHECK(PS("X^(1/2) + X").strip_integral() == PS("X^(1/2)"));
    SUBCASE("2.2 example is untouched") {
        PuiseuxPoly z =
            PS("X^(3/4) + 2*X^(2/4)*Y^(1/4) - X^(1/4)*Y^(2/4) - 2*Y^(3/4) + X^(6/4)");
        CHECK(z.strip_integral() == z);
    }
    CHECK(PS("X*Y").strip_integral().is_zero());
}

TEST_CASE("ring operations") {
    PuiseuxPoly x = PuiseuxPoly::variable_x(2), y = PuiseuxPoly::variable_y(2);
    SUBCASE("(x - y)(x + y) = X - Y") {
        CHECK((x - y) * (x + y) == PS("X - Y"));
    }
    SUBCASE("(X^(1/2)+Y^(1/2))^3 is the second section-3 series") {
        CHECK(PS("X^(1/2) + Y^(1/2)").pow(3) ==
              PS("X^(3/2) + 3*X*Y^(1/2) + 3*X^(1/2)*Y + Y^(3/2)"));
    }
    SUBCASE("f + 0 = f") {
        PuiseuxPoly f = PS("X^(13/9)*Y^(16/9) - 5*X^(7/9)*Y^(4/9)");
        CHECK(f + PuiseuxPoly::zero() == f);
    }
    SUBCASE("order and initial form are multiplicative") {
        SeriesGen gen(99);
        for (int rep = 0; rep < 20; ++rep) {
            PuiseuxPoly f = gen.series(static_cast<unsigned>(gen.pick(2, 5)), 4);
            PuiseuxPoly g = gen.series(static_cast<unsigned>(gen.pick(2, 5)), 4);
            CHECK((f * g).order() == f.order() + g.order());
            CHECK((f * g).initial_form() == f.initial_form() * g.initial_form());
        }
    }
}

TEST_CASE("exact_divide") {
    PuiseuxPoly z1 = PS("X^(3/2) + X*Y^(1/2) - X^(1/2)*Y - Y^(3/2)");
    SUBCASE("zeta1 / (X - Y) = X^(1/2) + Y^(1/2)") {
        auto q = exact_divide(z1, PS("X - Y"));
        REQUIRE(q.has_value());
        CHECK(*q == PS("X^(1/2) + Y^(1/2)"));
    }
    SUBCASE("zeta2 is not divisible by X - Y") {
        PuiseuxPoly z2 = PS("X^(1/2) + Y^(1/2)").pow(3);
        CHECK_FALSE(exact_divide(z2, PS("X - Y")).has_value());
    }
    SUBCASE("f / 1 = f") {
        auto q = exact_divide(z1, PS("1"));
        REQUIRE(q.has_value());
        CHECK(*q == z1);
    }
    SUBCASE("division by zero divisor is an error") {
        CHECK_THROWS_AS(exact_divide(z1, PuiseuxPoly::zero()), DomainError);
    }
    SUBCASE("round trip on random products") {
        SeriesGen gen(7);
        for (int rep = 0; rep < 30; ++rep) {
            PuiseuxPoly f = gen.series(static_cast<unsigned>(gen.pick(2, 6)), 4);
            PuiseuxPoly g = gen.series(static_cast<unsigned>(gen.pick(2, 6)), 3);
            auto q = exact_divide(f * g, g);
            REQUIRE(q.has_value());
            CHECK(*q == f);
        }
    }
}

TEST_CASE("gcd_conjugates") {
    SUBCASE("conjugates of zeta1 have gcd X - Y") {
        PuiseuxPoly z1 = PS("X^(3/2) + X*Y^(1/2) - X^(1/2)*Y - Y^(3/2)");
        std::vector<PuiseuxPoly> orb;
        for (long a = 0; a < 2; ++a)
            for (long b = 0; b < 2; ++b) orb.push_back(z1.conjugate(a, b));
        CHECK(gcd_conjugates(orb) == PS("X - Y"));
    }
    SUBCASE("conjugates of zeta2 share nothing in R") {
        PuiseuxPoly z2 = PS("X^(1/2) + Y^(1/2)").pow(3);
        std::vector<PuiseuxPoly> orb;
        for (long a = 0; a < 2; ++a)
            for (long b = 0; b < 2; ++b) orb.push_back(z2.conjugate(a, b));
        CHECK(gcd_conjugates(orb) == PS("1"));
    }
    SUBCASE("single element") {
        CHECK(gcd_conjugates({PS("X - Y")}) == PS("X - Y"));
    }
    SUBCASE("monomial fractional parts are floored into R") {
        // x^3 - x y^2 = x (X - Y) at m = 2: the R-part is X - Y
        PuiseuxPoly z = PS("X^(3/2) - X^(1/2)*Y");
        std::vector<PuiseuxPoly> orb;
        for (long a = 0; a < 2; ++a)
            for (long b = 0; b < 2; ++b) orb.push_back(z.conjugate(a, b));
        CHECK(gcd_conjugates(orb) == PS("X - Y"));
    }
}

TEST_CASE("squarefree decomposition") {
    unsigned L = 1;
    CycElem one = CycElem::one(L);
    UniPoly t = UniPoly::monomial(L, 1, one);
    auto lin = [&](long r) { return t - UniPoly::constant(CycElem::from_int(L, r)); };
    SUBCASE("(t-1)^8 (t-16)^4") {
        UniPoly p = UniPoly::constant(one);
        for (int k = 0; k < 8; ++k) p = p * lin(1);
        for (int k = 0; k < 4; ++k) p = p * lin(16);
        auto dec = squarefree_decompose(p);
        REQUIRE(dec.size() == 2);
        CHECK(dec[0].first == lin(16));
        CHECK(dec[0].second == 4);
        CHECK(dec[1].first == lin(1));
        CHECK(dec[1].second == 8);
    }
    SUBCASE("squarefree input over Q(delta_4)") {
        UniPoly p = UniPoly::monomial(4, 2, CycElem::one(4)) +
                    UniPoly::constant(CycElem::one(4));
        auto dec = squarefree_decompose(p);
        REQUIRE(dec.size() == 1);
        CHECK(dec[0].second == 1);
        CHECK(dec[0].first == p);
    }
    SUBCASE("(t-1)^2 (t-2) recomposes") {
        UniPoly p = lin(1) * lin(1) * lin(2);
        auto dec = squarefree_decompose(p);
        REQUIRE(dec.size() == 2);
        CHECK(dec[0].first == lin(2));
        CHECK(dec[0].second == 1);
        CHECK(dec[1].first == lin(1));
        CHECK(dec[1].second == 2);
    }
    SUBCASE("product reconstructs and parts are coprime") {
        SeriesGen gen(1);
        for (int rep = 0; rep < 15; ++rep) {
            UniPoly p = UniPoly::constant(CycElem::from_int(L, gen.pick(1, 3)));
            int nf = static_cast<int>(gen.pick(1, 3));
            for (int k = 0; k < nf; ++k) {
                UniPoly f = lin(gen.pick(-2, 2));
                int e = static_cast<int>(gen.pick(1, 3));
                for (int j = 0; j < e; ++j) p = p * f;
            }
            auto dec = squarefree_decompose(p);
            UniPoly rec = UniPoly::constant(p.leading());
            for (const auto& [s, k] : dec)
                for (int j = 0; j < k; ++j) rec = rec * s;
            CHECK(rec == p);
            for (std::size_t a = 0; a < dec.size(); ++a)
                for (std::size_t b = a + 1; b < dec.size(); ++b)
                    CHECK(UniPoly::gcd(dec[a].first, dec[b].first).degree() == 0);
        }
    }
}

TEST_CASE("known_field_roots") {
    SUBCASE("rational roots of (t+27)(t+729)") {
        UniPoly t = UniPoly::monomial(1, 1, CycElem::one(1));
        UniPoly p = (t + UniPoly::constant(CycElem::from_int(1, 27))) *
                    (t + UniPoly::constant(CycElem::from_int(1, 729)));
        auto split = known_field_roots(p);
        REQUIRE(split.roots.size() == 2);
        CHECK(split.remainder.degree() == 0);
    }
    SUBCASE("twisted roots 2i, 3i over Q(delta_4)") {
        CycElem i = CycElem::delta_pow(4, 1);
        UniPoly t = UniPoly::monomial(4, 1, CycElem::one(4));
        UniPoly p = (t - UniPoly::constant(i * Rat(2))) * (t - UniPoly::constant(i * Rat(3)));
        auto split = known_field_roots(p);
        CHECK(split.roots.size() == 2);
        CHECK(split.remainder.degree() == 0);
    }
    SUBCASE("conjugate pair 1 +- i via the discriminant square root") {
        // t^2 - 2t + 2
        UniPoly t = UniPoly::monomial(4, 1, CycElem::one(4));
        UniPoly p = t * t - t.scaled(CycElem::from_int(4, 2)) +
                    UniPoly::constant(CycElem::from_int(4, 2));
        auto split = known_field_roots(p);
        CHECK(split.roots.size() == 2);
    }
    SUBCASE("irrational quadratic stays unresolved") {
        // t^2 - 2 has no roots in Q(delta_4)
        UniPoly t = UniPoly::monomial(4, 1, CycElem::one(4));
        UniPoly p = t * t - UniPoly::constant(CycElem::from_int(4, 2));
        auto split = known_field_roots(p);
        CHECK(split.roots.empty());
        CHECK(split.remainder.degree() == 2);
    }
}

TEST_CASE("surface polynomial basics") {
    SurfacePoly F = puiseux::testing::PF("Z^2 - 2*X*Z + X^2 - X");
    CHECK(F.degree() == 2);
    CHECK(F.is_monic());
    SUBCASE("evaluation at a root vanishes") {
        CHECK(F.eval(PS("X^(1/2) + X")).is_zero());
    }
    SUBCASE("weighted order counts Z with weight 1") {
        CHECK(F.weighted_order() == 1);
        CHECK(puiseux::testing::PF("Z^4 - X^6").weighted_order() == 4);
    }
}
