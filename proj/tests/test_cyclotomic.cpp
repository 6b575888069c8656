#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "puiseux/cyclotomic.hpp"

using namespace puiseux;

TEST_CASE("cyclotomic polynomials") {
    SUBCASE("Phi_4 = x^2 + 1") {
        auto& p = cyclotomic_polynomial(4);
        CHECK(p == std::vector<Int>{1, 0, 1});
    }
    SUBCASE("Phi_1 = x - 1") {
        auto& p = cyclotomic_polynomial(1);
        CHECK(p == std::vector<Int>{-1, 1});
    }
    SUBCASE("Phi_9 = x^6 + x^3 + 1, the oracle (x^9-1)/(x^3-1)") {
        auto& p = cyclotomic_polynomial(9);
        CHECK(p == std::vector<Int>{1, 0, 0, 1, 0, 0, 1});
    }
    SUBCASE("monic of degree phi(L), divides x^L - 1") {
        for (unsigned L : {2u, 6u, 12u, 15u, 36u}) {
            auto& p = cyclotomic_polynomial(L);
            CHECK(p.size() == euler_phi(L) + 1);
            CHECK(p.back() == 1);
            // delta is a root of x^L - 1: delta^L == 1 checked below
        }
    }
}

TEST_CASE("field operations") {
    SUBCASE("delta_4^2 = -1 and is_rational") {
        CycElem i = CycElem::delta_pow(4, 1);
        CycElem sq = i * i;
        auto r = sq.as_rational();
        REQUIRE(r.has_value());
        CHECK(*r == -1);
    }
    SUBCASE("L=9: delta^3 + delta^6 = -1") {
        CycElem s = CycElem::delta_pow(9, 3) + CycElem::delta_pow(9, 6);
        auto r = s.as_rational();
        REQUIRE(r.has_value());
        CHECK(*r == -1);
    }
    SUBCASE("division by zero is a distinct error") {
        CycElem one = CycElem::one(4);
        CHECK_THROWS_AS(one / CycElem::zero(4), DivisionByZeroError);
        CHECK_THROWS_AS(CycElem::zero(5).inverse(), DivisionByZeroError);
    }
    SUBCASE("power_of_delta reduces canonically") {
        CHECK(CycElem::delta_pow(4, 5) == CycElem::delta_pow(4, 1));
        CHECK(CycElem::delta_pow(4, -1) == CycElem::delta_pow(4, 3));
        CHECK(CycElem::delta_pow(1, 7).is_one());
    }
}

TEST_CASE("embed") {
    SUBCASE("-1 in Q(delta_2) maps to delta_4^2") {
        CycElem m1 = CycElem::from_int(2, -1);
        CHECK(m1.embedded(4) == CycElem::delta_pow(4, 2));
    }
    SUBCASE("delta_3 -> delta_9^3") {
        CHECK(CycElem::delta_pow(3, 1).embedded(9) == CycElem::delta_pow(9, 3));
    }
    SUBCASE("identity on rationals, preserves is_rational") {
        CycElem r = CycElem::from_rational(3, make_rat(7, 5));
        CycElem e = r.embedded(12);
        REQUIRE(e.as_rational().has_value());
        CHECK(*e.as_rational() == make_rat(7, 5));
    }
    SUBCASE("rejects non-multiples") {
        CHECK_THROWS_AS(CycElem::delta_pow(4, 1).embedded(6), DomainError);
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(12345);
    auto rnd = [&](unsigned L) {
        std::vector<Rat> c(euler_phi(L));
        for (auto& x : c) x = make_rat(static_cast<long long>(rng() % 11) - 5,
                                       static_cast<long long>(rng() % 3) + 1);
        CycElem acc = CycElem::zero(L);
        for (std::size_t e = 0; e < c.size(); ++e)
            acc = acc + CycElem::delta_pow(L, static_cast<long>(e)) * c[e];
        return acc;
    };
    for (unsigned L : {1u, 2u, 3u, 4u, 5u, 8u, 9u, 12u}) {
        for (int rep = 0; rep < 12; ++rep) {
            CycElem a = rnd(L), b = rnd(L), c = rnd(L);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
        // delta^L = 1 and delta^k != 1 for 0 < k < L
        CHECK(CycElem::delta_pow(L, static_cast<long>(L)).is_one());
        for (unsigned k = 1; k < L; ++k) CHECK_FALSE(CycElem::delta_pow(L, k).is_one());
        // Phi_L(delta) = 0 exactly
        CycElem v = CycElem::zero(L);
        const auto& phi = cyclotomic_polynomial(L);
        for (std::size_t e = 0; e < phi.size(); ++e)
            v = v + CycElem::delta_pow(L, static_cast<long>(e)) * Rat(phi[e]);
        CHECK(v.is_zero());
    }
}

TEST_CASE("embed is a homomorphism") {
    std::mt19937 rng(777);
    for (int rep = 0; rep < 20; ++rep) {
        long e1 = static_cast<long>(rng() % 6), e2 = static_cast<long>(rng() % 6);
        CycElem a = CycElem::delta_pow(6, e1) + CycElem::one(6);
        CycElem b = CycElem::delta_pow(6, e2) * make_rat(3, 2);
        CHECK((a * b).embedded(12) == a.embedded(12) * b.embedded(12));
        CHECK((a + b).embedded(12) == a.embedded(12) + b.embedded(12));
    }
}
