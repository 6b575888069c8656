#ifndef PUISEUX_TESTS_SUPPORT_HPP
#define PUISEUX_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "puiseux/parser.hpp"
#include "puiseux/render.hpp"
#include "puiseux/series.hpp"

namespace puiseux::testing {

inline PuiseuxPoly PS(const std::string& text) { return parse_series(text).value; }
inline SurfacePoly PF(const std::string& text) { return parse_surface_poly(text).value; }

// Random nonzero Puiseux polynomial generator for the property suites.
struct SeriesGen {
    std::mt19937 rng;
    explicit SeriesGen(unsigned seed) : rng(seed) {}

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    }

    // Random small cyclotomic coefficient over Q(delta_L).
    CycElem coefficient(unsigned L) {
        static const long nums[] = {1, -1, 2, -2, 3, -3, 1, -1};
        Rat r = make_rat(nums[pick(0, 7)], pick(0, 4) == 0 ? 2 : 1);
        CycElem c = CycElem::from_rational(L, r);
        if (pick(0, 2) == 0) c = c * CycElem::delta_pow(L, pick(0, L - 1));
        return c;
    }

    // Random series with denominator m, term count <= max_terms, exponents in
    // [0, span*m]^2 with no integral-exponent terms (and no constant term).
    // min_order_num: require i + j >= min_order_num (e.g. m for transversal).
    PuiseuxPoly series(unsigned m, int max_terms, long min_sum = 1, long span = 2) {
        unsigned L = m;
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::vector<std::pair<Exp2, CycElem>> terms;
            int want = static_cast<int>(pick(1, max_terms));
            for (int t = 0; t < want; ++t) {
                Exp2 e{pick(0, span * m), pick(0, span * m)};
                if (e.i % m == 0 && e.j % m == 0) continue;
                if (e.i + e.j < min_sum) continue;
                terms.push_back({e, coefficient(L)});
            }
            if (terms.empty()) continue;
            PuiseuxPoly p = PuiseuxPoly::from_terms(m, L, terms);
            if (!p.is_zero()) return p;
        }
        throw std::runtime_error("generator failed to produce a series");
    }
};

}  // namespace puiseux::testing

#endif
