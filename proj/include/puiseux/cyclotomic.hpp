#ifndef PUISEUX_CYCLOTOMIC_HPP
#define PUISEUX_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "puiseux/errors.hpp"

namespace puiseux {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not canonicalize on construction; always build through this.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long long num, long long den = 1);

unsigned euler_phi(unsigned n);

// Phi_L, monic with integer coefficients, low to high. Computed by the
// divisibility recursion Phi_L = (x^L - 1) / prod_{d|L, d<L} Phi_d and cached.
const std::vector<Int>& cyclotomic_polynomial(unsigned L);

// An element of Q(delta_L), delta_L a fixed primitive L-th root of unity,
// stored as its canonical representative modulo Phi_L: a rational coefficient
// vector of length phi(L) against the basis 1, delta, ..., delta^{phi(L)-1}.
// Two elements of the same order are equal iff their vectors are equal.
//
// Values are immutable after construction and safe to share across threads.
class CycElem {
public:
    CycElem() : order_(1), coeffs_(1, Rat(0)) {}

    static CycElem zero(unsigned order);
    static CycElem one(unsigned order);
    static CycElem from_rational(unsigned order, const Rat& value);
    static CycElem from_int(unsigned order, long value);
    // delta_L^e, canonically reduced; e may be negative.
    static CycElem delta_pow(unsigned order, long e);

    unsigned order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    // The value as a Rat when the element lies in Q, nullopt otherwise.
    std::optional<Rat> as_rational() const;

    // Image under delta_L -> delta_{L2}^{L2/L}; requires order() | L2.
    CycElem embedded(unsigned new_order) const;

    CycElem inverse() const;  // throws DivisionByZeroError on zero
    CycElem pow(long e) const;

    CycElem operator-() const;
    friend CycElem operator+(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a, const CycElem& b);
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    friend CycElem operator/(const CycElem& a, const CycElem& b);
    CycElem operator*(const Rat& r) const;

    bool operator==(const CycElem& other) const;
    bool operator!=(const CycElem& other) const { return !(*this == other); }

    // Total order on same-order elements (lexicographic on coefficients),
    // used for deterministic dedup/sorting. Not a field-compatible order.
    static int compare(const CycElem& a, const CycElem& b);

private:
    CycElem(unsigned order, std::vector<Rat> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    static void require_same_order(const CycElem& a, const CycElem& b);

    unsigned order_;
    std::vector<Rat> coeffs_;
};

// lcm helper for session bookkeeping.
unsigned lcm_u(unsigned a, unsigned b);

// Embed both operands into Q(delta_lcm) and return them.
std::pair<CycElem, CycElem> aligned(const CycElem& a, const CycElem& b);

}  // namespace puiseux

#endif
