#ifndef PUISEUX_SERIES_HPP
#define PUISEUX_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "puiseux/cyclotomic.hpp"
#include "puiseux/unipoly.hpp"

namespace puiseux {

// Integer exponent pair (i, j) against a ramification denominator m:
// the monomial X^{i/m} Y^{j/m}.
struct Exp2 {
    long long i = 0;
    long long j = 0;
    friend auto operator<=>(const Exp2&, const Exp2&) = default;
};

// Finitely supported Puiseux polynomial: sum of c_{ij} X^{i/m} Y^{j/m} with
// exact coefficients in Q(delta_L). Stored canonically:
//   - no zero coefficients,
//   - all coefficients share one field order,
//   - m is minimal (divided by gcd(m, all i, all j)), so structural equality
//     is semantic equality and "lies in R" is simply m == 1.
// Immutable value type, safe to share across threads.
class PuiseuxPoly {
public:
    PuiseuxPoly() : m_(1), field_order_(1) {}

    static PuiseuxPoly zero(unsigned field_order = 1);
    static PuiseuxPoly constant(const CycElem& c);
    static PuiseuxPoly from_terms(unsigned m, unsigned field_order,
                                  const std::vector<std::pair<Exp2, CycElem>>& terms);
    // c * X^{i/m} Y^{j/m}
    static PuiseuxPoly term(unsigned m, const Exp2& e, const CycElem& c);
    static PuiseuxPoly variable_x(unsigned m = 1);  // X^{1/m}
    static PuiseuxPoly variable_y(unsigned m = 1);  // Y^{1/m}

    unsigned m() const { return m_; }
    unsigned field_order() const { return field_order_; }
    const std::map<Exp2, CycElem>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    // Nonzero element of R (integral exponents only)?
    bool is_integral() const { return m_ == 1; }
    bool is_constant() const;
    std::optional<CycElem> as_constant() const;

    const std::pair<std::string, std::string>& var_names() const { return vars_; }
    PuiseuxPoly with_var_names(std::string x, std::string y) const;

    // min (i+j)/m over the support; throws DomainError on zero input.
    Rat order() const;
    // Sum of the minimal-order terms.
    PuiseuxPoly initial_form() const;
    // Galois action (a, b): coefficient of (i, j) multiplied by
    // delta_m^{a i + b j}. Uses this poly's m; field enlarged to lcm(L, m).
    PuiseuxPoly conjugate(long a, long b) const;
    // Erase all terms with integral exponents (m | i and m | j).
    PuiseuxPoly strip_integral() const;

    // Support as exponent pairs against denominator target_m (which must be a
    // multiple of m()).
    std::vector<Exp2> exponents_for(unsigned target_m) const;
    std::vector<Exp2> exponents() const { return exponents_for(m_); }

    PuiseuxPoly embedded_field(unsigned new_order) const;

    PuiseuxPoly operator-() const;
    friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
    friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b);
    friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
    PuiseuxPoly scaled(const CycElem& c) const;
    PuiseuxPoly scaled(const Rat& r) const;
    PuiseuxPoly pow(unsigned long e) const;

    bool operator==(const PuiseuxPoly& other) const;
    bool operator!=(const PuiseuxPoly& other) const { return !(*this == other); }
    // Deterministic total order for dedup/sorting.
    static int compare(const PuiseuxPoly& a, const PuiseuxPoly& b);
    bool operator<(const PuiseuxPoly& other) const { return compare(*this, other) < 0; }

private:
    void normalize();

    unsigned m_;
    unsigned field_order_;
    std::map<Exp2, CycElem> terms_;
    std::pair<std::string, std::string> vars_{"X", "Y"};
};

// Exact division in the Puiseux polynomial ring: q with q*g == f, or nullopt.
// Performed as univariate division in y over the fraction field Q(delta)(x)
// with x = X^{1/m}, y = Y^{1/m}; accepted iff the remainder vanishes and the
// quotient is a polynomial. Requires g != 0.
std::optional<PuiseuxPoly> exact_divide(const PuiseuxPoly& f, const PuiseuxPoly& g);

// Maximal common R-divisor of a nonempty family of nonzero Puiseux
// polynomials (intended: a full Galois orbit). Computed as the polynomial gcd
// in x, y via content/primitive-part recursion, then normalized into R:
// monomial part floored to X^k Y^l, remaining support must lie in (mZ)^2
// (internal invariant), leading coefficient 1 under graded lex with X > Y.
// Returns 1 when there is no common R-divisor.
PuiseuxPoly gcd_conjugates(const std::vector<PuiseuxPoly>& polys);

// Truncated series: terms of order >= precision are unknown.
struct TruncatedSeries {
    PuiseuxPoly body;
    Rat precision;
};

// Polynomial in Z over Puiseux polynomials: F = sum coeffs[k] Z^k.
class SurfacePoly {
public:
    SurfacePoly() = default;

    static SurfacePoly zero() { return SurfacePoly(); }
    static SurfacePoly from_coeff(unsigned long zdeg, const PuiseuxPoly& c);
    static SurfacePoly z_power(unsigned long n, unsigned field_order = 1);

    bool is_zero() const { return coeffs_.empty(); }
    unsigned long degree() const;
    const std::map<unsigned long, PuiseuxPoly>& coeffs() const { return coeffs_; }
    PuiseuxPoly coeff(unsigned long k) const;
    const PuiseuxPoly& leading() const;
    bool is_monic() const;
    // lcm of coefficient denominators (1 when every coefficient lies in R)
    unsigned m() const;
    unsigned field_order() const;
    bool is_integral() const { return m() == 1; }

    SurfacePoly operator-() const;
    friend SurfacePoly operator+(const SurfacePoly& a, const SurfacePoly& b);
    friend SurfacePoly operator-(const SurfacePoly& a, const SurfacePoly& b);
    friend SurfacePoly operator*(const SurfacePoly& a, const SurfacePoly& b);
    SurfacePoly scaled(const PuiseuxPoly& c) const;
    SurfacePoly pow(unsigned long e) const;

    PuiseuxPoly eval(const PuiseuxPoly& zeta) const;

    // Order in (X, Y, Z) with Z given weight 1: min over terms of
    // k + (i+j)/m. Throws DomainError on the zero polynomial.
    Rat weighted_order() const;
    // Sum of minimal-weight terms.
    SurfacePoly initial_form() const;

    bool operator==(const SurfacePoly& other) const;
    bool operator!=(const SurfacePoly& other) const { return !(*this == other); }

private:
    void prune();

    std::map<unsigned long, PuiseuxPoly> coeffs_;
};

}  // namespace puiseux

#endif
