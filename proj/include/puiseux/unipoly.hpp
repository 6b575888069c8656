#ifndef PUISEUX_UNIPOLY_HPP
#define PUISEUX_UNIPOLY_HPP

#include <utility>
#include <vector>

#include "puiseux/cyclotomic.hpp"

namespace puiseux {

// Dense univariate polynomial over Q(delta_L). Coefficients low to high with
// no trailing zeros; the zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    explicit UniPoly(unsigned field_order = 1) : field_order_(field_order) {}
    UniPoly(unsigned field_order, std::vector<CycElem> coeffs);

    static UniPoly constant(const CycElem& c);
    static UniPoly monomial(unsigned field_order, std::size_t degree, const CycElem& c);

    unsigned field_order() const { return field_order_; }
    const std::vector<CycElem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const CycElem& leading() const;
    CycElem coeff(std::size_t k) const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    UniPoly embedded(unsigned new_order) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const CycElem& c) const;

    // Field-coefficient division: a = q*b + r with deg r < deg b.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    // Quotient when the division is exact, nullopt otherwise.
    static std::optional<UniPoly> divexact(const UniPoly& a, const UniPoly& b);

    UniPoly derivative() const;
    UniPoly monic() const;
    CycElem eval(const CycElem& x) const;
    // coefficient-wise Galois twist delta -> delta^k (k coprime to the order)
    UniPoly galois_twist(unsigned k) const;

    bool operator==(const UniPoly& other) const;
    bool operator!=(const UniPoly& other) const { return !(*this == other); }

    // Monic gcd via the Euclidean algorithm.
    static UniPoly gcd(UniPoly a, UniPoly b);

private:
    void prune();

    unsigned field_order_;
    std::vector<CycElem> coeffs_;
};

// Yun squarefree decomposition: p = lead * prod s_k^k with the s_k monic,
// squarefree and pairwise coprime. Returned sorted by multiplicity, trivial
// (constant) parts omitted. Requires p != 0.
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p);

// Roots of p found inside Q(delta_L) together with the unfactored remainder.
// Complete for degree-1 factors; degree >= 2 parts are searched for roots of
// the shape rational * delta^e (rational-root test after a root-of-unity
// twist, trial-division factoring) and, for quadratics, by a square root
// search for the discriminant. Every candidate is verified by exact division,
// so returned roots are always genuine; remainder holds whatever was left.
struct RootSplit {
    std::vector<CycElem> roots;  // with multiplicity (repeated entries)
    UniPoly remainder;           // monic, root-free as far as the search saw
};
RootSplit known_field_roots(const UniPoly& p);

// Rational function num/den over Q(delta_L)[x], kept reduced with monic den.
class RatFun {
public:
    RatFun() : num_(1), den_(UniPoly::constant(CycElem::one(1))) {}
    RatFun(UniPoly num, UniPoly den);
    static RatFun from_poly(UniPoly p);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // The numerator when den == 1 (after monic normalization den has lead 1,
    // so polynomialness means degree 0 and the constant folded into num).
    UniPoly as_polynomial() const;

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);

private:
    void normalize();

    UniPoly num_;
    UniPoly den_;
};

}  // namespace puiseux

#endif
