#ifndef PUISEUX_LATTICE_HPP
#define PUISEUX_LATTICE_HPP

#include <vector>

#include "puiseux/series.hpp"

namespace puiseux {

// Subgroup of Z^2 containing (mZ)^2, in canonical Hermite form: the lattice
// spanned by the rows (a, b) and (0, c) with a, c > 0 and 0 <= b < c.
// Canonical basis is unique per subgroup, so equality is field comparison.
struct SubgroupZm2 {
    long long m = 1;
    long long a = 1, b = 0, c = 1;

    // Smallest subgroup containing the exponent classes and (mZ)^2.
    static SubgroupZm2 closure(const std::vector<Exp2>& exponents, long long m);

    bool member(const Exp2& e) const;
    // Index in Z^2 (= a*c); divides m^2.
    long long index() const;

    friend bool operator==(const SubgroupZm2&, const SubgroupZm2&) = default;
};

// gcd of the 2x2 minors of the matrix with columns (m,0), (0,m) and the
// exponents. Equals closure(exponents, m).index().
long long lattice_index(const std::vector<Exp2>& exponents, long long m);

struct MonomialOrder {
    enum class Kind { grlex, grevlex, lex, invlex };
    Kind kind = Kind::grlex;

    // Strict "comes before" in the scan order. grlex refines total degree
    // with ties broken toward larger i (the X-major convention); grevlex
    // breaks ties toward larger j; lex is (i, j) ascending; invlex (j, i).
    bool less(const Exp2& lhs, const Exp2& rhs) const;

    static MonomialOrder parse(const std::string& name);  // throws DomainError
    std::string name() const;
};

// True iff the exponent subset E generates the same subgroup as the full
// exponent set of zeta. Throws DomainError when E is not a subset of Delta.
bool is_privileged(const std::vector<Exp2>& E, const PuiseuxPoly& zeta);

// Greedy scan of Delta(zeta) in increasing order; keeps an exponent iff it is
// not already in the closure of the kept ones. Result is always privileged.
std::vector<Exp2> extract_privileged(const PuiseuxPoly& zeta, const MonomialOrder& order);

// All inclusion-minimal privileged subsets of Delta(zeta), sorted by size
// then lexicographically. Brute-force enumeration; |Delta| capped.
std::vector<std::vector<Exp2>> minimal_privileged_sets(const PuiseuxPoly& zeta,
                                                       std::size_t max_support = 16);

}  // namespace puiseux

#endif
