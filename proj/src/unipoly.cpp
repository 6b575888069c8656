#include "puiseux/unipoly.hpp"

#include <algorithm>
#include <numeric>

namespace puiseux {

UniPoly::UniPoly(unsigned field_order, std::vector<CycElem> coeffs)
    : field_order_(field_order), coeffs_(std::move(coeffs)) {
    for (const CycElem& c : coeffs_)
        if (c.order() != field_order_)
            throw DomainError("unipoly coefficient order mismatch");
    prune();
}

UniPoly UniPoly::constant(const CycElem& c) {
    return UniPoly(c.order(), std::vector<CycElem>{c});
}

UniPoly UniPoly::monomial(unsigned field_order, std::size_t degree, const CycElem& c) {
    std::vector<CycElem> v(degree + 1, CycElem::zero(field_order));
    v[degree] = c.embedded(field_order);
    return UniPoly(field_order, std::move(v));
}

void UniPoly::prune() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const CycElem& UniPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

CycElem UniPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : CycElem::zero(field_order_);
}

UniPoly UniPoly::embedded(unsigned new_order) const {
    std::vector<CycElem> v;
    v.reserve(coeffs_.size());
    for (const CycElem& c : coeffs_) v.push_back(c.embedded(new_order));
    return UniPoly(new_order, std::move(v));
}

namespace {
unsigned unify(const UniPoly& a, const UniPoly& b) {
    return lcm_u(a.field_order(), b.field_order());
}
}  // namespace

UniPoly UniPoly::operator-() const {
    std::vector<CycElem> v;
    v.reserve(coeffs_.size());
    for (const CycElem& c : coeffs_) v.push_back(-c);
    return UniPoly(field_order_, std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    unsigned L = unify(a, b);
    UniPoly ae = a.embedded(L), be = b.embedded(L);
    std::vector<CycElem> v(std::max(ae.coeffs_.size(), be.coeffs_.size()), CycElem::zero(L));
    for (std::size_t i = 0; i < ae.coeffs_.size(); ++i) v[i] = ae.coeffs_[i];
    for (std::size_t i = 0; i < be.coeffs_.size(); ++i) v[i] = v[i] + be.coeffs_[i];
    return UniPoly(L, std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    unsigned L = unify(a, b);
    if (a.is_zero() || b.is_zero()) return UniPoly(L);
    UniPoly ae = a.embedded(L), be = b.embedded(L);
    std::vector<CycElem> v(ae.coeffs_.size() + be.coeffs_.size() - 1, CycElem::zero(L));
    for (std::size_t i = 0; i < ae.coeffs_.size(); ++i) {
        if (ae.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < be.coeffs_.size(); ++j) {
            if (be.coeffs_[j].is_zero()) continue;
            v[i + j] = v[i + j] + ae.coeffs_[i] * be.coeffs_[j];
        }
    }
    return UniPoly(L, std::move(v));
}

UniPoly UniPoly::scaled(const CycElem& c) const {
    unsigned L = lcm_u(field_order_, c.order());
    CycElem cc = c.embedded(L);
    UniPoly se = embedded(L);
    std::vector<CycElem> v;
    v.reserve(se.coeffs_.size());
    for (const CycElem& x : se.coeffs_) v.push_back(x * cc);
    return UniPoly(L, std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    unsigned L = unify(a, b);
    UniPoly r = a.embedded(L), be = b.embedded(L);
    if (r.degree() < be.degree()) return {UniPoly(L), r};
    CycElem lead_inv = be.leading().inverse();
    std::vector<CycElem> q(r.coeffs_.size() - be.coeffs_.size() + 1, CycElem::zero(L));
    for (std::size_t k = q.size(); k-- > 0;) {
        CycElem c = r.coeff(be.coeffs_.size() - 1 + k) * lead_inv;
        q[k] = c;
        if (!c.is_zero())
            for (std::size_t i = 0; i < be.coeffs_.size(); ++i)
                r.coeffs_[i + k] = r.coeffs_[i + k] - c * be.coeffs_[i];
    }
    r.prune();
    return {UniPoly(L, std::move(q)), r};
}

std::optional<UniPoly> UniPoly::divexact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly(field_order_);
    std::vector<CycElem> v;
    v.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v.push_back(coeffs_[i] * Rat(static_cast<long>(i)));
    return UniPoly(field_order_, std::move(v));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

CycElem UniPoly::eval(const CycElem& x) const {
    unsigned L = lcm_u(field_order_, x.order());
    CycElem xe = x.embedded(L);
    CycElem acc = CycElem::zero(L);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * xe + coeffs_[i].embedded(L);
    return acc;
}

UniPoly UniPoly::galois_twist(unsigned k) const {
    std::vector<CycElem> v;
    v.reserve(coeffs_.size());
    for (const CycElem& c : coeffs_) {
        // delta^e -> delta^(k e) on the basis expansion
        CycElem out = CycElem::zero(field_order_);
        const auto& cs = c.coeffs();
        for (std::size_t e = 0; e < cs.size(); ++e)
            if (cs[e] != 0)
                out = out + CycElem::delta_pow(field_order_, static_cast<long>(k * e)) * cs[e];
        v.push_back(out);
    }
    return UniPoly(field_order_, std::move(v));
}

bool UniPoly::operator==(const UniPoly& other) const {
    unsigned L = unify(*this, other);
    return embedded(L).coeffs_ == other.embedded(L).coeffs_;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    unsigned L = unify(a, b);
    a = a.embedded(L);
    b = b.embedded(L);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree_decompose: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() == 0) return out;
    UniPoly pm = p.monic();
    UniPoly dp = pm.derivative();
    UniPoly g = UniPoly::gcd(pm, dp);
    UniPoly c = *UniPoly::divexact(pm, g);
    UniPoly d = *UniPoly::divexact(dp, g) - c.derivative();
    int k = 1;
    while (c.degree() > 0) {
        UniPoly s = UniPoly::gcd(c, d);
        if (s.degree() > 0) out.emplace_back(s, k);
        c = *UniPoly::divexact(c, s);
        d = *UniPoly::divexact(d, s) - c.derivative();
        ++k;
    }
    return out;
}

RatFun::RatFun(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError();
    normalize();
}

RatFun RatFun::from_poly(UniPoly p) {
    unsigned L = p.field_order();
    return RatFun(std::move(p), UniPoly::constant(CycElem::one(L)));
}

void RatFun::normalize() {
    unsigned L = lcm_u(num_.field_order(), den_.field_order());
    num_ = num_.embedded(L);
    den_ = den_.embedded(L);
    if (num_.is_zero()) {
        den_ = UniPoly::constant(CycElem::one(L));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = *UniPoly::divexact(num_, g);
        den_ = *UniPoly::divexact(den_, g);
    }
    CycElem lead_inv = den_.leading().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

UniPoly RatFun::as_polynomial() const {
    if (!is_polynomial()) throw DomainError("rational function is not a polynomial");
    // den is monic of degree 0, i.e. exactly 1
    return num_;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

// ---------------------------------------------------------------------------
// root search in the session field

namespace {

// Divisors of |n| from trial division up to 10^6; a large composite leftover
// contributes itself as one extra divisor. Capped to keep candidate sets
// desk-scale.
std::vector<Int> bounded_divisors(Int n, std::size_t cap = 4096) {
    n = abs(n);
    std::vector<std::pair<Int, unsigned>> fac;
    if (n == 0) return {};
    for (unsigned long p = 2; p <= 1000000ul && Int(p) * Int(p) <= n; p = (p == 2 ? 3 : p + 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fac.push_back({Int(p), e});
        }
    }
    if (n > 1) fac.push_back({n, 1});
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        std::vector<Int> next;
        Int pk = 1;
        for (unsigned k = 0; k <= e; ++k) {
            for (const Int& d : divs) {
                next.push_back(d * pk);
                if (next.size() >= cap) break;
            }
            if (next.size() >= cap) break;
            pk *= p;
        }
        divs = std::move(next);
        if (divs.size() >= cap) break;
    }
    return divs;
}

// All rational roots of a polynomial with rational coefficients, exact.
std::vector<Rat> rational_roots(const UniPoly& p) {
    std::vector<Rat> out;
    if (p.degree() < 1) return out;
    std::vector<Rat> cs;
    for (const CycElem& c : p.coeffs()) {
        auto r = c.as_rational();
        if (!r) return out;
        cs.push_back(*r);
    }
    Int den(1);
    for (const Rat& r : cs) den = lcm(den, Int(r.get_den()));
    std::vector<Int> ics;
    for (const Rat& r : cs) ics.push_back(Int(r.get_num()) * (den / Int(r.get_den())));
    std::size_t low = 0;
    while (low < ics.size() && ics[low] == 0) ++low;
    if (low > 0) out.push_back(Rat(0));
    if (low == ics.size() - 1) return out;  // pure monomial
    std::vector<Int> nums = bounded_divisors(ics[low]);
    std::vector<Int> dens = bounded_divisors(ics.back());
    for (const Int& nu : nums)
        for (const Int& de : dens)
            for (int sign : {1, -1}) {
                Rat cand = make_rat(sign * nu, de);
                CycElem v = p.eval(CycElem::from_rational(p.field_order(), cand));
                if (v.is_zero()) out.push_back(cand);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Square root of c in Q(delta_L) when one of the form rational * delta^e
// exists.
std::optional<CycElem> field_sqrt(const CycElem& c) {
    const unsigned L = c.order();
    if (c.is_zero()) return CycElem::zero(L);
    for (unsigned e = 0; e < L; ++e) {
        CycElem twisted = c * CycElem::delta_pow(L, -2L * static_cast<long>(e));
        auto r = twisted.as_rational();
        if (!r || *r < 0) continue;
        Int num = r->get_num(), den = r->get_den();
        Int sn, sd;
        if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
            mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
            return CycElem::from_rational(L, make_rat(sn, sd)) *
                   CycElem::delta_pow(L, static_cast<long>(e));
        }
    }
    return std::nullopt;
}

}  // namespace

RootSplit known_field_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("known_field_roots: zero polynomial");
    const unsigned L = p.field_order();
    RootSplit out;
    out.remainder = p.monic();

    auto take_root = [&](const CycElem& beta) -> bool {
        CycElem be = beta.embedded(L);
        if (!out.remainder.eval(be).is_zero()) return false;
        UniPoly lin = UniPoly::monomial(L, 1, CycElem::one(L)) -
                      UniPoly::constant(be);
        while (true) {
            auto q = UniPoly::divexact(out.remainder, lin);
            if (!q) break;
            out.roots.push_back(be);
            out.remainder = q->monic();
            if (out.remainder.eval(be).is_zero()) continue;
            break;
        }
        return true;
    };

    bool progress = true;
    while (progress && out.remainder.degree() >= 1) {
        progress = false;
        if (out.remainder.degree() == 1) {
            CycElem beta = -out.remainder.coeff(0) / out.remainder.coeff(1);
            take_root(beta);
            break;
        }
        // rational * delta^e candidates via a twist t -> delta^e u
        for (unsigned e = 0; e < L && !progress; ++e) {
            bool rationalizable = true;
            CycElem scale = CycElem::one(L);
            // coefficients of rem(delta^e u) normalized by the leading one
            const auto& cs = out.remainder.coeffs();
            std::vector<CycElem> twisted(cs.size(), CycElem::zero(L));
            for (std::size_t k = 0; k < cs.size(); ++k)
                twisted[k] = cs[k] * CycElem::delta_pow(L, static_cast<long>(e * k));
            CycElem lead_inv = twisted.back().inverse();
            for (auto& c : twisted) c = c * lead_inv;
            for (const auto& c : twisted)
                if (!c.as_rational()) {
                    rationalizable = false;
                    break;
                }
            if (!rationalizable) continue;
            UniPoly ratpoly(L, twisted);
            for (const Rat& r : rational_roots(ratpoly)) {
                CycElem beta = CycElem::from_rational(L, r) *
                               CycElem::delta_pow(L, static_cast<long>(e));
                if (!beta.is_zero() || r == 0)
                    if (take_root(beta)) progress = true;
            }
        }
        // quadratic formula with a square-root search
        if (!progress && out.remainder.degree() == 2) {
            CycElem a = out.remainder.coeff(2), b = out.remainder.coeff(1),
                    c = out.remainder.coeff(0);
            CycElem disc = b * b - a * c * Rat(4);
            if (auto s = field_sqrt(disc)) {
                CycElem two_a_inv = (a * Rat(2)).inverse();
                if (take_root((-b + *s) * two_a_inv)) progress = true;
                if (take_root((-b - *s) * two_a_inv)) progress = true;
            }
        }
    }
    return out;
}

}  // namespace puiseux
