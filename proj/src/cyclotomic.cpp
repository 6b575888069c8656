#include "puiseux/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace puiseux {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(long long num, long long den) {
    return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

unsigned lcm_u(unsigned a, unsigned b) {
    return static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(a, b));
}

namespace {

// Exact division of integer polynomials, used only by the Phi recursion.
std::vector<Int> divexact_int(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() - b.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        Int c = a[b.size() - 1 + k] / b.back();
        q[k] = c;
        if (c != 0)
            for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= c * b[i];
    }
    for (const Int& v : a)
        if (v != 0) throw InternalError("cyclotomic recursion: division not exact");
    return q;
}

// Remainder of a rational polynomial modulo the monic integer polynomial Phi.
std::vector<Rat> reduce_mod(std::vector<Rat> a, const std::vector<Int>& phi) {
    const std::size_t d = phi.size() - 1;
    while (a.size() > d) {
        Rat c = a.back();
        a.pop_back();
        if (c != 0) {
            const std::size_t k = a.size() - d;
            for (std::size_t i = 0; i < d; ++i) a[k + i] -= c * Rat(phi[i]);
        }
    }
    return a;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned L) {
    if (L == 0) throw DomainError("cyclotomic_polynomial: order must be positive");
    static std::map<unsigned, std::vector<Int>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<Int>&(unsigned)> get = [&](unsigned n) -> const std::vector<Int>& {
        auto found = cache.find(n);
        if (found != cache.end()) return found->second;
        std::vector<Int> p(n + 1, Int(0));  // x^n - 1
        p[0] = -1;
        p[n] = 1;
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) p = divexact_int(std::move(p), get(d));
        return cache.emplace(n, std::move(p)).first->second;
    };
    return get(L);
}

CycElem CycElem::zero(unsigned order) {
    return CycElem(order, std::vector<Rat>(euler_phi(order), Rat(0)));
}

CycElem CycElem::one(unsigned order) { return from_rational(order, Rat(1)); }

CycElem CycElem::from_rational(unsigned order, const Rat& value) {
    std::vector<Rat> c(euler_phi(order), Rat(0));
    c[0] = value;
    return CycElem(order, std::move(c));
}

CycElem CycElem::from_int(unsigned order, long value) {
    return from_rational(order, Rat(value));
}

CycElem CycElem::delta_pow(unsigned order, long e) {
    long r = e % static_cast<long>(order);
    if (r < 0) r += order;
    std::vector<Rat> raw(static_cast<std::size_t>(r) + 1, Rat(0));
    raw.back() = Rat(1);
    auto red = reduce_mod(std::move(raw), cyclotomic_polynomial(order));
    red.resize(euler_phi(order), Rat(0));
    return CycElem(order, std::move(red));
}

bool CycElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& r) { return r == 0; });
}

bool CycElem::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rat& r) { return r == 0; });
}

std::optional<Rat> CycElem::as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

CycElem CycElem::embedded(unsigned new_order) const {
    if (new_order % order_ != 0)
        throw DomainError("embed: target order is not a multiple of the source order");
    if (new_order == order_) return *this;
    const unsigned k = new_order / order_;
    std::vector<Rat> raw((coeffs_.size() - 1) * k + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * k] = coeffs_[i];
    auto red = reduce_mod(std::move(raw), cyclotomic_polynomial(new_order));
    red.resize(euler_phi(new_order), Rat(0));
    return CycElem(new_order, std::move(red));
}

void CycElem::require_same_order(const CycElem& a, const CycElem& b) {
    if (a.order_ != b.order_)
        throw DomainError("cyclotomic operands have different orders; embed first");
}

CycElem operator+(const CycElem& a, const CycElem& b) {
    CycElem::require_same_order(a, b);
    std::vector<Rat> c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return CycElem(a.order_, std::move(c));
}

CycElem operator-(const CycElem& a, const CycElem& b) {
    CycElem::require_same_order(a, b);
    std::vector<Rat> c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
    return CycElem(a.order_, std::move(c));
}

CycElem CycElem::operator-() const {
    std::vector<Rat> c(coeffs_);
    for (Rat& r : c) r = -r;
    return CycElem(order_, std::move(c));
}

CycElem operator*(const CycElem& a, const CycElem& b) {
    CycElem::require_same_order(a, b);
    const std::size_t n = a.coeffs_.size();
    std::vector<Rat> raw(2 * n - 1, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    auto red = reduce_mod(std::move(raw), cyclotomic_polynomial(a.order_));
    red.resize(n, Rat(0));
    return CycElem(a.order_, std::move(red));
}

CycElem CycElem::operator*(const Rat& r) const {
    std::vector<Rat> c(coeffs_);
    for (Rat& x : c) x *= r;
    return CycElem(order_, std::move(c));
}

namespace {

// Dense rational polynomial helpers for the extended Euclid below.
using RPoly = std::vector<Rat>;

void trim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly sub_mul(const RPoly& a, const RPoly& q, const RPoly& b) {
    // a - q*b
    RPoly out(a);
    if (!q.empty() && !b.empty()) {
        out.resize(std::max(out.size(), q.size() + b.size() - 1), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
        }
    }
    trim(out);
    return out;
}

std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
    trim(a);
    if (b.empty()) throw DivisionByZeroError();
    if (a.size() < b.size()) return {{}, a};
    RPoly q(a.size() - b.size() + 1, Rat(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Rat c = a[b.size() - 1 + k] / b.back();
        q[k] = c;
        if (c != 0)
            for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= c * b[i];
    }
    trim(a);
    trim(q);
    return {q, a};
}

}  // namespace

CycElem CycElem::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    // Extended Euclid against Phi_L; Phi_L is irreducible over Q so the gcd
    // with any nonzero representative is a nonzero constant.
    RPoly r0;
    for (const Int& c : cyclotomic_polynomial(order_)) r0.push_back(Rat(c));
    RPoly r1(coeffs_);
    trim(r1);
    RPoly s0, s1{Rat(1)};
    while (true) {
        auto [q, r] = divmod(r0, r1);
        if (r.empty()) break;
        RPoly s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.size() != 1)
        throw InternalError("cyclotomic inverse: nonconstant gcd with Phi_L");
    RPoly inv(s1);
    for (Rat& c : inv) c /= r1[0];
    inv = reduce_mod(std::move(inv), cyclotomic_polynomial(order_));
    inv.resize(euler_phi(order_), Rat(0));
    return CycElem(order_, std::move(inv));
}

CycElem operator/(const CycElem& a, const CycElem& b) { return a * b.inverse(); }

CycElem CycElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycElem base = *this;
    CycElem acc = CycElem::one(order_);
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

bool CycElem::operator==(const CycElem& other) const {
    return order_ == other.order_ && coeffs_ == other.coeffs_;
}

int CycElem::compare(const CycElem& a, const CycElem& b) {
    require_same_order(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::pair<CycElem, CycElem> aligned(const CycElem& a, const CycElem& b) {
    unsigned L = lcm_u(a.order(), b.order());
    return {a.embedded(L), b.embedded(L)};
}

}  // namespace puiseux
