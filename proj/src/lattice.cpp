#include "puiseux/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace puiseux {

namespace {

// Extended gcd: returns g = gcd(a, b) >= 0 with u*a + v*b = g.
long long xgcd(long long a, long long b, long long& u, long long& v) {
    long long old_r = a, r = b;
    long long old_u = 1, uu = 0;
    long long old_v = 0, vv = 1;
    while (r != 0) {
        long long q = old_r / r;
        std::swap(old_r, r);
        r -= q * old_r;
        std::swap(old_u, uu);
        uu -= q * old_u;
        std::swap(old_v, vv);
        vv -= q * old_v;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    u = old_u;
    v = old_v;
    return old_r;
}

}  // namespace

SubgroupZm2 SubgroupZm2::closure(const std::vector<Exp2>& exponents, long long m) {
    if (m <= 0) throw DomainError("closure: m must be positive");
    std::vector<Exp2> rows = {{m, 0}, {0, m}};
    rows.insert(rows.end(), exponents.begin(), exponents.end());

    // Row HNF on a 2-column integer matrix.
    long long a = 0, b = 0;
    std::vector<long long> pool;
    for (const Exp2& r : rows) {
        if (r.i == 0) {
            pool.push_back(r.j);
            continue;
        }
        if (a == 0) {
            a = r.i;
            b = r.j;
            continue;
        }
        long long u, v;
        long long g = xgcd(a, r.i, u, v);
        pool.push_back((a / g) * r.j - (r.i / g) * b);
        b = u * b + v * r.j;
        a = g;
    }
    long long c = 0;
    for (long long q : pool) c = std::gcd(c, q);
    if (a < 0) {
        a = -a;
        b = -b;
    }
    if (c == 0) throw InternalError("closure: degenerate lattice");
    SubgroupZm2 s;
    s.m = m;
    s.a = a;
    s.c = c;
    s.b = ((b % c) + c) % c;
    return s;
}

bool SubgroupZm2::member(const Exp2& e) const {
    if (e.i % a != 0) return false;
    long long t = e.j - (e.i / a) * b;
    return t % c == 0;
}

long long SubgroupZm2::index() const { return a * c; }

long long lattice_index(const std::vector<Exp2>& exponents, long long m) {
    if (m <= 0) throw DomainError("lattice_index: m must be positive");
    std::vector<Exp2> cols = {{m, 0}, {0, m}};
    cols.insert(cols.end(), exponents.begin(), exponents.end());
    long long g = 0;
    for (std::size_t s = 0; s < cols.size(); ++s)
        for (std::size_t t = s + 1; t < cols.size(); ++t) {
            long long minor = cols[s].i * cols[t].j - cols[t].i * cols[s].j;
            g = std::gcd(g, minor);
            if (g == 1) return 1;
        }
    return g;
}

bool MonomialOrder::less(const Exp2& lhs, const Exp2& rhs) const {
    switch (kind) {
        case Kind::grlex: {
            long long dl = lhs.i + lhs.j, dr = rhs.i + rhs.j;
            if (dl != dr) return dl < dr;
            return lhs.i > rhs.i;
        }
        case Kind::grevlex: {
            long long dl = lhs.i + lhs.j, dr = rhs.i + rhs.j;
            if (dl != dr) return dl < dr;
            return lhs.j > rhs.j;
        }
        case Kind::lex:
            if (lhs.i != rhs.i) return lhs.i < rhs.i;
            return lhs.j < rhs.j;
        case Kind::invlex:
            if (lhs.j != rhs.j) return lhs.j < rhs.j;
            return lhs.i < rhs.i;
    }
    throw InternalError("unknown monomial order");
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
    if (name == "grlex") return {Kind::grlex};
    if (name == "grevlex") return {Kind::grevlex};
    if (name == "lex") return {Kind::lex};
    if (name == "invlex") return {Kind::invlex};
    throw DomainError("unknown monomial order: " + name);
}

std::string MonomialOrder::name() const {
    switch (kind) {
        case Kind::grlex: return "grlex";
        case Kind::grevlex: return "grevlex";
        case Kind::lex: return "lex";
        case Kind::invlex: return "invlex";
    }
    return "?";
}

bool is_privileged(const std::vector<Exp2>& E, const PuiseuxPoly& zeta) {
    if (zeta.is_zero()) throw DomainError("is_privileged: zero series");
    std::vector<Exp2> delta = zeta.exponents();
    for (const Exp2& e : E)
        if (std::find(delta.begin(), delta.end(), e) == delta.end())
            throw DomainError("is_privileged: candidate set is not a subset of Delta");
    long long m = zeta.m();
    return SubgroupZm2::closure(E, m) == SubgroupZm2::closure(delta, m);
}

std::vector<Exp2> extract_privileged(const PuiseuxPoly& zeta, const MonomialOrder& order) {
    if (zeta.is_zero()) throw DomainError("extract_privileged: zero series");
    std::vector<Exp2> delta = zeta.exponents();
    std::sort(delta.begin(), delta.end(),
              [&](const Exp2& a, const Exp2& b) { return order.less(a, b); });
    std::vector<Exp2> kept;
    SubgroupZm2 cur = SubgroupZm2::closure({}, zeta.m());
    for (const Exp2& e : delta) {
        if (!cur.member(e)) {
            kept.push_back(e);
            cur = SubgroupZm2::closure(kept, zeta.m());
        }
    }
    return kept;
}

std::vector<std::vector<Exp2>> minimal_privileged_sets(const PuiseuxPoly& zeta,
                                                       std::size_t max_support) {
    if (zeta.is_zero()) throw DomainError("minimal_privileged_sets: zero series");
    std::vector<Exp2> delta = zeta.exponents();
    if (delta.size() > max_support)
        throw GuardrailError("minimal_privileged_sets: support larger than the configured bound");
    const long long m = zeta.m();
    const SubgroupZm2 full = SubgroupZm2::closure(delta, m);
    const std::size_t n = delta.size();

    std::vector<std::vector<Exp2>> out;
    for (std::size_t size = 1; size <= n; ++size) {
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountl(mask)) != size) continue;
            std::vector<Exp2> sub;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (1ul << k)) sub.push_back(delta[k]);
            if (!(SubgroupZm2::closure(sub, m) == full)) continue;
            bool minimal = true;
            for (std::size_t drop = 0; drop < sub.size() && minimal; ++drop) {
                std::vector<Exp2> smaller;
                for (std::size_t k = 0; k < sub.size(); ++k)
                    if (k != drop) smaller.push_back(sub[k]);
                if (SubgroupZm2::closure(smaller, m) == full) minimal = false;
            }
            if (minimal) {
                std::sort(sub.begin(), sub.end());
                out.push_back(std::move(sub));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace puiseux
