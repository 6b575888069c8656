#include "puiseux/series.hpp"

#include <algorithm>
#include <numeric>

namespace puiseux {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

Rat order_of(const Exp2& e, unsigned m) {
    return make_rat(e.i + e.j, static_cast<long long>(m));
}

}  // namespace

PuiseuxPoly PuiseuxPoly::zero(unsigned field_order) {
    PuiseuxPoly p;
    p.field_order_ = field_order;
    return p;
}

PuiseuxPoly PuiseuxPoly::constant(const CycElem& c) {
    PuiseuxPoly p;
    p.field_order_ = c.order();
    if (!c.is_zero()) p.terms_[{0, 0}] = c;
    return p;
}

PuiseuxPoly PuiseuxPoly::from_terms(unsigned m, unsigned field_order,
                                    const std::vector<std::pair<Exp2, CycElem>>& terms) {
    if (m == 0) throw DomainError("ramification denominator must be positive");
    PuiseuxPoly p;
    p.m_ = m;
    p.field_order_ = field_order;
    for (const auto& [e, c] : terms) {
        if (e.i < 0 || e.j < 0) throw DomainError("negative exponent");
        CycElem ce = c.embedded(field_order);
        auto it = p.terms_.find(e);
        if (it == p.terms_.end())
            p.terms_.emplace(e, std::move(ce));
        else
            it->second = it->second + ce;
    }
    p.normalize();
    return p;
}

PuiseuxPoly PuiseuxPoly::term(unsigned m, const Exp2& e, const CycElem& c) {
    return from_terms(m, c.order(), {{e, c}});
}

PuiseuxPoly PuiseuxPoly::variable_x(unsigned m) {
    return term(m, {1, 0}, CycElem::one(1));
}

PuiseuxPoly PuiseuxPoly::variable_y(unsigned m) {
    return term(m, {0, 1}, CycElem::one(1));
}

void PuiseuxPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    if (terms_.empty()) {
        m_ = 1;
        return;
    }
    long long g = m_;
    for (const auto& [e, c] : terms_) {
        g = gcd_ll(g, gcd_ll(e.i, e.j));
        if (g == 1) break;
    }
    if (g > 1) {
        std::map<Exp2, CycElem> reduced;
        for (const auto& [e, c] : terms_) reduced.emplace(Exp2{e.i / g, e.j / g}, c);
        terms_ = std::move(reduced);
        m_ = static_cast<unsigned>(m_ / g);
    }
}

bool PuiseuxPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0});
}

std::optional<CycElem> PuiseuxPoly::as_constant() const {
    if (!is_constant()) return std::nullopt;
    if (terms_.empty()) return CycElem::zero(field_order_);
    return terms_.begin()->second;
}

PuiseuxPoly PuiseuxPoly::with_var_names(std::string x, std::string y) const {
    PuiseuxPoly p(*this);
    p.vars_ = {std::move(x), std::move(y)};
    return p;
}

Rat PuiseuxPoly::order() const {
    if (is_zero()) throw DomainError("order of the zero series");
    bool first = true;
    Rat best;
    for (const auto& [e, c] : terms_) {
        Rat o = order_of(e, m_);
        if (first || o < best) {
            best = o;
            first = false;
        }
    }
    return best;
}

PuiseuxPoly PuiseuxPoly::initial_form() const {
    Rat nu = order();
    PuiseuxPoly p;
    p.m_ = m_;
    p.field_order_ = field_order_;
    p.vars_ = vars_;
    for (const auto& [e, c] : terms_)
        if (order_of(e, m_) == nu) p.terms_.emplace(e, c);
    p.normalize();
    return p;
}

PuiseuxPoly PuiseuxPoly::conjugate(long a, long b) const {
    const long m = static_cast<long>(m_);
    unsigned L = lcm_u(field_order_, m_);
    PuiseuxPoly p;
    p.m_ = m_;
    p.field_order_ = L;
    p.vars_ = vars_;
    const long step = static_cast<long>(L) / m;
    for (const auto& [e, c] : terms_) {
        long r = static_cast<long>((((a % m) * (e.i % m) + (b % m) * (e.j % m)) % m + m) % m);
        p.terms_.emplace(e, c.embedded(L) * CycElem::delta_pow(L, step * r));
    }
    p.normalize();
    return p;
}

PuiseuxPoly PuiseuxPoly::strip_integral() const {
    const long long m = m_;
    PuiseuxPoly p;
    p.m_ = m_;
    p.field_order_ = field_order_;
    p.vars_ = vars_;
    for (const auto& [e, c] : terms_)
        if (e.i % m != 0 || e.j % m != 0) p.terms_.emplace(e, c);
    p.normalize();
    return p;
}

std::vector<Exp2> PuiseuxPoly::exponents_for(unsigned target_m) const {
    if (target_m % m_ != 0)
        throw DomainError("target denominator is not a multiple of the series denominator");
    const long long s = target_m / m_;
    std::vector<Exp2> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back({e.i * s, e.j * s});
    return out;
}

PuiseuxPoly PuiseuxPoly::embedded_field(unsigned new_order) const {
    PuiseuxPoly p;
    p.m_ = m_;
    p.field_order_ = new_order;
    p.vars_ = vars_;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c.embedded(new_order));
    return p;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
    PuiseuxPoly p(*this);
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

namespace {

struct Aligned {
    unsigned m;
    unsigned L;
    std::map<Exp2, CycElem> a, b;
};

Aligned align(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    Aligned out;
    out.m = lcm_u(a.m(), b.m());
    out.L = lcm_u(a.field_order(), b.field_order());
    const long long sa = out.m / a.m(), sb = out.m / b.m();
    for (const auto& [e, c] : a.terms())
        out.a.emplace(Exp2{e.i * sa, e.j * sa}, c.embedded(out.L));
    for (const auto& [e, c] : b.terms())
        out.b.emplace(Exp2{e.i * sb, e.j * sb}, c.embedded(out.L));
    return out;
}

}  // namespace

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    Aligned al = align(a, b);
    for (const auto& [e, c] : al.b) {
        auto it = al.a.find(e);
        if (it == al.a.end())
            al.a.emplace(e, c);
        else
            it->second = it->second + c;
    }
    std::vector<std::pair<Exp2, CycElem>> terms(al.a.begin(), al.a.end());
    return PuiseuxPoly::from_terms(al.m, al.L, terms).with_var_names(a.var_names().first,
                                                                     a.var_names().second);
}

PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    Aligned al = align(a, b);
    std::map<Exp2, CycElem> acc;
    for (const auto& [ea, ca] : al.a) {
        for (const auto& [eb, cb] : al.b) {
            Exp2 e{ea.i + eb.i, ea.j + eb.j};
            CycElem p = ca * cb;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, std::move(p));
            else
                it->second = it->second + p;
        }
    }
    std::vector<std::pair<Exp2, CycElem>> terms(acc.begin(), acc.end());
    return PuiseuxPoly::from_terms(al.m, al.L, terms).with_var_names(a.var_names().first,
                                                                     a.var_names().second);
}

PuiseuxPoly PuiseuxPoly::scaled(const CycElem& c) const {
    if (c.is_zero()) return zero(lcm_u(field_order_, c.order()));
    unsigned L = lcm_u(field_order_, c.order());
    CycElem ce = c.embedded(L);
    PuiseuxPoly p;
    p.m_ = m_;
    p.field_order_ = L;
    p.vars_ = vars_;
    for (const auto& [e, x] : terms_) p.terms_.emplace(e, x.embedded(L) * ce);
    return p;
}

PuiseuxPoly PuiseuxPoly::scaled(const Rat& r) const {
    return scaled(CycElem::from_rational(field_order_, r));
}

PuiseuxPoly PuiseuxPoly::pow(unsigned long e) const {
    PuiseuxPoly acc = constant(CycElem::one(field_order_));
    PuiseuxPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool PuiseuxPoly::operator==(const PuiseuxPoly& other) const {
    return compare(*this, other) == 0;
}

int PuiseuxPoly::compare(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_ ? -1 : 1;
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    unsigned L = lcm_u(a.field_order_, b.field_order_);
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = CycElem::compare(ia->second.embedded(L), ib->second.embedded(L));
        if (c != 0) return c;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// exact division and bivariate gcd

namespace {

// Bivariate grid view: polynomial in y whose coefficients are UniPolys in x.
using Grid = std::vector<UniPoly>;

Grid to_grid(const PuiseuxPoly& f, unsigned mm, unsigned L) {
    const long long s = mm / f.m();
    long long maxj = 0;
    for (const auto& [e, c] : f.terms()) maxj = std::max(maxj, e.j * s);
    std::vector<std::vector<CycElem>> rows(static_cast<std::size_t>(maxj) + 1);
    for (const auto& [e, c] : f.terms()) {
        auto& row = rows[static_cast<std::size_t>(e.j * s)];
        std::size_t xi = static_cast<std::size_t>(e.i * s);
        if (row.size() <= xi) row.resize(xi + 1, CycElem::zero(L));
        row[xi] = c.embedded(L);
    }
    Grid g;
    g.reserve(rows.size());
    for (auto& row : rows) g.emplace_back(L, std::move(row));
    if (f.is_zero()) g.clear();
    return g;
}

void grid_prune(Grid& g) {
    while (!g.empty() && g.back().is_zero()) g.pop_back();
}

PuiseuxPoly from_grid(const Grid& g, unsigned mm, unsigned L) {
    std::vector<std::pair<Exp2, CycElem>> terms;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const auto& cs = g[j].coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (!cs[i].is_zero())
                terms.push_back({{static_cast<long long>(i), static_cast<long long>(j)}, cs[i]});
    }
    return PuiseuxPoly::from_terms(mm, L, terms);
}

}  // namespace

std::optional<PuiseuxPoly> exact_divide(const PuiseuxPoly& f, const PuiseuxPoly& g) {
    if (g.is_zero()) throw DomainError("exact_divide: divisor is zero");
    unsigned mm = lcm_u(f.m(), g.m());
    unsigned L = lcm_u(f.field_order(), g.field_order());
    if (f.is_zero()) return PuiseuxPoly::zero(L);

    Grid fg = to_grid(f, mm, L);
    Grid gg = to_grid(g, mm, L);
    const std::size_t dy = gg.size() - 1;
    if (fg.size() < gg.size()) return std::nullopt;

    std::vector<RatFun> rem;
    rem.reserve(fg.size());
    for (const auto& p : fg) rem.push_back(RatFun::from_poly(p));
    RatFun glead = RatFun::from_poly(gg.back());

    std::vector<RatFun> q(fg.size() - dy);
    for (std::size_t k = q.size(); k-- > 0;) {
        RatFun c = rem[dy + k] / glead;
        q[k] = c;
        if (!c.is_zero())
            for (std::size_t i = 0; i < gg.size(); ++i)
                rem[i + k] = rem[i + k] - c * RatFun::from_poly(gg[i]);
    }
    for (const RatFun& r : rem)
        if (!r.is_zero()) return std::nullopt;

    Grid qg;
    qg.reserve(q.size());
    for (const RatFun& c : q) {
        if (!c.is_polynomial()) return std::nullopt;
        qg.push_back(c.as_polynomial().embedded(L));
    }
    grid_prune(qg);
    return from_grid(qg, mm, L);
}

namespace {

UniPoly grid_content(const Grid& g) {
    UniPoly acc(g.empty() ? 1u : g.front().field_order());
    for (const auto& c : g) {
        if (c.is_zero()) continue;
        acc = UniPoly::gcd(acc, c);
        if (acc.degree() == 0) break;
    }
    return acc;
}

Grid grid_divexact_content(const Grid& g, const UniPoly& content) {
    if (content.degree() <= 0) {
        if (content.is_zero()) throw InternalError("grid content is zero");
        Grid out;
        CycElem inv = content.leading().inverse();
        for (const auto& c : g) out.push_back(c.scaled(inv));
        return out;
    }
    Grid out;
    for (const auto& c : g) {
        if (c.is_zero()) {
            out.push_back(c);
            continue;
        }
        auto q = UniPoly::divexact(c, content);
        if (!q) throw InternalError("content division not exact");
        out.push_back(*q);
    }
    return out;
}

// gcd in (Q(delta)(x))[y] by plain Euclid on rational-function coefficients,
// result cleared of denominators and made primitive.
Grid grid_pp_gcd(const Grid& a, const Grid& b, unsigned L) {
    std::vector<std::vector<RatFun>> rs;
    auto lift = [](const Grid& g) {
        std::vector<RatFun> v;
        v.reserve(g.size());
        for (const auto& c : g) v.push_back(RatFun::from_poly(c));
        return v;
    };
    std::vector<RatFun> ra = lift(a), rb = lift(b);
    auto prune = [](std::vector<RatFun>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    prune(ra);
    prune(rb);
    while (!rb.empty()) {
        // ra mod rb
        std::vector<RatFun> r = ra;
        if (r.size() >= rb.size()) {
            for (std::size_t k = r.size() - rb.size() + 1; k-- > 0;) {
                RatFun c = r[rb.size() - 1 + k] / rb.back();
                if (!c.is_zero())
                    for (std::size_t i = 0; i < rb.size(); ++i)
                        r[i + k] = r[i + k] - c * rb[i];
            }
        }
        prune(r);
        ra = std::move(rb);
        rb = std::move(r);
    }
    // clear denominators of ra
    UniPoly common = UniPoly::constant(CycElem::one(L));
    for (const RatFun& c : ra) {
        if (c.is_zero()) continue;
        UniPoly g = UniPoly::gcd(common, c.den());
        common = *UniPoly::divexact(common * c.den(), g);
    }
    Grid out;
    for (const RatFun& c : ra) {
        if (c.is_zero()) {
            out.push_back(UniPoly(L));
            continue;
        }
        out.push_back(c.num() * *UniPoly::divexact(common, c.den()));
    }
    UniPoly cont = grid_content(out);
    out = grid_divexact_content(out, cont);
    return out;
}

Grid grid_gcd(const Grid& a, const Grid& b, unsigned L) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    UniPoly ca = grid_content(a), cb = grid_content(b);
    Grid pa = grid_divexact_content(a, ca);
    Grid pb = grid_divexact_content(b, cb);
    Grid pg = grid_pp_gcd(pa, pb, L);
    UniPoly cg = UniPoly::gcd(ca, cb);
    Grid out;
    for (const auto& c : pg) out.push_back(c * cg);
    return out;
}

bool grid_is_constant(const Grid& g) {
    return g.size() == 1 && g[0].degree() == 0;
}

}  // namespace

PuiseuxPoly gcd_conjugates(const std::vector<PuiseuxPoly>& polys) {
    if (polys.empty()) throw DomainError("gcd_conjugates: empty family");
    unsigned mm = 1, L = 1;
    for (const auto& p : polys) {
        if (p.is_zero()) throw DomainError("gcd_conjugates: zero element");
        mm = lcm_u(mm, p.m());
        L = lcm_u(L, p.field_order());
    }
    Grid acc = to_grid(polys.front(), mm, L);
    for (std::size_t k = 1; k < polys.size() && !grid_is_constant(acc); ++k)
        acc = grid_gcd(acc, to_grid(polys[k], mm, L), L);

    // Extract the monomial part x^alpha y^beta.
    std::size_t beta = 0;
    while (beta < acc.size() && acc[beta].is_zero()) ++beta;
    if (beta == acc.size()) throw InternalError("gcd of nonzero polynomials is zero");
    long long alpha = -1;
    for (std::size_t j = beta; j < acc.size(); ++j) {
        const auto& cs = acc[j].coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (!cs[i].is_zero()) {
                alpha = alpha < 0 ? static_cast<long long>(i)
                                  : std::min<long long>(alpha, static_cast<long long>(i));
                break;
            }
        }
    }
    // h = acc / (x^alpha y^beta); support must lie in (mZ)^2.
    std::vector<std::pair<Exp2, CycElem>> terms;
    for (std::size_t j = beta; j < acc.size(); ++j) {
        const auto& cs = acc[j].coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (cs[i].is_zero()) continue;
            long long hi = static_cast<long long>(i) - alpha;
            long long hj = static_cast<long long>(j - beta);
            if (hi % mm != 0 || hj % mm != 0)
                throw InternalError(
                    "gcd_conjugates: gcd is not unit-equivalent to an element of R");
            terms.push_back({{hi + mm * (alpha / mm), hj + mm * (static_cast<long long>(beta) / mm)},
                             cs[i]});
        }
    }
    PuiseuxPoly h = PuiseuxPoly::from_terms(mm, L, terms);
    // leading coefficient 1 under graded lex with X > Y
    Exp2 lead{-1, -1};
    for (const auto& [e, c] : h.terms()) {
        if (lead.i < 0 || e.i + e.j > lead.i + lead.j ||
            (e.i + e.j == lead.i + lead.j && e.i > lead.i))
            lead = e;
    }
    return h.scaled(h.terms().at(lead).inverse());
}

// ---------------------------------------------------------------------------
// SurfacePoly

SurfacePoly SurfacePoly::from_coeff(unsigned long zdeg, const PuiseuxPoly& c) {
    SurfacePoly f;
    if (!c.is_zero()) f.coeffs_.emplace(zdeg, c);
    return f;
}

SurfacePoly SurfacePoly::z_power(unsigned long n, unsigned field_order) {
    return from_coeff(n, PuiseuxPoly::constant(CycElem::one(field_order)));
}

void SurfacePoly::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero())
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

unsigned long SurfacePoly::degree() const {
    if (coeffs_.empty()) throw DomainError("degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

PuiseuxPoly SurfacePoly::coeff(unsigned long k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? PuiseuxPoly::zero(field_order()) : it->second;
}

const PuiseuxPoly& SurfacePoly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return coeffs_.rbegin()->second;
}

bool SurfacePoly::is_monic() const {
    if (coeffs_.empty()) return false;
    auto c = leading().as_constant();
    return c.has_value() && c->is_one();
}

unsigned SurfacePoly::m() const {
    unsigned mm = 1;
    for (const auto& [k, c] : coeffs_) mm = lcm_u(mm, c.m());
    return mm;
}

unsigned SurfacePoly::field_order() const {
    unsigned L = 1;
    for (const auto& [k, c] : coeffs_) L = lcm_u(L, c.field_order());
    return L;
}

SurfacePoly SurfacePoly::operator-() const {
    SurfacePoly f(*this);
    for (auto& [k, c] : f.coeffs_) c = -c;
    return f;
}

SurfacePoly operator+(const SurfacePoly& a, const SurfacePoly& b) {
    SurfacePoly f(a);
    for (const auto& [k, c] : b.coeffs_) {
        auto it = f.coeffs_.find(k);
        if (it == f.coeffs_.end())
            f.coeffs_.emplace(k, c);
        else
            it->second = it->second + c;
    }
    f.prune();
    return f;
}

SurfacePoly operator-(const SurfacePoly& a, const SurfacePoly& b) { return a + (-b); }

SurfacePoly operator*(const SurfacePoly& a, const SurfacePoly& b) {
    SurfacePoly f;
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            PuiseuxPoly p = ca * cb;
            auto it = f.coeffs_.find(ka + kb);
            if (it == f.coeffs_.end())
                f.coeffs_.emplace(ka + kb, std::move(p));
            else
                it->second = it->second + p;
        }
    }
    f.prune();
    return f;
}

SurfacePoly SurfacePoly::scaled(const PuiseuxPoly& c) const {
    SurfacePoly f;
    for (const auto& [k, x] : coeffs_) {
        PuiseuxPoly p = x * c;
        if (!p.is_zero()) f.coeffs_.emplace(k, std::move(p));
    }
    return f;
}

SurfacePoly SurfacePoly::pow(unsigned long e) const {
    SurfacePoly acc = SurfacePoly::from_coeff(0, PuiseuxPoly::constant(CycElem::one(field_order())));
    SurfacePoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

PuiseuxPoly SurfacePoly::eval(const PuiseuxPoly& zeta) const {
    if (coeffs_.empty()) return PuiseuxPoly::zero(zeta.field_order());
    PuiseuxPoly acc = PuiseuxPoly::zero(lcm_u(field_order(), zeta.field_order()));
    unsigned long prev = 0;
    bool first = true;
    // Horner from the top coefficient down.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (first) {
            acc = it->second;
            prev = it->first;
            first = false;
            continue;
        }
        acc = acc * zeta.pow(prev - it->first) + it->second;
        prev = it->first;
    }
    if (prev > 0) acc = acc * zeta.pow(prev);
    return acc;
}

Rat SurfacePoly::weighted_order() const {
    if (coeffs_.empty()) throw DomainError("order of zero polynomial");
    bool first = true;
    Rat best;
    for (const auto& [k, c] : coeffs_) {
        Rat o = c.order() + Rat(static_cast<long>(k));
        if (first || o < best) {
            best = o;
            first = false;
        }
    }
    return best;
}

SurfacePoly SurfacePoly::initial_form() const {
    Rat w = weighted_order();
    SurfacePoly f;
    for (const auto& [k, c] : coeffs_) {
        Rat rem = w - Rat(static_cast<long>(k));
        if (rem > 0 || rem == 0) {
            // keep the part of c with order exactly rem
            std::vector<std::pair<Exp2, CycElem>> keep;
            for (const auto& [e, coef] : c.terms())
                if (make_rat(e.i + e.j, static_cast<long long>(c.m())) == rem)
                    keep.push_back({e, coef});
            if (!keep.empty())
                f.coeffs_.emplace(k, PuiseuxPoly::from_terms(c.m(), c.field_order(), keep));
        }
    }
    return f;
}

bool SurfacePoly::operator==(const SurfacePoly& other) const {
    if (coeffs_.size() != other.coeffs_.size()) return false;
    auto ia = coeffs_.begin();
    auto ib = other.coeffs_.begin();
    for (; ia != coeffs_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

}  // namespace puiseux
