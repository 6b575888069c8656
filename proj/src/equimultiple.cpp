#include "puiseux/equimultiple.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace puiseux {

bool is_equimultiple_criterion(const PuiseuxPoly& zeta, const PuiseuxPoly& c) {
    if (zeta.is_zero()) throw DomainError("is_equimultiple_criterion: zero series");
    if (zeta.order() < 1)
        throw DomainError(
            "is_equimultiple_criterion: series is non-transversal; use classify_nontransversal");
    if (c.is_zero() || !c.is_integral() || c.is_constant())
        throw DomainError("is_equimultiple_criterion: candidate must be a non-unit element of R");
    return exact_divide(zeta, c).has_value();
}

bool is_equimultiple_oracle(const SurfacePoly& F, const PuiseuxPoly& c, long long mult) {
    if (F.is_zero()) throw DomainError("is_equimultiple_oracle: zero polynomial");
    if (c.is_zero() || !c.is_integral())
        throw DomainError("is_equimultiple_oracle: candidate must be a nonzero element of R");
    for (long long k = 0; k < mult; ++k) {
        PuiseuxPoly bk = F.coeff(static_cast<unsigned long>(k));
        if (bk.is_zero()) continue;
        PuiseuxPoly ck = c.pow(static_cast<unsigned long>(mult - k));
        if (!exact_divide(bk, ck).has_value()) return false;
    }
    return true;
}

NontransversalVerdict classify_nontransversal(const PuiseuxPoly& zeta) {
    if (zeta.is_zero()) throw DomainError("classify_nontransversal: zero series");
    if (zeta.terms().count({0, 0}))
        throw DomainError("classify_nontransversal: series has a constant term");
    if (!(zeta.order() < 1))
        throw DomainError("classify_nontransversal: series is transversal");
    NontransversalVerdict v;
    long long min_i = -1, min_j = -1;
    for (const auto& [e, c] : zeta.terms()) {
        min_i = min_i < 0 ? e.i : std::min(min_i, e.i);
        min_j = min_j < 0 ? e.j : std::min(min_j, e.j);
    }
    if (zeta.terms().count({min_i, 0})) {
        v.axis_form = true;
        v.axis = 'X';
        v.lambda = make_rat(min_i, zeta.m());
        return v;
    }
    if (zeta.terms().count({0, min_j})) {
        v.axis_form = true;
        v.axis = 'Y';
        v.lambda = make_rat(min_j, zeta.m());
        return v;
    }
    v.axis_form = false;
    return v;
}

namespace {

// Split an integral, non-constant divisor into X/Y powers, linear forms
// X - beta Y found over the session field, and a composite leftover.
std::vector<CurvePrime> split_divisor(const PuiseuxPoly& divisor) {
    std::vector<CurvePrime> out;
    PuiseuxPoly rest = divisor;
    const unsigned L = rest.field_order();

    long long min_i = -1, min_j = -1;
    for (const auto& [e, c] : rest.terms()) {
        min_i = min_i < 0 ? e.i : std::min(min_i, e.i);
        min_j = min_j < 0 ? e.j : std::min(min_j, e.j);
    }
    PuiseuxPoly X = PuiseuxPoly::variable_x(1), Y = PuiseuxPoly::variable_y(1);
    if (min_i > 0) {
        out.push_back({X, false});
        rest = *exact_divide(rest, X.pow(static_cast<unsigned long>(min_i)));
    }
    if (min_j > 0) {
        out.push_back({Y, false});
        rest = *exact_divide(rest, Y.pow(static_cast<unsigned long>(min_j)));
    }
    if (rest.is_constant()) return out;

    // Linear factors through the origin must divide the initial form.
    PuiseuxPoly init = rest.initial_form();
    long long ideg = -1, imin = -1;
    for (const auto& [e, c] : init.terms()) {
        ideg = std::max(ideg, e.i + e.j);
        imin = imin < 0 ? e.i : std::min(imin, e.i);
    }
    std::vector<CycElem> pc(static_cast<std::size_t>(ideg - imin) + 1, CycElem::zero(L));
    for (const auto& [e, c] : init.terms())
        pc[static_cast<std::size_t>(e.i - imin)] = c.embedded(L);
    UniPoly P(L, std::move(pc));
    if (P.degree() >= 1) {
        UniPoly sf = P.monic();
        // squarefree part only; multiplicities come from repeated division
        for (const auto& [s, k] : squarefree_decompose(sf)) {
            (void)k;
            for (const CycElem& beta : known_field_roots(s).roots) {
                PuiseuxPoly lin = X - Y.scaled(beta);
                bool took = false;
                while (auto q = exact_divide(rest, lin)) {
                    rest = *q;
                    took = true;
                }
                if (took) out.push_back({lin, false});
            }
        }
    }
    if (!rest.is_constant()) {
        if (rest.terms().count({0, 0}) == 0)
            out.push_back({rest.scaled(rest.terms().rbegin()->second.inverse()), true});
        // A leftover with a nonzero constant term is a unit of R: no curve.
    }
    return out;
}

}  // namespace

EquimultipleReport find_equimultiple(const PuiseuxPoly& zeta) {
    if (zeta.is_zero()) throw DomainError("find_equimultiple: zero series");
    EquimultipleReport rep;
    if (zeta.order() >= 1) {
        rep.transversal = true;
        rep.max_divisor = gcd_conjugates(orbit(zeta));
        if (!rep.max_divisor.is_constant()) rep.curves = split_divisor(rep.max_divisor);
        return rep;
    }
    rep.transversal = false;
    rep.max_divisor = PuiseuxPoly::constant(CycElem::one(zeta.field_order()));
    NontransversalVerdict v = classify_nontransversal(zeta);
    rep.verdict = v;
    if (v.axis_form) {
        PuiseuxPoly axis =
            v.axis == 'X' ? PuiseuxPoly::variable_x(1) : PuiseuxPoly::variable_y(1);
        rep.curves.push_back({axis, false});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// transversalization

namespace {

// Truncated exact series in two grid variables with orders w1 = e1/d1,
// w2 = e2/d2; terms of combined order >= precision are dropped.
struct TGrid {
    unsigned L = 1;
    long long d1 = 1, d2 = 1;
    Rat prec;
    std::map<std::pair<long long, long long>, CycElem> terms;

    Rat ord(long long e1, long long e2) const {
        return make_rat(e1 * d2 + e2 * d1, d1 * d2);
    }

    void put(long long e1, long long e2, const CycElem& c) {
        if (c.is_zero()) return;
        if (!(ord(e1, e2) < prec)) return;
        auto key = std::make_pair(e1, e2);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    static TGrid constant(unsigned L, long long d1, long long d2, Rat prec, const CycElem& c) {
        TGrid g{L, d1, d2, std::move(prec), {}};
        g.put(0, 0, c.embedded(L));
        return g;
    }

    bool is_zero() const { return terms.empty(); }

    TGrid add(const TGrid& o) const {
        TGrid g(*this);
        for (const auto& [e, c] : o.terms) g.put(e.first, e.second, c);
        return g;
    }

    TGrid sub(const TGrid& o) const {
        TGrid g(*this);
        for (const auto& [e, c] : o.terms) g.put(e.first, e.second, -c);
        return g;
    }

    TGrid mul(const TGrid& o) const {
        TGrid g{L, d1, d2, prec, {}};
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : o.terms)
                g.put(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return g;
    }

    TGrid scale(const CycElem& c) const {
        TGrid g{L, d1, d2, prec, {}};
        for (const auto& [e, x] : terms) g.put(e.first, e.second, x * c);
        return g;
    }

    TGrid pow(unsigned long n) const {
        TGrid acc = constant(L, d1, d2, prec, CycElem::one(L));
        TGrid base = *this;
        while (n) {
            if (n & 1) acc = acc.mul(base);
            n >>= 1;
            if (n) base = base.mul(base);
        }
        return acc;
    }

    // Inverse of a unit (nonzero constant term, all other terms of positive
    // order) via the geometric series.
    TGrid inverse() const {
        auto it = terms.find({0, 0});
        if (it == terms.end()) throw DomainError("inverting a non-unit series");
        CycElem c0 = it->second;
        CycElem c0inv = c0.inverse();
        TGrid w(*this);
        w.terms.erase({0, 0});
        w = w.scale(c0inv);  // this/c0 = 1 + w
        TGrid acc = constant(L, d1, d2, prec, CycElem::one(L));
        TGrid term = constant(L, d1, d2, prec, CycElem::one(L));
        while (true) {
            term = term.mul(w).scale(CycElem::from_rational(L, Rat(-1)));
            if (term.is_zero()) break;
            acc = acc.add(term);
        }
        return acc.scale(c0inv);
    }

    bool operator==(const TGrid& o) const { return terms == o.terms; }
};

// mu-th root of a rational times delta^e, if one of that shape exists.
std::optional<CycElem> field_nth_root(const CycElem& c, unsigned long mu) {
    const unsigned L = c.order();
    if (mu == 1) return c;
    for (unsigned e = 0; e < L; ++e) {
        CycElem twisted = c * CycElem::delta_pow(L, -static_cast<long>(e * mu));
        auto r = twisted.as_rational();
        if (!r || *r == 0) continue;
        Int num = r->get_num(), den = r->get_den();
        bool neg = num < 0;
        if (neg && mu % 2 == 0) continue;
        Int an = abs(num);
        Int rn, rd;
        if (mpz_root(rn.get_mpz_t(), an.get_mpz_t(), mu) &&
            mpz_root(rd.get_mpz_t(), den.get_mpz_t(), mu)) {
            if (neg) rn = -rn;
            return CycElem::from_rational(L, make_rat(rn, rd)) *
                   CycElem::delta_pow(L, static_cast<long>(e));
        }
    }
    return std::nullopt;
}

struct Parametrization {
    TGrid xhat;       // x = t G(y, t)
    unsigned L;
    long long m, mu;
    PuiseuxPoly zeta;  // possibly axis-swapped
    bool swapped;
};

Parametrization invert_parametrization(const PuiseuxPoly& zeta_in, const Rat& precision) {
    if (!(precision > 0)) throw DomainError("transversalize: precision must be positive");
    NontransversalVerdict v = classify_nontransversal(zeta_in);
    if (!v.axis_form)
        throw DomainError("transversalize: series is not of the form X^lambda * unit");
    bool swapped = v.axis == 'Y';
    PuiseuxPoly zeta = zeta_in;
    if (swapped) {
        std::vector<std::pair<Exp2, CycElem>> t;
        for (const auto& [e, c] : zeta_in.terms()) t.push_back({{e.j, e.i}, c});
        zeta = PuiseuxPoly::from_terms(zeta_in.m(), zeta_in.field_order(), t);
    }

    const long long m = zeta.m();
    const Rat mu_rat = v.lambda * Rat(static_cast<long>(m));
    const long long mu = mu_rat.get_num().get_si();
    const unsigned L = lcm_u(zeta.field_order(), static_cast<unsigned>(m));
    // Internal working precision, in the (Z, Y)-order scale of eta.
    const Rat iprec = precision + Rat(2);

    // u(x, y) = zeta / x^mu, a polynomial with u(0,0) != 0.
    CycElem c0 = CycElem::zero(L);
    std::vector<std::pair<Exp2, CycElem>> uterms;
    for (const auto& [e, c] : zeta.terms()) uterms.push_back({{e.i - mu, e.j}, c});
    for (const auto& [e, c] : uterms)
        if (e.i == 0 && e.j == 0) c0 = c.embedded(L);
    auto root = field_nth_root(c0, static_cast<unsigned long>(mu));
    if (!root)
        throw DomainError(
            "transversalize: u(0,0) has no mu-th root of the form rational * root of unity "
            "in the session field Q(delta_" +
            std::to_string(L) + ")");

    // u as a series in the (x, y) grid: both weights 1/m.
    TGrid u{L, m, m, iprec, {}};
    for (const auto& [e, c] : uterms) u.put(e.i, e.j, c.embedded(L));

    // u' = root * (1 + w)^{1/mu} by the binomial series.
    TGrid w = u.scale(c0.inverse());
    w.terms.erase({0, 0});
    TGrid uprime = TGrid::constant(L, m, m, iprec, CycElem::one(L));
    TGrid wpow = TGrid::constant(L, m, m, iprec, CycElem::one(L));
    Rat binom(1);
    for (unsigned long k = 1;; ++k) {
        wpow = wpow.mul(w);
        if (wpow.is_zero()) break;
        // C(1/mu, k) = C(1/mu, k-1) * (1/mu - (k-1)) / k
        binom *= (make_rat(1, mu) - Rat(static_cast<long>(k - 1))) / Rat(static_cast<long>(k));
        uprime = uprime.add(wpow.scale(CycElem::from_rational(L, binom)));
    }
    uprime = uprime.scale(*root);

    // Substitute a (t, y) series for x in the (x, y) series p.
    auto subst_x = [&](const TGrid& p, const TGrid& xh) {
        // gather by x-degree: p = sum_i row_i(y) x^i
        std::map<long long, std::vector<std::pair<long long, CycElem>>> rows;
        for (const auto& [e, c] : p.terms) rows[e.first].push_back({e.second, c});
        TGrid acc{L, mu, m, iprec, {}};
        TGrid xpow = TGrid::constant(L, mu, m, iprec, CycElem::one(L));
        long long cur = 0;
        for (const auto& [i, row] : rows) {
            while (cur < i) {
                xpow = xpow.mul(xh);
                ++cur;
            }
            TGrid rowg{L, mu, m, iprec, {}};
            for (const auto& [j, c] : row) rowg.put(0, j, c);
            acc = acc.add(rowg.mul(xpow));
        }
        return acc;
    };

    // Fixed point: xhat <- t / u'(xhat, y), starting at xhat = t / root-free
    TGrid t_only{L, mu, m, iprec, {}};
    t_only.put(1, 0, CycElem::one(L));
    TGrid xhat = t_only.scale(root->inverse());
    for (int iter = 0;; ++iter) {
        TGrid next = t_only.mul(subst_x(uprime, xhat).inverse());
        if (next == xhat) break;
        xhat = next;
        if (iter > 2000) throw InternalError("transversalize: fixed point did not converge");
    }
    return {std::move(xhat), L, m, mu, std::move(zeta), swapped};
}

PuiseuxPoly grid_to_poly(const TGrid& g, long long d1, long long d2,
                         const std::string& v1, const std::string& v2) {
    const long long mm = std::lcm(d1, d2);
    std::vector<std::pair<Exp2, CycElem>> terms;
    for (const auto& [e, c] : g.terms)
        terms.push_back({{e.first * (mm / d1), e.second * (mm / d2)}, c});
    return PuiseuxPoly::from_terms(static_cast<unsigned>(mm), g.L, terms)
        .with_var_names(v1, v2);
}

}  // namespace

TruncatedSeries transversalize_parametrization(const PuiseuxPoly& zeta, const Rat& precision) {
    Parametrization par = invert_parametrization(zeta, precision);
    TGrid xh = par.xhat;
    // re-truncate to the requested precision
    TGrid cut{xh.L, xh.d1, xh.d2, precision, {}};
    for (const auto& [e, c] : xh.terms) cut.put(e.first, e.second, c);
    return {grid_to_poly(cut, par.mu, par.m, "T", par.swapped ? "X" : "Y"), precision};
}

TruncatedSeries transversalize(const PuiseuxPoly& zeta, const Rat& precision) {
    Parametrization par = invert_parametrization(zeta, precision);
    // eta = (t G)^m = xhat^m, then t = Z^{1/mu}
    TGrid eta_grid = par.xhat.pow(static_cast<unsigned long>(par.m));
    TGrid cut{eta_grid.L, eta_grid.d1, eta_grid.d2, precision, {}};
    for (const auto& [e, c] : eta_grid.terms) cut.put(e.first, e.second, c);

    // Residual contract: zeta(xhat, y) - t^mu vanishes below the precision.
    TGrid zg{par.xhat.L, par.m, par.m, par.xhat.prec, {}};
    for (const auto& [e, c] : par.zeta.terms()) zg.put(e.i, e.j, c.embedded(par.xhat.L));
    std::map<long long, std::vector<std::pair<long long, CycElem>>> rows;
    for (const auto& [e, c] : zg.terms) rows[e.first].push_back({e.second, c});
    TGrid res{par.xhat.L, par.mu, par.m, par.xhat.prec, {}};
    for (const auto& [i, row] : rows) {
        TGrid rowg{par.xhat.L, par.mu, par.m, par.xhat.prec, {}};
        for (const auto& [j, c] : row) rowg.put(0, j, c);
        res = res.add(rowg.mul(par.xhat.pow(static_cast<unsigned long>(i))));
    }
    res.put(par.mu, 0, -CycElem::one(par.xhat.L));
    for (const auto& [e, c] : res.terms)
        if (res.ord(e.first, e.second) < precision)
            throw InternalError("transversalize: residual has a term below the precision bound");

    return {grid_to_poly(cut, par.mu, par.m, "Z", par.swapped ? "X" : "Y"), precision};
}

}  // namespace puiseux
