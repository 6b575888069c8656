#include "puiseux/parser.hpp"

#include <cctype>
#include <memory>
#include <numeric>
#include <set>

namespace puiseux {

namespace {

// Coefficient expression tree, evaluated once the session field is known.
struct CNode {
    enum class Kind { lit, i_unit, rou, neg, add, sub, mul };
    Kind kind;
    Rat lit;
    long rou_order = 1, rou_exp = 0;
    std::shared_ptr<CNode> a, b;
};
using CPtr = std::shared_ptr<CNode>;

CPtr make_lit(Rat r) {
    auto n = std::make_shared<CNode>();
    n->kind = CNode::Kind::lit;
    n->lit = std::move(r);
    return n;
}

CPtr make_node(CNode::Kind k, CPtr a, CPtr b) {
    auto n = std::make_shared<CNode>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

CycElem eval_cnode(const CNode& n, unsigned L) {
    switch (n.kind) {
        case CNode::Kind::lit: return CycElem::from_rational(L, n.lit);
        case CNode::Kind::i_unit: return CycElem::delta_pow(L, static_cast<long>(L) / 4);
        case CNode::Kind::rou:
            return CycElem::delta_pow(L, (static_cast<long>(L) / n.rou_order) * n.rou_exp);
        case CNode::Kind::neg: return -eval_cnode(*n.a, L);
        case CNode::Kind::add: return eval_cnode(*n.a, L) + eval_cnode(*n.b, L);
        case CNode::Kind::sub: return eval_cnode(*n.a, L) - eval_cnode(*n.b, L);
        case CNode::Kind::mul: return eval_cnode(*n.a, L) * eval_cnode(*n.b, L);
    }
    throw InternalError("unreachable coefficient node");
}

struct TermAst {
    bool negative = false;
    std::vector<CPtr> coef_factors;
    // accumulated monomial exponents as reduced fractions
    Rat x_exp = Rat(0), y_exp = Rat(0);
    long long z_exp = 0;
};

class Parser {
public:
    Parser(const std::string& text, bool allow_z) : s_(text), allow_z_(allow_z) {}

    std::vector<TermAst> parse() {
        std::vector<TermAst> terms;
        skip_ws();
        bool neg = eat_sign();
        for (;;) {
            TermAst t = parse_term();
            t.negative = neg;
            terms.push_back(std::move(t));
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (c == '+' || c == '-') {
                ++pos_;
                neg = c == '-';
                continue;
            }
            fail("expected '+' or '-'");
        }
        return terms;
    }

    const std::set<long>& root_orders() const { return root_orders_; }
    bool saw_i() const { return saw_i_; }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat_sign() {
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-'))
            return s_[pos_++] == '-';
        return false;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Int parse_nat() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return Int(s_.substr(start, pos_ - start));
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) neg = s_[pos_++] == '-';
        Int n = parse_nat();
        if (!n.fits_slong_p()) fail("integer literal too large");
        long v = n.get_si();
        return neg ? -v : v;
    }

    TermAst parse_term() {
        TermAst t;
        bool any = false;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (c == 'X' || c == 'Y' || (allow_z_ && c == 'Z')) {
                parse_mono(t);
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'i' ||
                       c == 'r') {
                t.coef_factors.push_back(parse_coef_atom());
            } else if (c == 'Z') {
                fail("Z is not allowed in a series expression");
            } else {
                break;
            }
            any = true;
            // the '*' between factors is optional
            if (peek_is('*')) ++pos_;
        }
        if (!any) fail("expected a term");
        return t;
    }

    void parse_mono(TermAst& t) {
        char var = s_[pos_++];
        Rat e(1);
        if (peek_is('^')) {
            ++pos_;
            e = parse_exponent();
        }
        if (var == 'X')
            t.x_exp += e;
        else if (var == 'Y')
            t.y_exp += e;
        else {
            if (e.get_den() != 1) fail("Z exponent must be an integer");
            t.z_exp += e.get_num().get_si();
        }
    }

    Rat parse_exponent() {
        skip_ws();
        if (peek_is('(')) {
            ++pos_;
            skip_ws();
            bool neg = false;
            if (pos_ < s_.size() && s_[pos_] == '-') {
                neg = true;
                ++pos_;
            }
            Int p = parse_nat();
            expect('/');
            Int q = parse_nat();
            expect(')');
            if (q == 0) fail("exponent denominator is zero");
            if (neg) fail("negative exponent");
            return make_rat(p, q);
        }
        if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
        Int p = parse_nat();
        return make_rat(p, Int(1));
    }

    CPtr parse_coef_atom() {
        skip_ws();
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int p = parse_nat();
            if (peek_is('/')) {
                ++pos_;
                Int q = parse_nat();
                if (q == 0) fail("coefficient denominator is zero");
                return make_lit(make_rat(p, q));
            }
            return make_lit(make_rat(p, Int(1)));
        }
        if (c == 'i') {
            ++pos_;
            saw_i_ = true;
            auto n = std::make_shared<CNode>();
            n->kind = CNode::Kind::i_unit;
            return n;
        }
        if (c == 'r') {
            if (s_.compare(pos_, 4, "rou(") != 0) fail("expected rou(");
            pos_ += 4;
            Int k = parse_nat();
            expect(',');
            long e = parse_int();
            expect(')');
            if (k == 0 || !k.fits_slong_p()) fail("root order must be a positive integer");
            long ord = k.get_si();
            long red = ((e % ord) + ord) % ord;
            long g = std::gcd(red, ord);
            if (red == 0) return make_lit(Rat(1));
            auto n = std::make_shared<CNode>();
            n->kind = CNode::Kind::rou;
            n->rou_order = ord / g;
            n->rou_exp = red / g;
            root_orders_.insert(n->rou_order);
            return n;
        }
        if (c == '(') {
            ++pos_;
            CPtr e = parse_coef_expr();
            expect(')');
            return e;
        }
        fail("expected a coefficient");
    }

    CPtr parse_coef_expr() {
        bool neg = eat_sign();
        CPtr acc = parse_coef_term();
        if (neg) acc = make_node(CNode::Kind::neg, std::move(acc), nullptr);
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (c == '+' || c == '-') {
                ++pos_;
                CPtr rhs = parse_coef_term();
                acc = make_node(c == '+' ? CNode::Kind::add : CNode::Kind::sub, std::move(acc),
                                std::move(rhs));
                continue;
            }
            break;
        }
        return acc;
    }

    CPtr parse_coef_term() {
        CPtr acc = parse_coef_atom();
        for (;;) {
            skip_ws();
            if (peek_is('*')) {
                ++pos_;
                CPtr rhs = parse_coef_atom();
                acc = make_node(CNode::Kind::mul, std::move(acc), std::move(rhs));
                continue;
            }
            break;
        }
        return acc;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    bool allow_z_;
    std::set<long> root_orders_;
    bool saw_i_ = false;
};

struct Materialized {
    Session session;
    // per term: z exponent, x/y exponents against session m, coefficient
    struct Term {
        long long z;
        Exp2 e;
        CycElem c;
    };
    std::vector<Term> terms;
};

Materialized materialize(const std::string& text, bool allow_z, unsigned max_root_order) {
    Parser parser(text, allow_z);
    std::vector<TermAst> ast = parser.parse();

    // session m: lcm of reduced exponent denominators
    unsigned long m = 1;
    for (const TermAst& t : ast) {
        Int dx = t.x_exp.get_den(), dy = t.y_exp.get_den();
        if (!dx.fits_ulong_p() || !dy.fits_ulong_p())
            throw GuardrailError("exponent denominator too large");
        m = std::lcm(m, dx.get_ui());
        m = std::lcm(m, dy.get_ui());
        if (m > 1000000ul) throw GuardrailError("session denominator too large");
    }
    unsigned long L = m;
    for (long k : parser.root_orders()) L = std::lcm(L, static_cast<unsigned long>(k));
    if (parser.saw_i()) L = std::lcm(L, 4ul);
    if (L > max_root_order)
        throw GuardrailError("session root order " + std::to_string(L) +
                             " exceeds the configured bound " + std::to_string(max_root_order));

    Materialized out;
    out.session = {static_cast<unsigned>(m), static_cast<unsigned>(L)};
    for (const TermAst& t : ast) {
        CycElem c = CycElem::one(static_cast<unsigned>(L));
        for (const CPtr& f : t.coef_factors) c = c * eval_cnode(*f, static_cast<unsigned>(L));
        if (t.negative) c = -c;
        Rat xs = t.x_exp * Rat(static_cast<long>(m));
        Rat ys = t.y_exp * Rat(static_cast<long>(m));
        Exp2 e{xs.get_num().get_si(), ys.get_num().get_si()};
        out.terms.push_back({t.z_exp, e, std::move(c)});
    }
    return out;
}

}  // namespace

ParsedSeries parse_series(const std::string& text, unsigned max_root_order) {
    Materialized mat = materialize(text, false, max_root_order);
    std::vector<std::pair<Exp2, CycElem>> terms;
    for (const auto& t : mat.terms) terms.push_back({t.e, t.c});
    return {PuiseuxPoly::from_terms(mat.session.m, mat.session.L, terms), mat.session};
}

ParsedSurfacePoly parse_surface_poly(const std::string& text, unsigned max_root_order) {
    Materialized mat = materialize(text, true, max_root_order);
    std::map<long long, std::vector<std::pair<Exp2, CycElem>>> by_z;
    for (const auto& t : mat.terms) by_z[t.z].push_back({t.e, t.c});
    SurfacePoly F;
    for (const auto& [z, terms] : by_z) {
        PuiseuxPoly c = PuiseuxPoly::from_terms(mat.session.m, mat.session.L, terms);
        if (!c.is_zero())
            F = F + SurfacePoly::from_coeff(static_cast<unsigned long>(z), c);
    }
    return {F, mat.session};
}

CycElem parse_coefficient(const std::string& text, unsigned max_root_order) {
    ParsedSeries p = parse_series(text, max_root_order);
    auto c = p.value.as_constant();
    if (!c) throw ParseError("expected a constant coefficient expression", 0);
    return *c;
}

}  // namespace puiseux
