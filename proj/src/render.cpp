#include "puiseux/render.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace puiseux {

namespace {

// One basis summand of a CycElem: sign-extracted magnitude text.
struct Part {
    bool negative;
    std::string body;
};

std::string rat_abs_str(const Rat& r) {
    Rat a = r < 0 ? Rat(-r) : r;
    std::ostringstream os;
    os << a;
    return os.str();
}

// delta_L^e as a reduced atom; k == 1 or 2 fold into the rational part.
struct Atom {
    int sign = 1;       // from delta_2
    std::string text;   // "", "i" or "rou(k,e)"
};

Atom delta_atom(unsigned L, std::size_t e) {
    Atom a;
    if (e == 0) return a;
    unsigned long g = std::gcd(static_cast<unsigned long>(e), static_cast<unsigned long>(L));
    unsigned long k = L / g, ee = e / g;
    if (k == 1) return a;
    if (k == 2) {
        a.sign = -1;
        return a;
    }
    if (k == 4) {
        a.sign = ee == 3 ? -1 : 1;
        a.text = "i";
        return a;
    }
    a.text = "rou(" + std::to_string(k) + "," + std::to_string(ee) + ")";
    return a;
}

std::vector<Part> cyc_parts(const CycElem& c) {
    std::vector<Part> parts;
    const auto& cs = c.coeffs();
    for (std::size_t e = 0; e < cs.size(); ++e) {
        if (cs[e] == 0) continue;
        Atom at = delta_atom(c.order(), e);
        Rat r = cs[e] * at.sign;
        Part p;
        p.negative = r < 0;
        if (at.text.empty())
            p.body = rat_abs_str(r);
        else if (r == 1 || r == -1)
            p.body = at.text;
        else
            p.body = rat_abs_str(r) + "*" + at.text;
        parts.push_back(std::move(p));
    }
    return parts;
}

std::string join_parts(const std::vector<Part>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k == 0)
            out += parts[k].negative ? "-" : "";
        else
            out += parts[k].negative ? " - " : " + ";
        out += parts[k].body;
    }
    return out;
}

// Sign-extracted coefficient for use in front of a monomial.
struct CoefText {
    bool negative = false;
    std::string body;  // "" means coefficient 1
    bool compound = false;
};

CoefText coef_text(const CycElem& c) {
    std::vector<Part> parts = cyc_parts(c);
    CoefText out;
    if (parts.empty()) {
        out.body = "0";
        return out;
    }
    if (parts.size() == 1) {
        out.negative = parts[0].negative;
        out.body = parts[0].body == "1" ? "" : parts[0].body;
        return out;
    }
    out.compound = true;
    out.body = "(" + join_parts(parts) + ")";
    return out;
}

std::string exponent_text(long long num, long long den) {
    long long g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den == 1) return num == 1 ? "" : "^" + std::to_string(num);
    return "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string mono_text(const Exp2& e, unsigned m, const std::string& xname,
                      const std::string& yname) {
    std::string out;
    if (e.i > 0) out += xname + exponent_text(e.i, m);
    if (e.j > 0) {
        if (!out.empty()) out += "*";
        out += yname + exponent_text(e.j, m);
    }
    return out;
}

struct TermText {
    bool negative;
    std::string body;
};

std::vector<TermText> series_terms(const PuiseuxPoly& f, const std::string& zsuffix) {
    std::vector<std::pair<Exp2, CycElem>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        long long da = a.first.i + a.first.j, db = b.first.i + b.first.j;
        if (da != db) return da < db;
        return a.first.i > b.first.i;
    });
    std::vector<TermText> out;
    for (const auto& [e, c] : terms) {
        std::string mono = mono_text(e, f.m(), f.var_names().first, f.var_names().second);
        if (!zsuffix.empty()) {
            if (!mono.empty()) mono += "*";
            mono += zsuffix;
        }
        CoefText ct = coef_text(c);
        TermText t;
        t.negative = ct.negative;
        if (mono.empty())
            t.body = ct.body.empty() ? "1" : ct.body;
        else if (ct.body.empty())
            t.body = mono;
        else
            t.body = ct.body + "*" + mono;
        out.push_back(std::move(t));
    }
    return out;
}

std::string join_terms(const std::vector<TermText>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k == 0)
            out += terms[k].negative ? "-" : "";
        else
            out += terms[k].negative ? " - " : " + ";
        out += terms[k].body;
    }
    return out;
}

}  // namespace

std::string render(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string render(const CycElem& c) { return join_parts(cyc_parts(c)); }

std::string render(const PuiseuxPoly& f) { return join_terms(series_terms(f, "")); }

std::string render(const SurfacePoly& F) {
    if (F.is_zero()) return "0";
    std::vector<TermText> all;
    for (auto it = F.coeffs().rbegin(); it != F.coeffs().rend(); ++it) {
        const auto& [k, c] = *it;
        std::string zs = k == 0 ? "" : "Z" + exponent_text(static_cast<long long>(k), 1);
        for (TermText& t : series_terms(c, zs)) all.push_back(std::move(t));
    }
    return join_terms(all);
}

}  // namespace puiseux
