#ifndef PUISEUX_PARSER_HPP
#define PUISEUX_PARSER_HPP

#include <string>

#include "puiseux/series.hpp"

namespace puiseux {

struct Session {
    unsigned m = 1;  // lcm of the written exponent denominators (reduced)
    unsigned L = 1;  // lcm(m, coefficient root orders, 4 if i appears)
};

struct ParsedSeries {
    PuiseuxPoly value;
    Session session;
};

struct ParsedSurfacePoly {
    SurfacePoly value;
    Session session;
};

// Grammar (whitespace free between tokens):
//   series   := [sign] term { ('+'|'-') term }
//   term     := factor { '*' factor }          at least one factor
//   factor   := coef-atom | mono
//   mono     := ('X'|'Y') ['^' exponent]       (also Z in poly mode)
//   exponent := nat | '(' nat '/' nat ')'
//   coef-atom:= nat ['/' nat] | 'i' | 'rou' '(' nat ',' int ')'
//             | '(' coef-expr ')'
//   coef-expr:= [sign] coef-term { ('+'|'-') coef-term }
//   coef-term:= coef-atom { '*' coef-atom }
// Exponents of X and Y are nonnegative rationals; Z takes nonnegative
// integers. Parse errors carry the offending position; a negative exponent
// and a zero denominator are rejected.
ParsedSeries parse_series(const std::string& text, unsigned max_root_order = 360);

// Same grammar with Z monomials allowed.
ParsedSurfacePoly parse_surface_poly(const std::string& text, unsigned max_root_order = 360);

// A single coefficient expression (used for --xi/--eta style flags).
CycElem parse_coefficient(const std::string& text, unsigned max_root_order = 360);

}  // namespace puiseux

#endif
