#ifndef PUISEUX_RENDER_HPP
#define PUISEUX_RENDER_HPP

#include <string>

#include "puiseux/series.hpp"

namespace puiseux {

// Canonical text forms; parse(render(x)) == x. Series terms are ordered by
// ascending total degree, ties by descending X-exponent (the graded-lex X > Y
// reading order); exponents print as reduced fractions.
std::string render(const Rat& r);
std::string render(const CycElem& c);
std::string render(const PuiseuxPoly& f);
std::string render(const SurfacePoly& F);

}  // namespace puiseux

#endif
