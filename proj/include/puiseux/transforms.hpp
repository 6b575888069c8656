#ifndef PUISEUX_TRANSFORMS_HPP
#define PUISEUX_TRANSFORMS_HPP

#include <array>
#include <optional>

#include "puiseux/series.hpp"

namespace puiseux {

struct TransformSpec {
    enum class Kind { quadratic, monoidal };
    enum class Chart { X, Y, Z };
    enum class Center { XZ, YZ };  // monoidal only

    Kind kind = Kind::quadratic;
    Chart chart = Chart::Z;
    Center center = Center::XZ;
    // Quadratic only: Z -> Z + xi X + eta Y applied before the transform.
    std::optional<std::pair<CycElem, CycElem>> translation;
    bool validate = false;  // monoidal: check permissibility first
};

// Point blow-up of F in coordinate charts:
//   Z-chart F(XZ, YZ, Z)/Z^mult, X-chart F(X, XY, XZ)/X^mult,
//   Y-chart F(XY, Y, YZ)/Y^mult, mult the order of F.
// F must have integral exponents.
SurfacePoly quadratic_transform(const SurfacePoly& F, const TransformSpec& spec);

// Curve blow-up with center (X,Z) or (Y,Z):
//   center (X,Z): X-chart F(X, Y, XZ)/X^mult, Z-chart F(XZ, Y, Z)/Z^mult.
// Division is exact iff the center is permissible (F in (X,Z)^mult); with
// spec.validate the oracle runs first and a non-permissible center is a
// distinct error.
SurfacePoly monoidal_transform(const SurfacePoly& F, const TransformSpec& spec);

// Invertible linear substitution on (X, Y, Z) with entries in Q(delta_L):
// variable k is replaced by sum_j matrix[k][j] * (X, Y, Z)[j].
// F must have integral exponents.
SurfacePoly linear_change(const SurfacePoly& F, const std::array<std::array<CycElem, 3>, 3>& matrix);

// Convenience: the identity except Z -> Z + xi X + eta Y.
SurfacePoly translate_z(const SurfacePoly& F, const CycElem& xi, const CycElem& eta);

}  // namespace puiseux

#endif
