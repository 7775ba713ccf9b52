#pragma once

#include "csurg/geom/chart.hpp"

namespace csurg::twist {

using geom::Mat;
using geom::Vec;

// Quaternions as (1, i, j, k) components.
Vec quaternion_multiply(const Vec& a, const Vec& b);

// Octonions as pairs of quaternions (a, b) -> (a0..a3, b0..b3), multiplied by
// the Cayley-Dickson rule (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
Vec octonion_multiply(const Vec& a, const Vec& b);
Vec octonion_conjugate(const Vec& a);

// Cross product on imaginary octonions, x × y = Im(x y), for x, y in R^7.
Vec octonion_cross(const Vec& x, const Vec& y);

}  // namespace csurg::twist
