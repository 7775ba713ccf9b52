#pragma once

#include <cstdint>
#include <vector>

#include "csurg/geom/chart.hpp"

namespace csurg::twist {

using geom::Mat;
using geom::Vec;

// A point of T*S^n inside R^{n+1} x R^{n+1}.
struct CotangentPoint {
  Vec u;  // unit base point
  Vec v;  // cotangent fiber coordinate, orthogonal to u
};

inline constexpr double kPointTolerance = 1e-10;
inline constexpr double kZeroFiber = 1e-12;

// Validates |‖u‖ - 1| <= 1e-10 and |<u, v>| <= 1e-10.
CotangentPoint make_cotangent_point(Vec u, Vec v);

// Normalises u and removes the u-component of v.
CotangentPoint retract(const Vec& u, const Vec& v);

// Largest constraint violation, max(|‖u‖ - 1|, |<u, v>|).
double constraint_residual(const CotangentPoint& p);

int base_dim(const CotangentPoint& p);

Vec stack(const CotangentPoint& p);
CotangentPoint unstack(const Vec& x);

// Seeded points with ‖v‖ uniform in [min_fiber, max_fiber].
std::vector<CotangentPoint> random_cotangent_points(int n, std::size_t count, std::uint64_t seed,
                                                    double min_fiber, double max_fiber);

}  // namespace csurg::twist
