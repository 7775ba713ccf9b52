#pragma once

#include <cstddef>
#include <vector>

namespace csurg::geom {

// Smooth step built from exp(-1/x): 0 on (-inf,0], 1 on [1,inf), all
// derivatives vanish at both ends, S(1 - x) = 1 - S(x).
double smooth_step(double x);
double smooth_step_derivative(double x);

// Curve (z, t)(s), s in [-1,1], used to round the corners of
// [-eps,eps] x [1/2,1]:
//   z(s)  = eps (1 - 2 S((s+1)/2))
//   t'(s) = 1 - S((s+1)/a) on [-1, -1+a], 0 on [-1+a, 0], odd in s
//   t(s)  = 1/2 + int_{-1}^{s} t'
// Values for s > 0 are mirrored from -s so the symmetry holds exactly.
class RoundingCurve {
 public:
  explicit RoundingCurve(double epsilon, double ramp = 0.5);

  double epsilon() const { return epsilon_; }
  double z(double s) const;
  double t(double s) const;
  double dz(double s) const;
  double dt(double s) const;

 private:
  double t_left(double s) const;   // s <= 0
  double dt_left(double s) const;  // s <= 0

  double epsilon_;
  double ramp_;
};

struct CurveSample {
  double s, z, t, dz, dt;
};

// Samples on a grid symmetric about 0 (s_i = -s_{N-1-i} exactly), endpoints
// included. Throws invalid_argument for epsilon <= 0 or samples < 8.
std::vector<CurveSample> rounding_curve(double epsilon, std::size_t samples);

}  // namespace csurg::geom
