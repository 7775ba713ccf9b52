#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "csurg/geom/kernel.hpp"
#include "csurg/twist/cotangent.hpp"

namespace csurg::twist {

// Twist profile: f = pi on [0, eps/4], a smooth step up to 2 pi on
// [eps/4, eps], and 2 pi beyond. All derivatives vanish near 0 and at eps.
class TwistProfile {
 public:
  explicit TwistProfile(double epsilon);

  double epsilon() const { return epsilon_; }
  double operator()(double x) const;
  double derivative(double x) const;

 private:
  double epsilon_;
};

// Throws invalid_argument unless 0 < epsilon < 1.
TwistProfile make_profile(double epsilon);

// tau(u, v) = (cos f u + sin f v/‖v‖, -‖v‖ sin f u + cos f v), f = f(‖v‖);
// tau(u, 0) = (-u, 0).
CotangentPoint apply_twist(const CotangentPoint& p, const TwistProfile& prof);

enum class GeneratorKind { j_u, v_u };

struct SkewGenerator {
  Mat matrix;
  GeneratorKind kind;
};

// A = v̂ u^T - u v̂^T, the rotation generator of the oriented plane (u, v̂).
SkewGenerator plane_generator(const Vec& u, const Vec& v);

// exp(theta A) = I + sin(theta) A + (1 - cos(theta)) A^2, valid since A^3 = -A.
Mat plane_exp(const SkewGenerator& a, double theta);

// General matrix exponential.
Mat expm(const Mat& a);

// Matrix of w -> u × w: the 3-dimensional cross product for n = 2 and the
// imaginary-octonion cross product for n = 6.
SkewGenerator almost_complex_generator(const Vec& u, int n);

// Phi_t(u, v) = (e^{M} u, e^{M} v), M = 2 f(‖v‖) ((1 - t) j_u + t v_u);
// Phi_t(u, 0) = (u, 0).
CotangentPoint isotopy_phi(double t, const CotangentPoint& p, const TwistProfile& prof);

// Psi_t(u, v) = (u, e^{2 t f(‖v‖) j_u} v).
CotangentPoint isotopy_psi(double t, const CotangentPoint& p, const TwistProfile& prof);

using PointMap = std::function<CotangentPoint(const CotangentPoint&)>;

struct PullbackResult {
  geom::SkewMatrixAtPoint pulled;  // F*(-d lambda_can) on the tangent frame at p
  Mat reference;                   // -d lambda_can on the same frame
  double max_deviation = 0.0;
};

// Jacobian by central differences along an orthonormal tangent frame of
// T*S^n at p; inputs are retracted onto T*S^n before F is applied. Throws
// tolerance_exceeded if F moves points off T*S^n by more than 1e-8.
PullbackResult pullback_two_form(const PointMap& map, const CotangentPoint& p,
                                 double step = 1e-5);

enum class IsotopyFamily { phi, psi };

struct ProbeReport {
  double max_displacement = 0.0;
  double t_at_max = 0.0;
  CotangentPoint point_at_max;
  std::vector<double> t_grid;
  std::vector<double> displacement_by_t;  // max over points, per t
};

// Displacement max ‖F_t(p) - p‖ over seeded points with ‖v‖ = 1 and the
// 11-value t grid 0, 0.1, ..., 1.
ProbeReport boundary_displacement_probe(IsotopyFamily family, int n, const TwistProfile& prof,
                                        std::size_t samples, std::uint64_t seed = 0);

}  // namespace csurg::twist
