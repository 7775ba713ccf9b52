#include "csurg/geom/rounding.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "csurg/error.hpp"

namespace csurg::geom {

namespace {

double bump(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double bump_derivative(double x) { return x > 0.0 ? std::exp(-1.0 / x) / (x * x) : 0.0; }

}  // namespace

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = bump(x);
  const double b = bump(1.0 - x);
  return a / (a + b);
}

double smooth_step_derivative(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double a = bump(x);
  const double b = bump(1.0 - x);
  const double da = bump_derivative(x);
  const double db = -bump_derivative(1.0 - x);
  const double sum = a + b;
  return (da * sum - a * (da + db)) / (sum * sum);
}

RoundingCurve::RoundingCurve(double epsilon, double ramp) : epsilon_(epsilon), ramp_(ramp) {
  if (!(epsilon > 0.0))
    throw Error(ErrorCode::invalid_argument, "rounding curve needs epsilon > 0");
  if (!(ramp > 0.0 && ramp <= 1.0))
    throw Error(ErrorCode::invalid_argument, "rounding ramp must lie in (0, 1]");
}

double RoundingCurve::z(double s) const {
  if (s > 0.0) return -z(-s);
  return epsilon_ * (1.0 - 2.0 * smooth_step((s + 1.0) / 2.0));
}

double RoundingCurve::dz(double s) const {
  if (s > 0.0) return dz(-s);
  return -epsilon_ * smooth_step_derivative((s + 1.0) / 2.0);
}

double RoundingCurve::dt_left(double s) const { return 1.0 - smooth_step((s + 1.0) / ramp_); }

double RoundingCurve::t_left(double s) const {
  const double upper = std::min(s, -1.0 + ramp_);
  if (upper <= -1.0) return 0.5;
  using boost::math::quadrature::gauss_kronrod;
  const double integral = gauss_kronrod<double, 61>::integrate(
      [this](double x) { return dt_left(x); }, -1.0, upper, 8, 1e-14);
  return 0.5 + integral;
}

double RoundingCurve::t(double s) const { return t_left(-std::abs(s)); }

double RoundingCurve::dt(double s) const {
  if (s > 0.0) return -dt_left(-s);
  return dt_left(s);
}

std::vector<CurveSample> rounding_curve(double epsilon, std::size_t samples) {
  if (samples < 8) throw Error(ErrorCode::invalid_argument, "rounding curve needs >= 8 samples");
  const RoundingCurve curve(epsilon);
  std::vector<CurveSample> out(samples);
  const std::size_t half = (samples + 1) / 2;
  const double h = 2.0 / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < half; ++i) {
    double s = -1.0 + h * static_cast<double>(i);
    if (2 * i + 1 == samples) s = 0.0;
    out[i] = CurveSample{s, curve.z(s), curve.t(s), curve.dz(s), curve.dt(s)};
    const std::size_t j = samples - 1 - i;
    if (j != i) out[j] = CurveSample{-s, -out[i].z, out[i].t, out[i].dz, -out[i].dt};
  }
  return out;
}

}  // namespace csurg::geom
