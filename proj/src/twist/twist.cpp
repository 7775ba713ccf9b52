#include "csurg/twist/twist.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "csurg/error.hpp"
#include "csurg/geom/rounding.hpp"
#include "csurg/twist/octonion.hpp"

namespace csurg::twist {

using std::numbers::pi;

TwistProfile::TwistProfile(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw Error(ErrorCode::invalid_argument, "twist profile needs 0 < epsilon < 1");
}

double TwistProfile::operator()(double x) const {
  const double a = epsilon_ / 4.0;
  return pi + pi * geom::smooth_step((x - a) / (epsilon_ - a));
}

double TwistProfile::derivative(double x) const {
  const double a = epsilon_ / 4.0;
  return pi * geom::smooth_step_derivative((x - a) / (epsilon_ - a)) / (epsilon_ - a);
}

TwistProfile make_profile(double epsilon) { return TwistProfile(epsilon); }

CotangentPoint apply_twist(const CotangentPoint& p, const TwistProfile& prof) {
  const double r = p.v.norm();
  if (r < kZeroFiber) return CotangentPoint{-p.u, Vec::Zero(p.v.size())};
  const double f = prof(r);
  const double c = std::cos(f);
  const double s = std::sin(f);
  return CotangentPoint{c * p.u + s * (p.v / r), -r * s * p.u + c * p.v};
}

SkewGenerator plane_generator(const Vec& u, const Vec& v) {
  const double r = v.norm();
  if (!(r > kZeroFiber))
    throw Error(ErrorCode::invalid_argument, "plane generator needs a nonzero fiber vector");
  const Vec vh = v / r;
  return SkewGenerator{vh * u.transpose() - u * vh.transpose(), GeneratorKind::v_u};
}

Mat plane_exp(const SkewGenerator& a, double theta) {
  const Mat& m = a.matrix;
  return Mat::Identity(m.rows(), m.cols()) + std::sin(theta) * m +
         (1.0 - std::cos(theta)) * (m * m);
}

Mat expm(const Mat& a) { return a.exp(); }

SkewGenerator almost_complex_generator(const Vec& u, int n) {
  if (n != 2 && n != 6)
    throw Error(ErrorCode::unsupported_dimension,
                "almost complex structure only on S^2 and S^6, got n = " + std::to_string(n));
  if (u.size() != n + 1)
    throw Error(ErrorCode::invalid_argument, "u must lie in R^{n+1}");
  Mat j(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    Vec e = Vec::Zero(n + 1);
    e(i) = 1.0;
    if (n == 2) {
      j.col(i) = Eigen::Vector3d(u(0), u(1), u(2)).cross(Eigen::Vector3d(e(0), e(1), e(2)));
    } else {
      j.col(i) = octonion_cross(u, e);
    }
  }
  return SkewGenerator{j, GeneratorKind::j_u};
}

namespace {

void require_almost_complex(const CotangentPoint& p) {
  const int n = base_dim(p);
  if (n != 2 && n != 6)
    throw Error(ErrorCode::unsupported_dimension,
                "square isotopy needs n = 2 or 6, got n = " + std::to_string(n));
}

}  // namespace

CotangentPoint isotopy_phi(double t, const CotangentPoint& p, const TwistProfile& prof) {
  require_almost_complex(p);
  const double r = p.v.norm();
  if (r < kZeroFiber) return CotangentPoint{p.u, Vec::Zero(p.v.size())};
  const int n = base_dim(p);
  const Mat gen = (1.0 - t) * almost_complex_generator(p.u, n).matrix +
                  t * plane_generator(p.u, p.v).matrix;
  const Mat m = expm(2.0 * prof(r) * gen);
  return CotangentPoint{m * p.u, m * p.v};
}

CotangentPoint isotopy_psi(double t, const CotangentPoint& p, const TwistProfile& prof) {
  require_almost_complex(p);
  const double r = p.v.norm();
  if (r < kZeroFiber) return CotangentPoint{p.u, Vec::Zero(p.v.size())};
  const Mat m = expm(2.0 * t * prof(r) * almost_complex_generator(p.u, base_dim(p)).matrix);
  return CotangentPoint{p.u, m * p.v};
}

PullbackResult pullback_two_form(const PointMap& map, const CotangentPoint& p, double step) {
  const int d = static_cast<int>(p.u.size());
  const geom::ChartPoint base = geom::make_point(geom::cotangent_sphere_chart(d - 1), stack(p));
  const Mat e = geom::tangent_frame(base);
  const int m = static_cast<int>(e.cols());

  Mat omega = Mat::Zero(2 * d, 2 * d);
  omega.topRightCorner(d, d) = Mat::Identity(d, d);
  omega.bottomLeftCorner(d, d) = -Mat::Identity(d, d);

  Mat jac(2 * d, m);
  const Vec x = stack(p);
  for (int i = 0; i < m; ++i) {
    const Vec xp = x + step * e.col(i);
    const Vec xm = x - step * e.col(i);
    const CotangentPoint fp = map(retract(xp.head(d), xp.tail(d)));
    const CotangentPoint fm = map(retract(xm.head(d), xm.tail(d)));
    const double off = std::max(constraint_residual(fp), constraint_residual(fm));
    if (off > 1e-8)
      throw Error(ErrorCode::tolerance_exceeded,
                  "map leaves T*S^n by " + std::to_string(off) + " during differencing");
    jac.col(i) = (stack(fp) - stack(fm)) / (2.0 * step);
  }
  PullbackResult out;
  out.pulled = geom::SkewMatrixAtPoint{base, jac.transpose() * omega * jac};
  out.reference = e.transpose() * omega * e;
  out.max_deviation = (out.pulled.entries - out.reference).cwiseAbs().maxCoeff();
  return out;
}

ProbeReport boundary_displacement_probe(IsotopyFamily family, int n, const TwistProfile& prof,
                                        std::size_t samples, std::uint64_t seed) {
  if (n != 2 && n != 6)
    throw Error(ErrorCode::unsupported_dimension, "probe needs n = 2 or 6");
  const auto points = random_cotangent_points(n, samples, seed, 1.0, 1.0);
  ProbeReport rep;
  bool first = true;
  for (int i = 0; i <= 10; ++i) {
    const double t = i / 10.0;
    double worst = 0.0;
    for (const auto& p : points) {
      const CotangentPoint q =
          family == IsotopyFamily::phi ? isotopy_phi(t, p, prof) : isotopy_psi(t, p, prof);
      const double disp = (stack(q) - stack(p)).norm();
      worst = std::max(worst, disp);
      if (first || disp > rep.max_displacement) {
        rep.max_displacement = disp;
        rep.t_at_max = t;
        rep.point_at_max = p;
        first = false;
      }
    }
    rep.t_grid.push_back(t);
    rep.displacement_by_t.push_back(worst);
  }
  return rep;
}

}  // namespace csurg::twist
