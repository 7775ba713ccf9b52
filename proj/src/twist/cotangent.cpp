#include "csurg/twist/cotangent.hpp"

#include <cmath>
#include <random>
#include <string>

#include "csurg/error.hpp"

namespace csurg::twist {

CotangentPoint make_cotangent_point(Vec u, Vec v) {
  if (u.size() < 2 || u.size() != v.size())
    throw Error(ErrorCode::invalid_argument, "u and v must be vectors of equal length >= 2");
  if (!u.allFinite() || !v.allFinite()) throw Error(ErrorCode::non_finite, "non-finite point");
  CotangentPoint p{std::move(u), std::move(v)};
  const double r = constraint_residual(p);
  if (r > kPointTolerance)
    throw Error(ErrorCode::out_of_domain, "point is off T*S^n by " + std::to_string(r));
  return p;
}

CotangentPoint retract(const Vec& u, const Vec& v) {
  CotangentPoint p;
  p.u = u.normalized();
  p.v = v - p.u.dot(v) * p.u;
  return p;
}

double constraint_residual(const CotangentPoint& p) {
  return std::max(std::abs(p.u.norm() - 1.0), std::abs(p.u.dot(p.v)));
}

int base_dim(const CotangentPoint& p) { return static_cast<int>(p.u.size()) - 1; }

Vec stack(const CotangentPoint& p) {
  Vec x(p.u.size() * 2);
  x << p.u, p.v;
  return x;
}

CotangentPoint unstack(const Vec& x) {
  const auto m = x.size() / 2;
  return CotangentPoint{x.head(m), x.tail(m)};
}

std::vector<CotangentPoint> random_cotangent_points(int n, std::size_t count, std::uint64_t seed,
                                                    double min_fiber, double max_fiber) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "base sphere dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> radius(min_fiber, max_fiber);
  std::vector<CotangentPoint> out;
  out.reserve(count);
  const int d = n + 1;
  for (std::size_t i = 0; i < count; ++i) {
    Vec u(d), w(d);
    for (int k = 0; k < d; ++k) u(k) = g(rng);
    for (int k = 0; k < d; ++k) w(k) = g(rng);
    u.normalize();
    w -= u.dot(w) * u;
    w.normalize();
    out.push_back(CotangentPoint{u, radius(rng) * w});
  }
  return out;
}

}  // namespace csurg::twist
