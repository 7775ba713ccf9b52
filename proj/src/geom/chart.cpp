#include "csurg/geom/chart.hpp"

#include <cmath>
#include <string>

#include "csurg/error.hpp"

namespace csurg::geom {

namespace {

// Indices of the coordinates parametrizing the sphere factor of D^k x S^{2n-k-1}:
// y_1..y_k and every coordinate of the pairs k+1..n.
bool is_belt_sphere_coord(int index, int k) {
  const int pair = index / 2;
  const bool is_x = index % 2 == 0;
  return pair >= k || !is_x;
}

}  // namespace

int Chart::ambient_dim() const {
  switch (id) {
    case ChartId::symplectic:
    case ChartId::cotangent:
    case ChartId::handle_belt:
      return 2 * n;
    case ChartId::darboux:
    case ChartId::theta_collar:
    case ChartId::rounding_collar:
      return 2 * n + 1;
    case ChartId::sphere:
    case ChartId::handle:
    case ChartId::symplectization:
    case ChartId::cotangent_sphere:
      return 2 * n + 2;
  }
  return 0;
}

int Chart::constraint_count() const {
  switch (id) {
    case ChartId::sphere:
    case ChartId::handle_belt:
      return 1;
    case ChartId::cotangent_sphere:
      return 2;
    default:
      return 0;
  }
}

int Chart::dim() const { return ambient_dim() - constraint_count(); }

Vec Chart::constraint_values(const Vec& x) const {
  Vec g(constraint_count());
  switch (id) {
    case ChartId::sphere:
      g(0) = x.squaredNorm() - 1.0;
      break;
    case ChartId::handle_belt: {
      double r2 = 0.0;
      for (int i = 0; i < x.size(); ++i)
        if (is_belt_sphere_coord(i, k)) r2 += x(i) * x(i);
      g(0) = r2 - 1.0;
      break;
    }
    case ChartId::cotangent_sphere: {
      const int m = n + 1;
      g(0) = x.head(m).squaredNorm() - 1.0;
      g(1) = x.head(m).dot(x.tail(m));
      break;
    }
    default:
      break;
  }
  return g;
}

Mat Chart::constraint_gradients(const Vec& x) const {
  Mat grad = Mat::Zero(constraint_count(), x.size());
  switch (id) {
    case ChartId::sphere:
      grad.row(0) = 2.0 * x.transpose();
      break;
    case ChartId::handle_belt:
      for (int i = 0; i < x.size(); ++i)
        if (is_belt_sphere_coord(i, k)) grad(0, i) = 2.0 * x(i);
      break;
    case ChartId::cotangent_sphere: {
      const int m = n + 1;
      grad.block(0, 0, 1, m) = 2.0 * x.head(m).transpose();
      grad.block(1, 0, 1, m) = x.tail(m).transpose();
      grad.block(1, m, 1, m) = x.head(m).transpose();
      break;
    }
    default:
      break;
  }
  return grad;
}

bool Chart::in_domain(const Vec& x, double margin) const {
  if (x.size() != ambient_dim()) return false;
  switch (id) {
    case ChartId::handle:
      return std::abs(x(0)) <= 1.0 - margin;
    case ChartId::rounding_collar:
      return std::abs(x(1)) <= 1.0 - margin;
    case ChartId::symplectization:
      return x(0) > margin;
    case ChartId::handle_belt: {
      double r2 = 0.0;
      for (int j = 0; j < k; ++j) r2 += x(2 * j) * x(2 * j);
      return std::sqrt(r2) <= 1.0 - margin + tolerance;
    }
    default:
      return true;
  }
}

std::string Chart::name() const {
  std::string base;
  switch (id) {
    case ChartId::symplectic: base = "symplectic"; break;
    case ChartId::darboux: base = "darboux"; break;
    case ChartId::cotangent: base = "cotangent"; break;
    case ChartId::sphere: base = "sphere"; break;
    case ChartId::handle_belt: base = "handle_belt"; break;
    case ChartId::handle: base = "handle"; break;
    case ChartId::theta_collar: base = "theta_collar"; break;
    case ChartId::rounding_collar: base = "rounding_collar"; break;
    case ChartId::symplectization: base = "symplectization"; break;
    case ChartId::cotangent_sphere: base = "cotangent_sphere"; break;
  }
  base += "(n=" + std::to_string(n);
  if (id == ChartId::handle_belt) base += ",k=" + std::to_string(k);
  base += ")";
  return base;
}

namespace {

Chart chart_of(ChartId id, int n, int min_n = 1) {
  if (n < min_n)
    throw Error(ErrorCode::invalid_argument, "chart dimension parameter too small");
  Chart c;
  c.id = id;
  c.n = n;
  return c;
}

}  // namespace

Chart symplectic_chart(int n) { return chart_of(ChartId::symplectic, n); }
Chart darboux_chart(int n) { return chart_of(ChartId::darboux, n, 0); }
Chart cotangent_chart(int n) { return chart_of(ChartId::cotangent, n); }
Chart sphere_chart(int n) { return chart_of(ChartId::sphere, n, 0); }
Chart handle_chart(int n) { return chart_of(ChartId::handle, n); }
Chart theta_collar_chart(int n) { return chart_of(ChartId::theta_collar, n); }
Chart rounding_collar_chart(int n) { return chart_of(ChartId::rounding_collar, n); }
Chart symplectization_chart(int n) { return chart_of(ChartId::symplectization, n, 0); }
Chart cotangent_sphere_chart(int n) { return chart_of(ChartId::cotangent_sphere, n); }

Chart handle_belt_chart(int n, int k) {
  if (k < 0 || k > n)
    throw Error(ErrorCode::invalid_argument, "handle index must satisfy 0 <= k <= n");
  Chart c = chart_of(ChartId::handle_belt, n);
  c.k = k;
  return c;
}

ChartPoint make_point(const Chart& chart, Vec coords) {
  if (coords.size() != chart.ambient_dim())
    throw Error(ErrorCode::chart_mismatch,
                "expected " + std::to_string(chart.ambient_dim()) + " coordinates for " +
                    chart.name() + ", got " + std::to_string(coords.size()));
  if (!coords.allFinite())
    throw Error(ErrorCode::non_finite, "non-finite coordinate");
  if (!chart.in_domain(coords))
    throw Error(ErrorCode::out_of_domain, "point outside the domain of " + chart.name());
  if (chart.constrained()) {
    const double residual = chart.constraint_values(coords).cwiseAbs().maxCoeff();
    if (residual > chart.tolerance)
      throw Error(ErrorCode::out_of_domain,
                  "constraint residual " + std::to_string(residual) + " on " + chart.name());
  }
  return ChartPoint{chart, std::move(coords)};
}

Mat tangent_frame(const ChartPoint& p) {
  const Chart& chart = p.chart;
  const int m = chart.ambient_dim();
  Mat frame;
  Mat normals(m, 0);
  if (!chart.constrained()) {
    frame = Mat::Identity(m, m);
  } else {
    const Mat grad = chart.constraint_gradients(p.coords);
    const int c = static_cast<int>(grad.rows());
    Eigen::HouseholderQR<Mat> qr(grad.transpose());
    const Mat q = qr.householderQ() * Mat::Identity(m, m);
    frame = q.rightCols(m - c);
    // Gram-Schmidt on the gradients, in order, fixes the normal block.
    normals.resize(m, c);
    for (int i = 0; i < c; ++i) {
      Vec v = grad.row(i).transpose();
      for (int j = 0; j < i; ++j) v -= normals.col(j).dot(v) * normals.col(j);
      normals.col(i) = v.normalized();
    }
    Mat full(m, m);
    full << normals, frame;
    if (full.determinant() < 0.0) frame.col(0) *= -1.0;
  }
  if (chart.orientation < 0) frame.col(0) *= -1.0;
  return frame;
}

}  // namespace csurg::geom
