#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace csurg::geom {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Coordinate charts used by the kernel. Symplectic coordinates are stored
// interleaved, (x1, y1, x2, y2, ...), so that the coordinate orientation agrees
// with the orientation of (d lambda_std)^n.
enum class ChartId {
  symplectic,        // R^{2n}: (x1, y1, ..., xn, yn)
  darboux,           // R^{2n+1}: (z, x1, y1, ..., xn, yn)
  cotangent,         // T*R^n: (q1, p1, ..., qn, pn)
  sphere,            // S^{2n+1} in R^{2n+2}, ambient symplectic coordinates
  handle_belt,       // D^k x S^{2n-k-1} in the boundary of H_{n,k} in R^{2n}
  handle,            // [-1,1] x N(Sigma): (theta, z, x1, y1, ...)
  theta_collar,      // [-delta,delta] x {+-eps} x Sigma: (theta, x1, y1, ...)
  rounding_collar,   // [-delta,delta] x gamma x boundary: (theta, s, w0, w1, ...)
  symplectization,   // [1/2,1] x R^{2n+1}: (t, z, x1, y1, ...)
  cotangent_sphere,  // T*S^n in R^{n+1} x R^{n+1}: (u, v)
};

struct Chart {
  ChartId id = ChartId::symplectic;
  // Meaning depends on the chart: the number of (x, y) pairs of the Sigma
  // factor, the sphere S^{2n+1}, the boundary Darboux chart R^{2n-1}, or the
  // base sphere S^n of T*S^n.
  int n = 1;
  int k = 0;             // handle index, handle_belt only
  int orientation = 1;   // +1 standard, -1 reversed
  double tolerance = 1e-9;

  int ambient_dim() const;
  int dim() const;
  int constraint_count() const;
  bool constrained() const { return constraint_count() > 0; }

  Vec constraint_values(const Vec& x) const;
  // One row per constraint.
  Mat constraint_gradients(const Vec& x) const;

  // Coordinate box of the chart's domain, shrunk by `margin`.
  bool in_domain(const Vec& x, double margin = 0.0) const;

  std::string name() const;

  Chart reversed() const {
    Chart c = *this;
    c.orientation = -orientation;
    return c;
  }

  bool same_as(const Chart& other) const {
    return id == other.id && n == other.n && k == other.k;
  }
};

Chart symplectic_chart(int n);
Chart darboux_chart(int n);
Chart cotangent_chart(int n);
Chart sphere_chart(int n);
Chart handle_belt_chart(int n, int k);
Chart handle_chart(int n);
Chart theta_collar_chart(int n);
Chart rounding_collar_chart(int n);
Chart symplectization_chart(int n);
Chart cotangent_sphere_chart(int n);

struct ChartPoint {
  Chart chart;
  Vec coords;
};

// Validates coordinate count, finiteness, domain membership and the
// constraint residual.
ChartPoint make_point(const Chart& chart, Vec coords);

// Orthonormal frame of the tangent space at p, one column per vector. For
// hypersurface charts (N, e_1, ..., e_m) is positively oriented, N the
// outward normal; the chart orientation flips the first vector.
Mat tangent_frame(const ChartPoint& p);

}  // namespace csurg::geom
