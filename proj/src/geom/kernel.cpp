#include "csurg/geom/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>

#include "csurg/error.hpp"

namespace csurg::geom {

namespace {

constexpr int kMaxTopFormDim = 9;

void check_step(double step, const Vec& x) {
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  if (!(step > 0.0) || step < 1e-12 * scale)
    throw Error(ErrorCode::step_underflow, "differencing step too small: " + std::to_string(step));
}

double condition_number(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a);
  const Vec& s = svd.singularValues();
  if (s.size() == 0) return 1.0;
  const double smin = s(s.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

double relative_residual(const Vec& r, const Vec& b) { return r.norm() / std::max(b.norm(), 1.0); }

// Solves -Omega X = rhs, the coordinate form of omega(X, .) = rhs.
VectorFieldSample solve_contraction(const Mat& omega, const Vec& rhs, const SolveOptions& opts,
                                    const char* what) {
  const Mat a = -omega;
  VectorFieldSample out;
  out.condition = condition_number(a);
  if (!(out.condition <= opts.max_condition))
    throw Error(ErrorCode::singular, std::string(what) + ": 2-form is degenerate (condition " +
                                         std::to_string(out.condition) + ")");
  out.value = a.partialPivLu().solve(rhs);
  out.residual = relative_residual(a * out.value - rhs, rhs);
  if (!(out.residual <= opts.tolerance))
    throw Error(ErrorCode::tolerance_exceeded,
                std::string(what) + ": residual " + std::to_string(out.residual));
  return out;
}

void require_unconstrained(const Chart& chart, const char* what) {
  if (chart.constrained())
    throw Error(ErrorCode::chart_mismatch,
                std::string(what) + " needs an unconstrained chart, got " + chart.name());
}

void require_same_chart(const OneFormField& form, const ChartPoint& p) {
  if (!form.chart.same_as(p.chart))
    throw Error(ErrorCode::chart_mismatch,
                form.id + " lives on " + form.chart.name() + ", point is on " + p.chart.name());
}

struct PermTable {
  int dim = 0;
  std::vector<std::uint8_t> perms;  // dim entries per permutation
  std::vector<std::int8_t> signs;
};

PermTable build_perms(int dim) {
  PermTable t;
  t.dim = dim;
  std::vector<std::uint8_t> p(dim);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  do {
    int inversions = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        if (p[i] > p[j]) ++inversions;
    t.perms.insert(t.perms.end(), p.begin(), p.end());
    t.signs.push_back(inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return t;
}

const PermTable& perms_for(int dim) {
  static std::array<std::once_flag, kMaxTopFormDim + 1> flags;
  static std::array<PermTable, kMaxTopFormDim + 1> tables;
  std::call_once(flags[dim], [dim] { tables[dim] = build_perms(dim); });
  return tables[dim];
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

SkewMatrixAtPoint exterior_derivative(const OneFormField& form, const ChartPoint& p, double step) {
  require_same_chart(form, p);
  check_step(step, p.coords);
  if (!form.chart.in_domain(p.coords, step))
    throw Error(ErrorCode::out_of_domain, "point within one step of the boundary of " +
                                              form.chart.name());
  const int m = static_cast<int>(p.coords.size());
  Mat d(m, m);  // d(i, j) = partial_i alpha_j
  Vec x = p.coords;
  for (int i = 0; i < m; ++i) {
    const double orig = x(i);
    x(i) = orig + step;
    const Vec ap = form.evaluator(x);
    x(i) = orig - step;
    const Vec am = form.evaluator(x);
    x(i) = orig;
    d.row(i) = ((ap - am) / (2.0 * step)).transpose();
  }
  if (!d.allFinite()) throw Error(ErrorCode::non_finite, form.id + ": non-finite derivative");
  return SkewMatrixAtPoint{p, d - d.transpose()};
}

Mat tangent_restriction(const SkewMatrixAtPoint& omega) {
  const Mat e = tangent_frame(omega.base);
  return e.transpose() * omega.entries * e;
}

VectorFieldSample liouville_vector_field(const OneFormField& beta, const ChartPoint& p,
                                         const SolveOptions& opts) {
  require_same_chart(beta, p);
  require_unconstrained(beta.chart, "liouville_vector_field");
  const SkewMatrixAtPoint omega = exterior_derivative(beta, p, opts.step);
  return solve_contraction(omega.entries, beta.evaluator(p.coords), opts,
                           "liouville_vector_field");
}

VectorFieldSample hamiltonian_vector_field(const ScalarField& f, const SkewMatrixAtPoint& omega,
                                           const SolveOptions& opts) {
  require_unconstrained(omega.base.chart, "hamiltonian_vector_field");
  const Vec df = gradient_at(f, omega.base.coords, opts.step);
  if (df.size() != omega.entries.rows())
    throw Error(ErrorCode::chart_mismatch, "gradient size does not match the 2-form");
  return solve_contraction(omega.entries, df, opts, "hamiltonian_vector_field");
}

VectorFieldSample reeb_vector_field(const OneFormField& alpha, const ChartPoint& p,
                                    const SolveOptions& opts) {
  require_same_chart(alpha, p);
  const Mat e = tangent_frame(p);
  const int m = static_cast<int>(e.cols());
  const Vec a = e.transpose() * alpha.evaluator(p.coords);
  const Mat w = tangent_restriction(exterior_derivative(alpha, p, opts.step));
  Mat sys(m + 1, m);
  sys.row(0) = a.transpose();
  sys.bottomRows(m) = w;
  Vec rhs = Vec::Zero(m + 1);
  rhs(0) = 1.0;

  VectorFieldSample out;
  Eigen::JacobiSVD<Mat> svd(sys, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vec& s = svd.singularValues();
  out.condition = s(s.size() - 1) > 0.0 ? s(0) / s(s.size() - 1)
                                        : std::numeric_limits<double>::infinity();
  if (!(out.condition <= opts.max_condition))
    throw Error(ErrorCode::singular, "reeb_vector_field: degenerate system (condition " +
                                         std::to_string(out.condition) + ")");
  const Vec r = svd.solve(rhs);
  out.residual = std::max(std::abs(a.dot(r) - 1.0), (w * r).cwiseAbs().maxCoeff());
  if (!(out.residual <= 1e-6))
    throw Error(ErrorCode::singular,
                "reeb_vector_field: inconsistent system, residual " + std::to_string(out.residual));
  out.value = e * r;
  return out;
}

VectorFieldSample moser_field(const OneFormField& beta, const OneFormField& beta_prime,
                              const ChartPoint& p, const SolveOptions& opts) {
  require_same_chart(beta, p);
  require_same_chart(beta_prime, p);
  require_unconstrained(beta.chart, "moser_field");
  const Mat w = exterior_derivative(beta, p, opts.step).entries;
  const Mat wp = exterior_derivative(beta_prime, p, opts.step).entries;
  const double gap = (w - wp).cwiseAbs().maxCoeff();
  if (gap > 1e-6)
    throw Error(ErrorCode::tolerance_exceeded,
                "moser_field: d beta and d beta' differ by " + std::to_string(gap));
  const Vec rhs = beta.evaluator(p.coords) - beta_prime.evaluator(p.coords);
  return solve_contraction(w, rhs, opts, "moser_field");
}

double contact_top_form(const OneFormField& alpha, const ChartPoint& p, double step) {
  require_same_chart(alpha, p);
  ChartPoint q = p;
  q.chart.orientation = p.chart.orientation * alpha.chart.orientation;
  const Mat e = tangent_frame(q);
  const int m = static_cast<int>(e.cols());
  if (m % 2 == 0)
    throw Error(ErrorCode::unsupported_dimension,
                "contact condition needs odd dimension, got " + std::to_string(m));
  if (m > kMaxTopFormDim)
    throw Error(ErrorCode::unsupported_dimension,
                "top-form expansion limited to dimension 9, got " + std::to_string(m));
  const Vec a = e.transpose() * alpha.evaluator(p.coords);
  const Mat w = tangent_restriction(exterior_derivative(alpha, q, step));
  const int n = (m - 1) / 2;

  const PermTable& table = perms_for(m);
  double sum = 0.0;
  const std::size_t count = table.signs.size();
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint8_t* s = &table.perms[k * m];
    double term = table.signs[k] * a(s[0]);
    for (int i = 0; i < n; ++i) term *= w(s[1 + 2 * i], s[2 + 2 * i]);
    sum += term;
  }
  return sum / (std::pow(2.0, n) * factorial(n));
}

ContactReport check_contact_condition(const OneFormField& alpha,
                                      const std::vector<ChartPoint>& points, double step) {
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "empty sample set");
  ContactReport out;
  out.values.reserve(points.size());
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    const double v = contact_top_form(alpha, p, step);
    out.values.push_back(v);
    margin = std::min(margin, v);
  }
  out.report.margin = margin;
  out.report.tolerance = 0.0;
  out.report.samples = points.size();
  out.report.passed = margin > -out.report.tolerance;
  return out;
}

Mat field_jacobian(const VectorFieldFn& v, const Vec& x, double step) {
  const int m = static_cast<int>(x.size());
  Mat j(m, m);
  Vec y = x;
  for (int i = 0; i < m; ++i) {
    const double orig = y(i);
    y(i) = orig + step;
    const Vec vp = v(y);
    y(i) = orig - step;
    const Vec vm = v(y);
    y(i) = orig;
    j.col(i) = (vp - vm) / (2.0 * step);
  }
  return j;
}

Vec lie_derivative(const VectorFieldFn& v, const OneFormField& alpha, const ChartPoint& p,
                   double step) {
  require_same_chart(alpha, p);
  check_step(step, p.coords);
  const Vec vx = v(p.coords);
  const Vec xp = p.coords + step * vx;
  const Vec xm = p.coords - step * vx;
  if (!alpha.chart.in_domain(xp) || !alpha.chart.in_domain(xm))
    throw Error(ErrorCode::out_of_domain, "flow leaves " + alpha.chart.name() +
                                              " within the differencing step");
  const Mat dv = field_jacobian(v, p.coords, step);
  const Mat id = Mat::Identity(dv.rows(), dv.cols());
  const Vec forward = (id + step * dv).transpose() * alpha.evaluator(xp);
  const Vec backward = (id - step * dv).transpose() * alpha.evaluator(xm);
  const Vec out = (forward - backward) / (2.0 * step);
  if (!out.allFinite()) throw Error(ErrorCode::non_finite, "non-finite Lie derivative");
  return out;
}

ConditionReport check_contact_dilation(const VectorFieldFn& v, const OneFormField& alpha,
                                       const std::vector<ChartPoint>& points, double tolerance,
                                       double step) {
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "empty sample set");
  double worst = 0.0;
  for (const auto& p : points) {
    const Vec lie = lie_derivative(v, alpha, p, step);
    const Mat e = tangent_frame(p);
    const Vec diff = e.transpose() * (lie - alpha.evaluator(p.coords));
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  ConditionReport r;
  r.margin = -worst;
  r.tolerance = tolerance;
  r.samples = points.size();
  r.passed = r.margin > -tolerance;
  return r;
}

Vec flow(const VectorFieldFn& v, Vec x, double t, int steps) {
  if (steps <= 0) throw Error(ErrorCode::invalid_argument, "flow needs a positive step count");
  const double h = t / steps;
  for (int i = 0; i < steps; ++i) {
    const Vec k1 = v(x);
    const Vec k2 = v(x + 0.5 * h * k1);
    const Vec k3 = v(x + 0.5 * h * k2);
    const Vec k4 = v(x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

Mat flow_jacobian(const VectorFieldFn& v, const Vec& x, double t, int steps, double step) {
  const int m = static_cast<int>(x.size());
  Mat j(m, m);
  Vec y = x;
  for (int i = 0; i < m; ++i) {
    const double orig = y(i);
    y(i) = orig + step;
    const Vec fp = flow(v, y, t, steps);
    y(i) = orig - step;
    const Vec fm = flow(v, y, t, steps);
    y(i) = orig;
    j.col(i) = (fp - fm) / (2.0 * step);
  }
  return j;
}

}  // namespace csurg::geom
