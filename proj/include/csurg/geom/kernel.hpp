#pragma once

#include <cstddef>
#include <vector>

#include "csurg/geom/chart.hpp"
#include "csurg/geom/forms.hpp"

namespace csurg::geom {

struct SolveOptions {
  double step = 1e-5;           // central-difference step
  double max_condition = 1e10;  // refuse solves above this condition number
  double tolerance = 1e-8;      // relative residual bound
};

// Ambient 2-form values on coordinate basis pairs.
struct SkewMatrixAtPoint {
  ChartPoint base;
  Mat entries;
};

struct VectorFieldSample {
  Vec value;
  double residual = 0.0;   // relative residual of the defining equations
  double condition = 1.0;  // condition number of the solved system
};

struct ConditionReport {
  bool passed = false;
  double margin = 0.0;  // smallest signed quantity tested
  double tolerance = 0.0;
  std::size_t samples = 0;
};

struct ContactReport {
  ConditionReport report;
  std::vector<double> values;  // per-sample top-form coefficient
};

// d alpha(e_i, e_j) = d_i alpha_j - d_j alpha_i by central differences.
SkewMatrixAtPoint exterior_derivative(const OneFormField& form, const ChartPoint& p,
                                      double step = 1e-5);

// E^T M E for the chart's tangent frame E at the base point.
Mat tangent_restriction(const SkewMatrixAtPoint& omega);

// X with d beta(X, .) = beta.
VectorFieldSample liouville_vector_field(const OneFormField& beta, const ChartPoint& p,
                                         const SolveOptions& opts = {});

// X_f with df = omega(X_f, .), omega evaluated at omega.base.
VectorFieldSample hamiltonian_vector_field(const ScalarField& f, const SkewMatrixAtPoint& omega,
                                           const SolveOptions& opts = {});

// R tangent to the chart with alpha(R) = 1 and d alpha(R, .) = 0 on the tangent space.
// residual is max(|alpha(R) - 1|, |d alpha(R, .)|).
VectorFieldSample reeb_vector_field(const OneFormField& alpha, const ChartPoint& p,
                                    const SolveOptions& opts = {});

// V with d beta(V, .) = beta - beta'. Requires d beta = d beta' within 1e-6.
VectorFieldSample moser_field(const OneFormField& beta, const OneFormField& beta_prime,
                              const ChartPoint& p, const SolveOptions& opts = {});

// Coefficient of alpha ^ (d alpha)^n on the oriented tangent frame, normalised
// so that dz + lambda_std at the origin gives 1. Tangent dimension must be odd
// and at most 9.
double contact_top_form(const OneFormField& alpha, const ChartPoint& p, double step = 1e-5);

// Strict positivity of the top-form coefficient (tolerance 0).
ContactReport check_contact_condition(const OneFormField& alpha,
                                      const std::vector<ChartPoint>& points, double step = 1e-5);

// L_v alpha by central differences of the linearised flow pullback.
Vec lie_derivative(const VectorFieldFn& v, const OneFormField& alpha, const ChartPoint& p,
                   double step = 1e-5);

// Passes iff |L_v alpha - alpha| <= tolerance on tangent vectors at every point.
// margin is minus the largest residual.
ConditionReport check_contact_dilation(const VectorFieldFn& v, const OneFormField& alpha,
                                       const std::vector<ChartPoint>& points,
                                       double tolerance = 1e-6, double step = 1e-5);

// Classical RK4 flow of v for time t.
Vec flow(const VectorFieldFn& v, Vec x, double t, int steps = 64);

// Jacobian of the time-t flow by central differences.
Mat flow_jacobian(const VectorFieldFn& v, const Vec& x, double t, int steps = 64,
                  double step = 1e-5);

// Jacobian of v by central differences.
Mat field_jacobian(const VectorFieldFn& v, const Vec& x, double step = 1e-5);

}  // namespace csurg::geom
