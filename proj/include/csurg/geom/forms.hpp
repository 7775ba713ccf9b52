#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "csurg/geom/chart.hpp"

namespace csurg::geom {

class RoundingCurve;

using CovectorFn = std::function<Vec(const Vec&)>;
using VectorFieldFn = std::function<Vec(const Vec&)>;

// A 1-form given by its ambient covector components. On constrained charts the
// form is the restriction of the ambient form to the tangent space.
struct OneFormField {
  std::string id;
  Chart chart;
  CovectorFn evaluator;
};

struct ScalarField {
  std::function<double(const Vec&)> value;
  // Optional; central differences are used when empty.
  std::function<Vec(const Vec&)> gradient;
};

Vec gradient_at(const ScalarField& f, const Vec& x, double step = 1e-5);

// Throws chart_mismatch / out_of_domain.
Vec eval_one_form(const OneFormField& form, const ChartPoint& p);

// 1/2 sum (x_j dy_j - y_j dx_j) on R^{2n}.
OneFormField lambda_std(int n);
// The same ambient formula restricted to S^{2n+1} in R^{2n+2}.
OneFormField lambda_std_sphere(int n);
// sum p_j dq_j on T*R^n.
OneFormField lambda_can(int n);
// dz + lambda_std on R^{2n+1}.
OneFormField darboux_form(int n);
// lambda_std - d f_k with f_k = sum_{j<=k} x_j y_j. Its Liouville field is
// X_std + sum_{j<=k} (-x_j d/dx_j + y_j d/dy_j).
OneFormField weinstein(int n, int k);
// -theta dz - 2 z dtheta + lambda_std on [-1,1] x N(Sigma), Sigma a ball in R^{2n}.
OneFormField handle_form(int n);
// -side * eps * dtheta + lambda_std on [-delta,delta] x {side * eps} x Sigma.
OneFormField theta_invariant(int n, int side, double eps);
// -z(s) dtheta + (1 - p) z'(s) ds + t(s) alpha' on the rounding collar, where
// alpha' = dw_0 + lambda_std on R^{2n-1}.
OneFormField rounded_family(int n, double p, const RoundingCurve& curve);
// t (dz + lambda_std) on the symplectization collar.
OneFormField symplectization_form(int n);
// beta + df.
OneFormField add_exact(const OneFormField& beta, const ScalarField& f, std::string id = {});
OneFormField custom_form(std::string id, const Chart& chart, CovectorFn evaluator);

// Re-binds a form to another chart with the same ambient coordinates, e.g.
// weinstein(n, k) onto handle_belt_chart(n, k).
OneFormField restrict_to(const OneFormField& form, const Chart& chart);

// Catalog lookup by string id: lambda_std, lambda_std_sphere, lambda_can,
// darboux, weinstein(k), handle_form, theta_invariant(+1|-1), symplectization.
OneFormField form_from_id(std::string_view id, int n);

// Vector fields used alongside the catalog.
VectorFieldFn liouville_std_field(int n);          // 1/2 sum (x dx + y dy)
VectorFieldFn darboux_dilation_field(int n);       // z dz + X_std
VectorFieldFn symplectization_dilation_field(int n);  // t dt

}  // namespace csurg::geom
