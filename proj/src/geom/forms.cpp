#include "csurg/geom/forms.hpp"

#include <charconv>
#include <string>

#include "csurg/error.hpp"
#include "csurg/geom/rounding.hpp"

namespace csurg::geom {

namespace {

// Adds scale * lambda_std on the pairs starting at `offset`.
void add_lambda_std(const Vec& x, int offset, int pairs, double scale, Vec& c) {
  for (int j = 0; j < pairs; ++j) {
    const int ix = offset + 2 * j;
    c(ix) += -0.5 * scale * x(ix + 1);
    c(ix + 1) += 0.5 * scale * x(ix);
  }
}

}  // namespace

Vec gradient_at(const ScalarField& f, const Vec& x, double step) {
  if (f.gradient) return f.gradient(x);
  Vec g(x.size());
  Vec xp = x;
  for (int i = 0; i < x.size(); ++i) {
    const double orig = xp(i);
    xp(i) = orig + step;
    const double fp = f.value(xp);
    xp(i) = orig - step;
    const double fm = f.value(xp);
    xp(i) = orig;
    g(i) = (fp - fm) / (2.0 * step);
  }
  return g;
}

Vec eval_one_form(const OneFormField& form, const ChartPoint& p) {
  if (!form.chart.same_as(p.chart))
    throw Error(ErrorCode::chart_mismatch,
                form.id + " lives on " + form.chart.name() + ", point is on " + p.chart.name());
  if (p.coords.size() != form.chart.ambient_dim())
    throw Error(ErrorCode::chart_mismatch, "coordinate count does not match " + form.chart.name());
  if (!form.chart.in_domain(p.coords))
    throw Error(ErrorCode::out_of_domain, "point outside the domain of " + form.chart.name());
  return form.evaluator(p.coords);
}

OneFormField lambda_std(int n) {
  return {"lambda_std", symplectic_chart(n), [n](const Vec& x) {
            Vec c = Vec::Zero(2 * n);
            add_lambda_std(x, 0, n, 1.0, c);
            return c;
          }};
}

OneFormField lambda_std_sphere(int n) {
  OneFormField f = lambda_std(n + 1);
  f.id = "lambda_std_sphere";
  f.chart = sphere_chart(n);
  return f;
}

OneFormField lambda_can(int n) {
  return {"lambda_can", cotangent_chart(n), [n](const Vec& x) {
            Vec c = Vec::Zero(2 * n);
            for (int j = 0; j < n; ++j) c(2 * j) = x(2 * j + 1);
            return c;
          }};
}

OneFormField darboux_form(int n) {
  return {"darboux", darboux_chart(n), [n](const Vec& x) {
            Vec c = Vec::Zero(2 * n + 1);
            c(0) = 1.0;
            add_lambda_std(x, 1, n, 1.0, c);
            return c;
          }};
}

OneFormField weinstein(int n, int k) {
  if (k < 0 || k > n) throw Error(ErrorCode::invalid_argument, "weinstein handle needs 0 <= k <= n");
  return {"weinstein(" + std::to_string(n) + "," + std::to_string(k) + ")", symplectic_chart(n),
          [n, k](const Vec& x) {
            Vec c = Vec::Zero(2 * n);
            add_lambda_std(x, 0, n, 1.0, c);
            for (int j = 0; j < k; ++j) {
              c(2 * j) -= x(2 * j + 1);
              c(2 * j + 1) -= x(2 * j);
            }
            return c;
          }};
}

OneFormField handle_form(int n) {
  return {"handle_form", handle_chart(n), [n](const Vec& x) {
            Vec c = Vec::Zero(2 * n + 2);
            c(0) = -2.0 * x(1);
            c(1) = -x(0);
            add_lambda_std(x, 2, n, 1.0, c);
            return c;
          }};
}

OneFormField theta_invariant(int n, int side, double eps) {
  if (side != 1 && side != -1) throw Error(ErrorCode::invalid_argument, "side must be +1 or -1");
  if (!(eps > 0.0)) throw Error(ErrorCode::invalid_argument, "theta_invariant needs eps > 0");
  return {"theta_invariant(" + std::string(side > 0 ? "+1" : "-1") + ")", theta_collar_chart(n),
          [n, side, eps](const Vec& x) {
            Vec c = Vec::Zero(2 * n + 1);
            c(0) = -side * eps;
            add_lambda_std(x, 1, n, 1.0, c);
            return c;
          }};
}

OneFormField rounded_family(int n, double p, const RoundingCurve& curve) {
  Chart chart = rounding_collar_chart(n);
  // (s, theta, w) is the positive orientation.
  chart.orientation = -1;
  return {"rounded_family(" + std::to_string(p) + ")", chart, [n, p, curve](const Vec& x) {
            const double s = x(1);
            const double t = curve.t(s);
            Vec c = Vec::Zero(2 * n + 1);
            c(0) = -curve.z(s);
            c(1) = (1.0 - p) * curve.dz(s);
            c(2) = t;
            add_lambda_std(x, 3, n - 1, t, c);
            return c;
          }};
}

OneFormField symplectization_form(int n) {
  return {"symplectization", symplectization_chart(n), [n](const Vec& x) {
            const double t = x(0);
            Vec c = Vec::Zero(2 * n + 2);
            c(1) = t;
            add_lambda_std(x, 2, n, t, c);
            return c;
          }};
}

OneFormField add_exact(const OneFormField& beta, const ScalarField& f, std::string id) {
  if (id.empty()) id = beta.id + "+df";
  auto base = beta.evaluator;
  return {std::move(id), beta.chart,
          [base, f](const Vec& x) -> Vec { return base(x) + gradient_at(f, x); }};
}

OneFormField custom_form(std::string id, const Chart& chart, CovectorFn evaluator) {
  return {std::move(id), chart, std::move(evaluator)};
}

OneFormField restrict_to(const OneFormField& form, const Chart& chart) {
  if (chart.ambient_dim() != form.chart.ambient_dim())
    throw Error(ErrorCode::chart_mismatch, "cannot move " + form.id + " onto " + chart.name());
  OneFormField out = form;
  out.chart = chart;
  return out;
}

namespace {

std::vector<int> parse_args(std::string_view id, std::string_view head) {
  std::vector<int> args;
  std::string_view rest = id.substr(head.size());
  if (rest.empty()) return args;
  if (rest.front() != '(' || rest.back() != ')')
    throw Error(ErrorCode::unknown_label, "malformed form id: " + std::string(id));
  rest = rest.substr(1, rest.size() - 2);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::unknown_label, "malformed form id: " + std::string(id));
    args.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return args;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

OneFormField form_from_id(std::string_view id, int n) {
  if (id == "lambda_std") return lambda_std(n);
  if (id == "lambda_std_sphere") return lambda_std_sphere(n);
  if (id == "lambda_can") return lambda_can(n);
  if (id == "darboux") return darboux_form(n);
  if (id == "handle_form") return handle_form(n);
  if (id == "symplectization") return symplectization_form(n);
  if (starts_with(id, "weinstein")) {
    const auto args = parse_args(id, "weinstein");
    if (args.size() == 1) return weinstein(n, args[0]);
    if (args.size() == 2) return weinstein(args[0], args[1]);
  }
  if (starts_with(id, "theta_invariant")) {
    const auto args = parse_args(id, "theta_invariant");
    if (args.size() == 1) return theta_invariant(n, args[0], 1.0);
  }
  throw Error(ErrorCode::unknown_label, "unknown form id: " + std::string(id));
}

VectorFieldFn liouville_std_field(int n) {
  return [n](const Vec& x) -> Vec { return 0.5 * x.head(2 * n); };
}

VectorFieldFn darboux_dilation_field(int n) {
  return [n](const Vec& x) -> Vec {
    Vec v(2 * n + 1);
    v(0) = x(0);
    v.tail(2 * n) = 0.5 * x.tail(2 * n);
    return v;
  };
}

VectorFieldFn symplectization_dilation_field(int n) {
  return [n](const Vec& x) -> Vec {
    Vec v = Vec::Zero(2 * n + 2);
    v(0) = x(0);
    return v;
  };
}

}  // namespace csurg::geom
