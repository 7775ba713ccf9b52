#include "csurg/scenario/verify.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "csurg/error.hpp"
#include "csurg/geom/kernel.hpp"
#include "csurg/geom/samples.hpp"
#include "csurg/twist/twist.hpp"

namespace csurg::scenario {

std::string format_line(const ReportLine& l) {
  return fmt::format("{}\t{}\t{}\t{}", l.metric, l.value, l.tolerance, l.status);
}

std::string format_real(double x) { return fmt::format("{:.6e}", x); }

ReportLine verify_twist(int n, std::size_t samples, std::uint64_t seed, double eps,
                        double tolerance) {
  const twist::TwistProfile prof = twist::make_profile(eps);
  const auto pts = twist::random_cotangent_points(n, samples, seed, 0.0, 1.0);
  double worst = 0.0;
  for (const auto& p : pts) {
    const auto r = twist::pullback_two_form(
        [&](const twist::CotangentPoint& x) { return twist::apply_twist(x, prof); }, p);
    worst = std::max(worst, r.max_deviation);
  }
  return {fmt::format("twist(n={}).max_deviation", n), format_real(worst), format_real(tolerance),
          worst <= tolerance ? "PASS" : "FAIL"};
}

namespace {

geom::OneFormField contact_target(const std::string& id, int n) {
  geom::OneFormField form = geom::form_from_id(id, n);
  if (form.chart.dim() % 2 == 1) return form;
  if (id == "lambda_std") {
    if (n < 2) throw Error(ErrorCode::unsupported_dimension, "lambda_std needs n >= 2 here");
    return geom::lambda_std_sphere(n - 1);
  }
  if (id.rfind("weinstein", 0) == 0) {
    const int fn = form.chart.ambient_dim() / 2;
    int k = 0;
    const auto comma = id.rfind(',');
    const auto open = id.find('(');
    const std::string digits = id.substr((comma == std::string::npos ? open : comma) + 1);
    k = std::stoi(digits);
    return geom::restrict_to(form, geom::handle_belt_chart(fn, k));
  }
  throw Error(ErrorCode::unsupported_dimension, id + " is not a contact form");
}

}  // namespace

ReportLine verify_contact(const std::string& form_id, int n, std::size_t samples,
                          std::uint64_t seed) {
  const geom::OneFormField form = contact_target(form_id, n);
  const auto pts = geom::random_samples(form.chart, samples, seed);
  const auto rep = geom::check_contact_condition(form, pts);
  return {fmt::format("contact({}).min_top_form", form_id), format_real(rep.report.margin), ">0",
          rep.report.passed ? "PASS" : "FAIL"};
}

}  // namespace csurg::scenario
