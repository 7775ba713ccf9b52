#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace csurg::scenario {

// One report line: metric<TAB>value<TAB>tolerance<TAB>status.
struct ReportLine {
  std::string metric;
  std::string value;
  std::string tolerance = "-";
  std::string status = "INFO";  // PASS, FAIL or INFO

  bool failed() const { return status == "FAIL"; }
};

std::string format_line(const ReportLine& l);
std::string format_real(double x);

// Max deviation of tau_n^*(-d lambda_can) from -d lambda_can on tangent
// frames at seeded points with fiber norm in [0, 1].
ReportLine verify_twist(int n, std::size_t samples, std::uint64_t seed, double eps = 0.5,
                        double tolerance = 1e-5);

// Strict positivity of the contact top-form. Forms on an even-dimensional
// chart are restricted first: lambda_std to the unit sphere, weinstein(n,k)
// to its belt region D^k x S^{2n-k-1}.
ReportLine verify_contact(const std::string& form_id, int n, std::size_t samples,
                          std::uint64_t seed);

}  // namespace csurg::scenario
