#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace csurg {

enum class ErrorCode {
  invalid_argument,
  chart_mismatch,
  out_of_domain,
  step_underflow,
  non_finite,
  singular,
  tolerance_exceeded,
  unsupported_dimension,
  unknown_label,
  page_mismatch,
  dangling_reference,
  malformed_text,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace csurg
