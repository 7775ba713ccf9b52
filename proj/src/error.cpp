#include "csurg/error.hpp"

namespace csurg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::chart_mismatch: return "chart_mismatch";
    case ErrorCode::out_of_domain: return "out_of_domain";
    case ErrorCode::step_underflow: return "step_underflow";
    case ErrorCode::non_finite: return "non_finite";
    case ErrorCode::singular: return "singular";
    case ErrorCode::tolerance_exceeded: return "tolerance_exceeded";
    case ErrorCode::unsupported_dimension: return "unsupported_dimension";
    case ErrorCode::unknown_label: return "unknown_label";
    case ErrorCode::page_mismatch: return "page_mismatch";
    case ErrorCode::dangling_reference: return "dangling_reference";
    case ErrorCode::malformed_text: return "malformed_text";
  }
  return "unknown";
}

}  // namespace csurg
