#ifndef BOXKIT_ERROR_HPP
#define BOXKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace boxkit {

enum class ErrorCode {
  invalid_argument,
  not_an_edge,
  vertex_out_of_range,
  // graph text parsing
  malformed_header,
  malformed_edge,
  self_loop,
  duplicate_edge,
  edge_count_mismatch,
  bad_label,
  // geometry
  dimension_mismatch,
  not_intersecting,
  // solver plumbing
  unsupported,
  invalid_order,
  inconsistent_model,
  verification_failed,
  too_large,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::not_an_edge: return "not-an-edge";
    case ErrorCode::vertex_out_of_range: return "vertex-out-of-range";
    case ErrorCode::malformed_header: return "malformed-header";
    case ErrorCode::malformed_edge: return "malformed-edge";
    case ErrorCode::self_loop: return "self-loop";
    case ErrorCode::duplicate_edge: return "duplicate-edge";
    case ErrorCode::edge_count_mismatch: return "edge-count-mismatch";
    case ErrorCode::bad_label: return "bad-label";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::not_intersecting: return "not-intersecting";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::invalid_order: return "invalid-order";
    case ErrorCode::inconsistent_model: return "inconsistent-model";
    case ErrorCode::verification_failed: return "verification-failed";
    case ErrorCode::too_large: return "too-large";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace boxkit

#endif  // BOXKIT_ERROR_HPP
