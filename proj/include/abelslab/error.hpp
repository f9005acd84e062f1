#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abelslab {

enum class ErrorCode {
  invalid_descriptor,
  infinite_ring,
  unsupported_kind,
  index_out_of_range,
  size_mismatch,
  ring_mismatch,
  non_unit,
  non_invertible,
  unsupported_label,
  unknown_root,
  char2_unsupported,
  unsupported_pair,
  invalid_argument,
  budget_exceeded,
  overflow,
  disconnected_complex,
  von_dyck_violation,
  parse_error,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_descriptor: return "invalid-descriptor";
    case ErrorCode::infinite_ring: return "infinite-ring";
    case ErrorCode::unsupported_kind: return "unsupported-kind";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::size_mismatch: return "size-mismatch";
    case ErrorCode::ring_mismatch: return "ring-mismatch";
    case ErrorCode::non_unit: return "non-unit";
    case ErrorCode::non_invertible: return "non-invertible";
    case ErrorCode::unsupported_label: return "unsupported-label";
    case ErrorCode::unknown_root: return "unknown-root";
    case ErrorCode::char2_unsupported: return "char-2-unsupported";
    case ErrorCode::unsupported_pair: return "unsupported-pair";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::budget_exceeded: return "budget-exceeded";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::disconnected_complex: return "disconnected-complex";
    case ErrorCode::von_dyck_violation: return "von-dyck-violation";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace abelslab
