#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starlike {

enum class ErrorCode {
  invalid_argument,
  complex_roots,
  negative_root,
  invalid_series,
  non_unit_constant_term,
  non_zero_constant_term,
  zero_denominator,
  divergent_series,
  bad_denominator,
  non_positive_argument,
  no_convergence,
  param_out_of_range,
  ratio_is_minus_one,
  precondition_violated,
  unknown_operator,
  tail_too_large,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code lets
/// callers (notably the CLI) map failures to exit statuses without parsing
/// the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace starlike
