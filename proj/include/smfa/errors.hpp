#pragma once

#include <stdexcept>
#include <string>

namespace smfa {

enum class Errc {
  // domain validation
  non_nested_aggregates,
  negative_amount,
  zero_market_volume,
  non_finite_percent,
  bad_period,
  country_mismatch,
  non_consecutive_periods,
  // computation guards
  division_by_zero_m0,
  zero_denominator,
  out_of_range,
  zero_base,
  numeric_overflow,
  // normalization
  missing_label,
  profile_mismatch,
  nesting_violation_after_adjustment,
  // assessment
  missing_structural_indicators,
  // io / cli
  malformed_header,
  missing_required_column,
  unknown_column,
  unparsable_number,
  duplicate_record,
  insufficient_periods,
  io_error,
  usage_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

enum class Severity { warning, error };

// One violated invariant or advisory condition. Validation collects every
// issue it finds rather than stopping at the first.
struct ValidationIssue {
  Errc code;
  Severity severity;
  std::string message;
};

}  // namespace smfa
