#include "smfa/domain.hpp"

#include <cmath>

#include <fmt/format.h>

namespace smfa {

Percent::Percent(double value) : value_(value) {
  if (!std::isfinite(value))
    throw Error(Errc::non_finite_percent, "percent value must be finite");
}

std::vector<ValidationIssue> ValidationOutcome::warnings() const {
  std::vector<ValidationIssue> out;
  for (const auto& issue : issues)
    if (issue.severity == Severity::warning) out.push_back(issue);
  return out;
}

namespace {

void check_non_negative(const char* name, Decimal value,
                        std::vector<ValidationIssue>& issues) {
  if (value.is_negative())
    issues.push_back({Errc::negative_amount, Severity::error,
                      fmt::format("{} is negative ({})", name, value.str())});
}

void check_finite(const char* name, double value,
                  std::vector<ValidationIssue>& issues) {
  if (!std::isfinite(value))
    issues.push_back({Errc::non_finite_percent, Severity::error,
                      fmt::format("{} is not finite", name)});
}

}  // namespace

ValidationOutcome validate_observation(const ObservationInput& input) {
  ValidationOutcome outcome;
  auto& issues = outcome.issues;

  if (input.period < 1 || input.period > 9999)
    issues.push_back({Errc::bad_period, Severity::error,
                      fmt::format("period {} is not a calendar year", input.period)});

  check_non_negative("m0", input.m0, issues);
  check_non_negative("m1", input.m1, issues);
  check_non_negative("m2", input.m2, issues);
  if (input.m3_reported) check_non_negative("m3", *input.m3_reported, issues);
  check_non_negative("q_sm", input.market_volume, issues);
  check_non_negative("q_tr", input.trading_volume, issues);
  check_non_negative("gdp", input.gdp, issues);

  if (input.m0 > input.m1)
    issues.push_back({Errc::non_nested_aggregates, Severity::error,
                      fmt::format("aggregates are not nested: m0 ({}) > m1 ({})",
                                  input.m0.str(), input.m1.str())});
  if (input.m1 > input.m2)
    issues.push_back({Errc::non_nested_aggregates, Severity::error,
                      fmt::format("aggregates are not nested: m1 ({}) > m2 ({})",
                                  input.m1.str(), input.m2.str())});
  if (input.m3_reported && *input.m3_reported < input.m2)
    issues.push_back({Errc::non_nested_aggregates, Severity::error,
                      fmt::format("reported m3 ({}) < m2 ({})",
                                  input.m3_reported->str(), input.m2.str())});

  check_finite("pi", input.inflation_pct, issues);
  if (input.investment_share_pct) check_finite("omega_si", *input.investment_share_pct, issues);
  if (input.hightech_share_pct) check_finite("omega_l", *input.hightech_share_pct, issues);
  if (input.inventive_activity) check_finite("k_inv", *input.inventive_activity, issues);

  if (input.market_volume.is_zero())
    issues.push_back({Errc::zero_market_volume, Severity::warning,
                      "market volume (q_sm) is zero; turnover and efficiency "
                      "indicators are unavailable"});

  for (const auto& issue : issues)
    if (issue.severity == Severity::error) return outcome;

  AggregateObservation obs;
  obs.country_ = input.country;
  obs.period_ = input.period;
  obs.m0_ = MoneyAmount(input.m0);
  obs.m1_ = MoneyAmount(input.m1);
  obs.m2_ = MoneyAmount(input.m2);
  if (input.m3_reported) obs.m3_reported_ = MoneyAmount(*input.m3_reported);
  obs.market_volume_ = MoneyAmount(input.market_volume);
  obs.trading_volume_ = MoneyAmount(input.trading_volume);
  obs.gdp_ = MoneyAmount(input.gdp);
  obs.inflation_ = Percent(input.inflation_pct);
  if (input.investment_share_pct) obs.investment_share_ = Percent(*input.investment_share_pct);
  if (input.hightech_share_pct) obs.hightech_share_ = Percent(*input.hightech_share_pct);
  obs.inventive_activity_ = input.inventive_activity;
  outcome.observation = std::move(obs);
  return outcome;
}

PeriodPair PeriodPair::make(AggregateObservation prior, AggregateObservation current) {
  if (prior.country() != current.country())
    throw Error(Errc::country_mismatch,
                fmt::format("cannot pair observations for {} and {}",
                            prior.country(), current.country()));
  if (current.period() != prior.period() + 1)
    throw Error(Errc::non_consecutive_periods,
                fmt::format("periods {} and {} are not consecutive years",
                            prior.period(), current.period()));
  return PeriodPair(std::move(prior), std::move(current));
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::non_nested_aggregates: return "NonNestedAggregates";
    case Errc::negative_amount: return "NegativeAmount";
    case Errc::zero_market_volume: return "ZeroMarketVolume";
    case Errc::non_finite_percent: return "NonFinitePercent";
    case Errc::bad_period: return "BadPeriod";
    case Errc::country_mismatch: return "CountryMismatch";
    case Errc::non_consecutive_periods: return "NonConsecutivePeriods";
    case Errc::division_by_zero_m0: return "DivisionByZeroM0";
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::zero_base: return "ZeroBase";
    case Errc::numeric_overflow: return "NumericOverflow";
    case Errc::missing_label: return "MissingLabel";
    case Errc::profile_mismatch: return "ProfileMismatch";
    case Errc::nesting_violation_after_adjustment: return "NestingViolationAfterAdjustment";
    case Errc::missing_structural_indicators: return "MissingStructuralIndicators";
    case Errc::malformed_header: return "MalformedHeader";
    case Errc::missing_required_column: return "MissingRequiredColumn";
    case Errc::unknown_column: return "UnknownColumn";
    case Errc::unparsable_number: return "UnparsableNumber";
    case Errc::duplicate_record: return "DuplicateRecord";
    case Errc::insufficient_periods: return "InsufficientPeriods";
    case Errc::io_error: return "IoError";
    case Errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace smfa
