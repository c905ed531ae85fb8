#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smfa/decimal.hpp"
#include "smfa/errors.hpp"

namespace smfa {

/// Non-negative money level in billions of national currency.
class MoneyAmount {
 public:
  MoneyAmount() = default;
  explicit MoneyAmount(Decimal value) : value_(value) {
    if (value.is_negative())
      throw Error(Errc::negative_amount, "money amount must be non-negative");
  }

  Decimal decimal() const { return value_; }
  double to_double() const { return value_.to_double(); }
  std::string str() const { return value_.str(); }
  bool is_zero() const { return value_.is_zero(); }

  MoneyAmount operator+(MoneyAmount rhs) const {
    return MoneyAmount(value_ + rhs.value_);
  }
  /// Difference as a plain decimal; may be negative, caller re-wraps.
  Decimal operator-(MoneyAmount rhs) const { return value_ - rhs.value_; }

  auto operator<=>(const MoneyAmount&) const = default;

 private:
  Decimal value_;
};

/// Percentage points; negative values are declines.
class Percent {
 public:
  Percent() = default;
  explicit Percent(double value);

  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

/// Raw per-period input before validation. Fields mirror the canonical
/// observation but carry unchecked decimals so that validation can report
/// every violation instead of failing on the first construction.
struct ObservationInput {
  std::string country;
  int period = 0;  // calendar year; the methodology is strictly annual
  Decimal m0;
  Decimal m1;
  Decimal m2;
  std::optional<Decimal> m3_reported;
  Decimal market_volume;   // securities and other assets on market accounts
  Decimal trading_volume;
  Decimal gdp;
  double inflation_pct = 0.0;
  std::optional<double> investment_share_pct;  // fixed-asset investment, % of GDP
  std::optional<double> hightech_share_pct;    // high-tech output, % of GDP
  std::optional<double> inventive_activity;    // dimensionless ratio
};

struct ValidationOutcome;

/// One validated annual observation. Immutable; safe to share across threads.
class AggregateObservation {
 public:
  const std::string& country() const { return country_; }
  int period() const { return period_; }
  MoneyAmount m0() const { return m0_; }
  MoneyAmount m1() const { return m1_; }
  MoneyAmount m2() const { return m2_; }
  const std::optional<MoneyAmount>& m3_reported() const { return m3_reported_; }
  MoneyAmount market_volume() const { return market_volume_; }
  MoneyAmount trading_volume() const { return trading_volume_; }
  MoneyAmount gdp() const { return gdp_; }
  Percent inflation() const { return inflation_; }
  const std::optional<Percent>& investment_share() const { return investment_share_; }
  const std::optional<Percent>& hightech_share() const { return hightech_share_; }
  const std::optional<double>& inventive_activity() const { return inventive_activity_; }

 private:
  friend ValidationOutcome validate_observation(const ObservationInput&);

  AggregateObservation() = default;

  std::string country_;
  int period_ = 0;
  MoneyAmount m0_, m1_, m2_;
  std::optional<MoneyAmount> m3_reported_;
  MoneyAmount market_volume_, trading_volume_, gdp_;
  Percent inflation_;
  std::optional<Percent> investment_share_, hightech_share_;
  std::optional<double> inventive_activity_;
};

struct ValidationOutcome {
  // Present iff no error-severity issue was found; warnings may coexist.
  std::optional<AggregateObservation> observation;
  std::vector<ValidationIssue> issues;

  bool ok() const { return observation.has_value(); }
  std::vector<ValidationIssue> warnings() const;
};

/// Checks every structural invariant (nesting m0 <= m1 <= m2, reported M3 >=
/// M2, sign constraints, finite percents, annual period) and reports all
/// violations together. A zero market volume is a warning: it only becomes
/// fatal inside the turnover and efficiency computations.
ValidationOutcome validate_observation(const ObservationInput& input);

/// Two consecutive annual observations for the same country.
class PeriodPair {
 public:
  static PeriodPair make(AggregateObservation prior, AggregateObservation current);

  const AggregateObservation& prior() const { return prior_; }
  const AggregateObservation& current() const { return current_; }

 private:
  PeriodPair(AggregateObservation prior, AggregateObservation current)
      : prior_(std::move(prior)), current_(std::move(current)) {}

  AggregateObservation prior_;
  AggregateObservation current_;
};

}  // namespace smfa
