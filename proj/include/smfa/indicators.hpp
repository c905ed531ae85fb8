#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smfa/domain.hpp"

namespace smfa {

enum class SeriesId {
  m0,
  m1,
  m2,
  market_volume,   // Q_sm
  m3,
  savings,         // S_pop
  money_multiplier,
  gdp,
  trading_volume,  // Q_tr
  investment_share,
  hightech_share,
  inventive_activity,
  trading_to_m3,
};

/// Stable ASCII token (for files/JSON) and display label (for tables).
const char* series_token(SeriesId id);
const char* series_label(SeriesId id);

/// Money-level series are compared against inflation; ratio series carry
/// direction only.
bool series_inflation_comparable(SeriesId id);

enum class Direction { up, down, flat };
enum class Significance {
  significant_real_growth,   // delta > pi + 10
  positive_insignificant,    // pi < delta <= pi + 10
  not_outpacing_inflation,   // 0 < delta <= pi
  decline,                   // delta <= 0
  not_applicable,            // ratio series
};

const char* direction_token(Direction d);
const char* direction_arrow(Direction d);
const char* significance_token(Significance s);

/// Rank for monotonicity checks: higher is stronger growth.
int significance_rank(Significance s);

struct TrendAssessment {
  SeriesId series;
  Percent delta;  // 100 * (current - prior) / prior
  Direction direction;
  Significance significance;
};

enum class M3Source { reported, synthesized };

struct TurnoverRatio {
  double ratio;  // raw / 100
  double raw;    // trading volume over market volume
};

// --- per-observation operations -------------------------------------------

/// Money multiplier: M2 over M0. Throws division_by_zero_m0.
double money_multiplier(const AggregateObservation& obs);

/// Population savings: M0 + (M2 - M1). Exact; non-negative by nesting.
MoneyAmount population_savings(const AggregateObservation& obs);

/// Broad money M3: the reported value when the statistics office publishes
/// one, otherwise synthesized as M2 + market volume. Exact.
MoneyAmount broad_money(const AggregateObservation& obs);
M3Source broad_money_source(const AggregateObservation& obs);

/// Turnover: trading volume over market volume, reported both raw and
/// scaled by 1/100. Throws zero_market_volume.
TurnoverRatio turnover_ratio(const AggregateObservation& obs);

/// Maximum market limit: S_pop + Q_sm + (M1 - M0). Exact; algebraically
/// equal to the synthesized M3.
MoneyAmount market_limit(const AggregateObservation& obs);

/// Functional efficiency in percent: Q_tr / (lim_max * k_tur). The market
/// volume never exceeds the limit, so the exact value lies in (0, 100];
/// float round-off is capped at 100. Throws zero_market_volume /
/// zero_denominator.
Percent functional_efficiency(const AggregateObservation& obs);

/// Market potential: 100 - FE. Throws out_of_range unless 0 <= fe <= 100.
Percent market_potential(Percent fe);

/// Trading volume as a share of broad money (the quotient rendered in
/// percentage points). Throws zero_denominator when M3 is zero.
Percent trading_to_m3(const AggregateObservation& obs);

// --- cross-period operations -----------------------------------------------

/// Year-over-year change: 100 * (current - prior) / prior. Throws zero_base.
Percent percent_change(double prior, double current);

/// Direction is the sign of the delta; the significance class compares the
/// delta against inflation for money-level series and is not_applicable for
/// ratio series.
TrendAssessment classify_trend(SeriesId series, Percent delta, Percent inflation);

// --- bundles ----------------------------------------------------------------

/// Every derived indicator for one period. Quotient indicators are absent
/// (with a note) when their denominators are zero; the exact-decimal sums
/// are always present.
struct IndicatorSet {
  int period = 0;
  std::optional<double> money_multiplier;
  MoneyAmount savings;
  MoneyAmount m3;
  M3Source m3_source = M3Source::synthesized;
  std::optional<double> turnover_ratio;
  std::optional<double> turnover_ratio_raw;
  MoneyAmount market_limit;
  std::optional<double> functional_efficiency_pct;
  std::optional<double> market_potential_pct;
  std::optional<double> trading_to_m3_pct;
  std::vector<ValidationIssue> notes;
};

IndicatorSet compute_indicators(const AggregateObservation& obs);

/// Trends for every series both periods can support, in table order.
/// Inflation is taken from the current (later) period. Series with a zero
/// prior value or missing optional inputs are skipped.
std::vector<TrendAssessment> compute_trends(const PeriodPair& pair);

const TrendAssessment* find_trend(const std::vector<TrendAssessment>& trends,
                                  SeriesId id);

}  // namespace smfa
