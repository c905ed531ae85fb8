#include "smfa/indicators.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace smfa {

const char* series_token(SeriesId id) {
  switch (id) {
    case SeriesId::m0: return "m0";
    case SeriesId::m1: return "m1";
    case SeriesId::m2: return "m2";
    case SeriesId::market_volume: return "q_sm";
    case SeriesId::m3: return "m3";
    case SeriesId::savings: return "s_pop";
    case SeriesId::money_multiplier: return "mu0";
    case SeriesId::gdp: return "gdp";
    case SeriesId::trading_volume: return "q_tr";
    case SeriesId::investment_share: return "omega_si";
    case SeriesId::hightech_share: return "omega_l";
    case SeriesId::inventive_activity: return "k_inv";
    case SeriesId::trading_to_m3: return "q_tr_over_m3";
  }
  return "?";
}

const char* series_label(SeriesId id) {
  switch (id) {
    case SeriesId::m0: return "M0";
    case SeriesId::m1: return "M1";
    case SeriesId::m2: return "M2";
    case SeriesId::market_volume: return "Q_sm";
    case SeriesId::m3: return "M3";
    case SeriesId::savings: return "S_pop";
    case SeriesId::money_multiplier: return "μ0";
    case SeriesId::gdp: return "GDP";
    case SeriesId::trading_volume: return "Q_tr";
    case SeriesId::investment_share: return "ω_s.i.";
    case SeriesId::hightech_share: return "ω_l";
    case SeriesId::inventive_activity: return "K_inv";
    case SeriesId::trading_to_m3: return "Q_tr/M3";
  }
  return "?";
}

bool series_inflation_comparable(SeriesId id) {
  switch (id) {
    case SeriesId::m0:
    case SeriesId::m1:
    case SeriesId::m2:
    case SeriesId::market_volume:
    case SeriesId::m3:
    case SeriesId::savings:
    case SeriesId::gdp:
    case SeriesId::trading_volume:
      return true;
    default:
      return false;
  }
}

const char* direction_token(Direction d) {
  switch (d) {
    case Direction::up: return "up";
    case Direction::down: return "down";
    case Direction::flat: return "flat";
  }
  return "?";
}

const char* direction_arrow(Direction d) {
  switch (d) {
    case Direction::up: return "↑";
    case Direction::down: return "↓";
    case Direction::flat: return "→";
  }
  return "?";
}

const char* significance_token(Significance s) {
  switch (s) {
    case Significance::significant_real_growth: return "significant_real_growth";
    case Significance::positive_insignificant: return "positive_insignificant";
    case Significance::not_outpacing_inflation: return "not_outpacing_inflation";
    case Significance::decline: return "decline";
    case Significance::not_applicable: return "not_applicable";
  }
  return "?";
}

int significance_rank(Significance s) {
  switch (s) {
    case Significance::decline: return 0;
    case Significance::not_outpacing_inflation: return 1;
    case Significance::positive_insignificant: return 2;
    case Significance::significant_real_growth: return 3;
    case Significance::not_applicable: return -1;
  }
  return -1;
}

double money_multiplier(const AggregateObservation& obs) {
  if (obs.m0().is_zero())
    throw Error(Errc::division_by_zero_m0,
                fmt::format("{} {}: m0 is zero, money multiplier undefined",
                            obs.country(), obs.period()));
  return obs.m2().to_double() / obs.m0().to_double();
}

MoneyAmount population_savings(const AggregateObservation& obs) {
  // m2 - m1 is non-negative by the nesting invariant
  return MoneyAmount(obs.m0().decimal() + (obs.m2() - obs.m1()));
}

MoneyAmount broad_money(const AggregateObservation& obs) {
  if (obs.m3_reported()) return *obs.m3_reported();
  return obs.m2() + obs.market_volume();
}

M3Source broad_money_source(const AggregateObservation& obs) {
  return obs.m3_reported() ? M3Source::reported : M3Source::synthesized;
}

TurnoverRatio turnover_ratio(const AggregateObservation& obs) {
  if (obs.market_volume().is_zero())
    throw Error(Errc::zero_market_volume,
                fmt::format("{} {}: market volume is zero, turnover undefined",
                            obs.country(), obs.period()));
  const double raw = obs.trading_volume().to_double() / obs.market_volume().to_double();
  return {raw / 100.0, raw};
}

MoneyAmount market_limit(const AggregateObservation& obs) {
  Decimal value = population_savings(obs).decimal() +
                  obs.market_volume().decimal() + (obs.m1() - obs.m0());
  return MoneyAmount(value);
}

Percent functional_efficiency(const AggregateObservation& obs) {
  const TurnoverRatio k = turnover_ratio(obs);
  const double limit = market_limit(obs).to_double();
  if (limit <= 0.0 || k.ratio <= 0.0)
    throw Error(Errc::zero_denominator,
                fmt::format("{} {}: efficiency denominator is zero",
                            obs.country(), obs.period()));
  double fe = obs.trading_volume().to_double() / (limit * k.ratio);
  // Q_sm <= lim_max, so the exact value cannot exceed 100.
  return Percent(std::min(fe, 100.0));
}

Percent market_potential(Percent fe) {
  if (fe.value() < 0.0 || fe.value() > 100.0)
    throw Error(Errc::out_of_range,
                fmt::format("efficiency {} out of [0, 100]", fe.value()));
  return Percent(100.0 - fe.value());
}

Percent trading_to_m3(const AggregateObservation& obs) {
  const MoneyAmount m3 = broad_money(obs);
  if (m3.is_zero())
    throw Error(Errc::zero_denominator,
                fmt::format("{} {}: m3 is zero", obs.country(), obs.period()));
  return Percent(obs.trading_volume().to_double() / m3.to_double());
}

Percent percent_change(double prior, double current) {
  if (prior == 0.0)
    throw Error(Errc::zero_base, "cannot compute change from a zero base");
  return Percent(100.0 * (current - prior) / prior);
}

TrendAssessment classify_trend(SeriesId series, Percent delta, Percent inflation) {
  const double d = delta.value();
  Direction direction = d > 0.0 ? Direction::up
                      : d < 0.0 ? Direction::down
                                : Direction::flat;
  Significance significance = Significance::not_applicable;
  if (series_inflation_comparable(series)) {
    const double pi = inflation.value();
    if (d <= 0.0)
      significance = Significance::decline;
    else if (d > pi + 10.0)
      significance = Significance::significant_real_growth;
    else if (d > pi)
      significance = Significance::positive_insignificant;
    else
      significance = Significance::not_outpacing_inflation;
  }
  return {series, delta, direction, significance};
}

IndicatorSet compute_indicators(const AggregateObservation& obs) {
  IndicatorSet set;
  set.period = obs.period();
  set.savings = population_savings(obs);
  set.m3 = broad_money(obs);
  set.m3_source = broad_money_source(obs);
  set.market_limit = market_limit(obs);

  if (!obs.m0().is_zero()) {
    set.money_multiplier = money_multiplier(obs);
  } else {
    set.notes.push_back({Errc::division_by_zero_m0, Severity::warning,
                         "m0 is zero; money multiplier unavailable"});
  }

  if (!obs.market_volume().is_zero()) {
    const TurnoverRatio k = turnover_ratio(obs);
    set.turnover_ratio = k.ratio;
    set.turnover_ratio_raw = k.raw;
    if (k.ratio > 0.0) {
      const Percent fe = functional_efficiency(obs);
      set.functional_efficiency_pct = fe.value();
      set.market_potential_pct = market_potential(fe).value();
    } else {
      set.notes.push_back({Errc::zero_denominator, Severity::warning,
                           "trading volume is zero; efficiency unavailable"});
    }
  } else {
    set.notes.push_back({Errc::zero_market_volume, Severity::warning,
                         "market volume is zero; turnover and efficiency unavailable"});
  }

  if (!set.m3.is_zero()) {
    set.trading_to_m3_pct = trading_to_m3(obs).value();
  } else {
    set.notes.push_back({Errc::zero_denominator, Severity::warning,
                         "m3 is zero; trading/M3 ratio unavailable"});
  }
  return set;
}

namespace {

void push_trend(std::vector<TrendAssessment>& out, SeriesId id, double prior,
                double current, Percent inflation) {
  if (prior == 0.0) return;  // no base period value
  out.push_back(classify_trend(id, percent_change(prior, current), inflation));
}

}  // namespace

std::vector<TrendAssessment> compute_trends(const PeriodPair& pair) {
  const AggregateObservation& a = pair.prior();
  const AggregateObservation& b = pair.current();
  const Percent pi = b.inflation();
  const IndicatorSet ia = compute_indicators(a);
  const IndicatorSet ib = compute_indicators(b);

  std::vector<TrendAssessment> trends;
  push_trend(trends, SeriesId::m0, a.m0().to_double(), b.m0().to_double(), pi);
  push_trend(trends, SeriesId::m1, a.m1().to_double(), b.m1().to_double(), pi);
  push_trend(trends, SeriesId::m2, a.m2().to_double(), b.m2().to_double(), pi);
  push_trend(trends, SeriesId::market_volume, a.market_volume().to_double(),
             b.market_volume().to_double(), pi);
  push_trend(trends, SeriesId::m3, ia.m3.to_double(), ib.m3.to_double(), pi);
  push_trend(trends, SeriesId::savings, ia.savings.to_double(),
             ib.savings.to_double(), pi);
  if (ia.money_multiplier && ib.money_multiplier)
    push_trend(trends, SeriesId::money_multiplier, *ia.money_multiplier,
               *ib.money_multiplier, pi);
  push_trend(trends, SeriesId::gdp, a.gdp().to_double(), b.gdp().to_double(), pi);
  push_trend(trends, SeriesId::trading_volume, a.trading_volume().to_double(),
             b.trading_volume().to_double(), pi);
  if (a.investment_share() && b.investment_share())
    push_trend(trends, SeriesId::investment_share, a.investment_share()->value(),
               b.investment_share()->value(), pi);
  if (a.hightech_share() && b.hightech_share())
    push_trend(trends, SeriesId::hightech_share, a.hightech_share()->value(),
               b.hightech_share()->value(), pi);
  if (a.inventive_activity() && b.inventive_activity())
    push_trend(trends, SeriesId::inventive_activity, *a.inventive_activity(),
               *b.inventive_activity(), pi);
  if (ia.trading_to_m3_pct && ib.trading_to_m3_pct)
    push_trend(trends, SeriesId::trading_to_m3, *ia.trading_to_m3_pct,
               *ib.trading_to_m3_pct, pi);
  return trends;
}

const TrendAssessment* find_trend(const std::vector<TrendAssessment>& trends,
                                  SeriesId id) {
  auto it = std::find_if(trends.begin(), trends.end(),
                         [id](const TrendAssessment& t) { return t.series == id; });
  return it == trends.end() ? nullptr : &*it;
}

}  // namespace smfa
