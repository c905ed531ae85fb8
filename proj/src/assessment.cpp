#include "smfa/assessment.hpp"

#include <fmt/format.h>

namespace smfa {

const char* market_function_name(MarketFunction f) {
  return f == MarketFunction::accumulation ? "accumulation" : "redistribution";
}

const char* required_move_token(RequiredMove m) {
  switch (m) {
    case RequiredMove::strictly_up: return "strictly_up";
    case RequiredMove::strictly_down: return "strictly_down";
    case RequiredMove::above_inflation: return "above_inflation";
  }
  return "?";
}

const char* verdict_status_token(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::performed: return "performed";
    case VerdictStatus::not_performed: return "not_performed";
    case VerdictStatus::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

bool clause_satisfied(RequiredMove required, Percent delta, Percent inflation) {
  switch (required) {
    case RequiredMove::strictly_up: return delta.value() > 0.0;
    case RequiredMove::strictly_down: return delta.value() < 0.0;
    case RequiredMove::above_inflation: return delta.value() > inflation.value();
  }
  return false;
}

ClauseResult make_clause(std::string id, std::string label, RequiredMove required,
                         const TrendAssessment* trend, Percent inflation) {
  ClauseResult clause{std::move(id), std::move(label), required, std::nullopt, false};
  if (trend) {
    clause.observed = *trend;
    clause.satisfied = clause_satisfied(required, trend->delta, inflation);
  }
  return clause;
}

// Names the input gap that prevents a series trend, in display terms.
std::optional<std::string> trend_gap(const PeriodPair& pair, SeriesId id) {
  const AggregateObservation& a = pair.prior();
  const AggregateObservation& b = pair.current();
  switch (id) {
    case SeriesId::money_multiplier:
      if (a.m0().is_zero()) return fmt::format("μ0 undefined in {} (m0 is zero)", a.period());
      if (b.m0().is_zero()) return fmt::format("μ0 undefined in {} (m0 is zero)", b.period());
      return std::nullopt;
    case SeriesId::investment_share:
      if (!a.investment_share()) return fmt::format("ω_s.i. missing in {}", a.period());
      if (!b.investment_share()) return fmt::format("ω_s.i. missing in {}", b.period());
      return std::nullopt;
    case SeriesId::hightech_share:
      if (!a.hightech_share()) return fmt::format("ω_l missing in {}", a.period());
      if (!b.hightech_share()) return fmt::format("ω_l missing in {}", b.period());
      return std::nullopt;
    case SeriesId::inventive_activity:
      if (!a.inventive_activity()) return fmt::format("K_inv missing in {}", a.period());
      if (!b.inventive_activity()) return fmt::format("K_inv missing in {}", b.period());
      return std::nullopt;
    case SeriesId::trading_to_m3:
      if (broad_money(a).is_zero())
        return fmt::format("Q_tr/M3 undefined in {} (M3 is zero)", a.period());
      if (broad_money(b).is_zero())
        return fmt::format("Q_tr/M3 undefined in {} (M3 is zero)", b.period());
      return fmt::format("Q_tr/M3 is zero in {}", a.period());
    default:
      // money-level series: the only remaining gap is a zero base
      return fmt::format("{} is zero in {}", series_label(id), a.period());
  }
}

std::string clause_detail(const ClauseResult& clause, Percent inflation) {
  if (!clause.observed) return fmt::format("{} (no data)", clause.label);
  const double d = clause.observed->delta.value();
  const std::string delta =
      fmt::format("{}{}%", d >= 0.0 ? "+" : "", format_fixed(d, 2));
  switch (clause.required) {
    case RequiredMove::strictly_up:
      return fmt::format("{} ({}, rise required)", clause.label, delta);
    case RequiredMove::strictly_down:
      return fmt::format("{} ({}, fall required)", clause.label, delta);
    case RequiredMove::above_inflation:
      return fmt::format("{} ({} vs π {}%)", clause.label, delta,
                         format_fixed(inflation.value(), 2));
  }
  return clause.label;
}

std::string build_narrative(const FunctionVerdict& verdict, const PeriodPair& pair) {
  const std::string head =
      fmt::format("The {} function over {} {}->{}",
                  market_function_name(verdict.function), pair.prior().country(),
                  pair.prior().period(), pair.current().period());
  const Percent pi = pair.current().inflation();

  if (verdict.status == VerdictStatus::indeterminate) {
    std::string gaps;
    for (const auto& gap : verdict.missing_inputs) {
      if (!gaps.empty()) gaps += "; ";
      gaps += gap;
    }
    return fmt::format("{} cannot be assessed: {}.", head, gaps);
  }

  std::string failing, holding;
  for (const auto& clause : verdict.clauses) {
    std::string& bucket = clause.satisfied ? holding : failing;
    if (!bucket.empty()) bucket += "; ";
    bucket += clause_detail(clause, pi);
  }
  if (verdict.status == VerdictStatus::performed)
    return fmt::format("{} is performed: {}.", head, holding);
  std::string out = fmt::format("{} is not performed. Failing: {}.", head, failing);
  if (!holding.empty()) out += fmt::format(" Holding: {}.", holding);
  return out;
}

FunctionVerdict finalize(FunctionVerdict verdict, const PeriodPair& pair) {
  bool all_satisfied = true;
  bool any_missing = false;
  for (const auto& clause : verdict.clauses) {
    if (!clause.observed) any_missing = true;
    if (!clause.satisfied) all_satisfied = false;
  }
  verdict.status = any_missing      ? VerdictStatus::indeterminate
                   : all_satisfied  ? VerdictStatus::performed
                                    : VerdictStatus::not_performed;
  verdict.narrative = build_narrative(verdict, pair);
  return verdict;
}

}  // namespace

FunctionVerdict assess_accumulation(const PeriodPair& pair) {
  const Percent pi = pair.current().inflation();
  const auto trends = compute_trends(pair);

  FunctionVerdict verdict;
  verdict.function = MarketFunction::accumulation;
  verdict.clauses.push_back(make_clause(
      "mu0_up", "μ0↑", RequiredMove::strictly_up,
      find_trend(trends, SeriesId::money_multiplier), pi));
  verdict.clauses.push_back(make_clause(
      "q_sm_up_real", "Q_sm↑ real", RequiredMove::above_inflation,
      find_trend(trends, SeriesId::market_volume), pi));
  verdict.clauses.push_back(make_clause(
      "s_pop_down", "S_pop↓", RequiredMove::strictly_down,
      find_trend(trends, SeriesId::savings), pi));
  verdict.clauses.push_back(make_clause(
      "m3_up_real", "M3↑ real", RequiredMove::above_inflation,
      find_trend(trends, SeriesId::m3), pi));

  const SeriesId needed[] = {SeriesId::money_multiplier, SeriesId::market_volume,
                             SeriesId::savings, SeriesId::m3};
  for (std::size_t i = 0; i < verdict.clauses.size(); ++i)
    if (!verdict.clauses[i].observed)
      if (auto gap = trend_gap(pair, needed[i]))
        verdict.missing_inputs.push_back(*gap);

  return finalize(std::move(verdict), pair);
}

FunctionVerdict assess_redistribution(const PeriodPair& pair) {
  const Percent pi = pair.current().inflation();
  const auto trends = compute_trends(pair);

  FunctionVerdict verdict;
  verdict.function = MarketFunction::redistribution;
  verdict.clauses.push_back(make_clause(
      "q_tr_over_m3_up", "Δ(Q_tr/M3)↑", RequiredMove::strictly_up,
      find_trend(trends, SeriesId::trading_to_m3), pi));
  verdict.clauses.push_back(make_clause(
      "omega_si_up", "ω_s.i.↑", RequiredMove::strictly_up,
      find_trend(trends, SeriesId::investment_share), pi));
  verdict.clauses.push_back(make_clause(
      "omega_l_up", "ω_l↑", RequiredMove::strictly_up,
      find_trend(trends, SeriesId::hightech_share), pi));
  verdict.clauses.push_back(make_clause(
      "k_inv_up", "K_inv↑", RequiredMove::strictly_up,
      find_trend(trends, SeriesId::inventive_activity), pi));
  verdict.clauses.push_back(make_clause(
      "q_tr_above_inflation", "ΔQ_tr>π", RequiredMove::above_inflation,
      find_trend(trends, SeriesId::trading_volume), pi));
  verdict.clauses.push_back(make_clause(
      "gdp_above_inflation", "ΔGDP>π", RequiredMove::above_inflation,
      find_trend(trends, SeriesId::gdp), pi));

  const SeriesId needed[] = {SeriesId::trading_to_m3, SeriesId::investment_share,
                             SeriesId::hightech_share, SeriesId::inventive_activity,
                             SeriesId::trading_volume, SeriesId::gdp};
  for (std::size_t i = 0; i < verdict.clauses.size(); ++i)
    if (!verdict.clauses[i].observed)
      if (auto gap = trend_gap(pair, needed[i]))
        verdict.missing_inputs.push_back(*gap);

  return finalize(std::move(verdict), pair);
}

AssessmentBundle assess_all(const PeriodPair& pair) {
  return AssessmentBundle{pair,
                          compute_indicators(pair.prior()),
                          compute_indicators(pair.current()),
                          compute_trends(pair),
                          assess_accumulation(pair),
                          assess_redistribution(pair)};
}

}  // namespace smfa
