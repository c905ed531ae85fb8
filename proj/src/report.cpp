#include "smfa/report.hpp"

#include <cctype>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "smfa/version.hpp"

namespace smfa {

using ordered_json = nlohmann::ordered_json;

std::optional<ReportFormat> report_format_from_name(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  return std::nullopt;
}

const char* report_format_extension(ReportFormat format) {
  return format == ReportFormat::json ? "json" : "md";
}

namespace {

ReportRow money_row(SeriesId id, MoneyAmount prior, MoneyAmount current,
                    const std::vector<TrendAssessment>& trends) {
  ReportRow row;
  row.label = series_label(id);
  row.prior_text = prior.decimal().str_fixed(1);
  row.current_text = current.decimal().str_fixed(1);
  if (const auto* t = find_trend(trends, id)) row.trend = *t;
  row.inflation_comparable = series_inflation_comparable(id);
  return row;
}

ReportRow ratio_row(SeriesId id, std::optional<double> prior,
                    std::optional<double> current, int digits,
                    const std::vector<TrendAssessment>& trends,
                    std::vector<std::string>& warnings,
                    const char* placeholder_note = nullptr) {
  ReportRow row;
  row.label = series_label(id);
  row.prior_text = prior ? format_fixed(*prior, digits) : "0.0";
  row.current_text = current ? format_fixed(*current, digits) : "0.0";
  if (!prior || !current) {
    row.flagged = true;
    if (placeholder_note) warnings.push_back(placeholder_note);
  }
  if (const auto* t = find_trend(trends, id)) row.trend = *t;
  row.inflation_comparable = series_inflation_comparable(id);
  return row;
}

std::string dual_turnover_text(const IndicatorSet& set) {
  if (!set.turnover_ratio) return "0.0";
  return fmt::format("{} ({})", format_fixed(*set.turnover_ratio, 2),
                     format_fixed(*set.turnover_ratio_raw, 2));
}

ordered_json money_json(MoneyAmount value) { return value.to_double(); }

ordered_json opt_json(const std::optional<double>& value) {
  if (!value) return nullptr;
  return *value;
}

ordered_json observation_json(const AggregateObservation& obs) {
  ordered_json j;
  j["period"] = obs.period();
  j["m0"] = money_json(obs.m0());
  j["m1"] = money_json(obs.m1());
  j["m2"] = money_json(obs.m2());
  j["m3_reported"] = obs.m3_reported()
                         ? ordered_json(obs.m3_reported()->to_double())
                         : ordered_json(nullptr);
  j["q_sm"] = money_json(obs.market_volume());
  j["q_tr"] = money_json(obs.trading_volume());
  j["gdp"] = money_json(obs.gdp());
  j["pi"] = obs.inflation().value();
  j["omega_si"] = obs.investment_share()
                      ? ordered_json(obs.investment_share()->value())
                      : ordered_json(nullptr);
  j["omega_l"] = obs.hightech_share() ? ordered_json(obs.hightech_share()->value())
                                      : ordered_json(nullptr);
  j["k_inv"] = obs.inventive_activity() ? ordered_json(*obs.inventive_activity())
                                        : ordered_json(nullptr);
  return j;
}

ordered_json indicators_json(const IndicatorSet& set) {
  ordered_json j;
  j["period"] = set.period;
  j["money_multiplier"] = opt_json(set.money_multiplier);
  j["s_pop"] = money_json(set.savings);
  j["m3"] = money_json(set.m3);
  j["m3_source"] = set.m3_source == M3Source::reported ? "reported" : "synthesized";
  j["turnover_ratio"] = opt_json(set.turnover_ratio);
  j["turnover_ratio_raw"] = opt_json(set.turnover_ratio_raw);
  j["market_limit"] = money_json(set.market_limit);
  j["functional_efficiency_pct"] = opt_json(set.functional_efficiency_pct);
  j["market_potential_pct"] = opt_json(set.market_potential_pct);
  j["trading_to_m3_pct"] = opt_json(set.trading_to_m3_pct);
  ordered_json notes = ordered_json::array();
  for (const auto& note : set.notes) notes.push_back(note.message);
  j["notes"] = notes;
  return j;
}

ordered_json trend_json(const TrendAssessment& trend) {
  ordered_json j;
  j["series"] = series_token(trend.series);
  j["label"] = series_label(trend.series);
  j["delta_pct"] = trend.delta.value();
  j["direction"] = direction_token(trend.direction);
  j["significance"] = significance_token(trend.significance);
  return j;
}

ordered_json verdict_json(const FunctionVerdict& verdict) {
  ordered_json j;
  j["performed"] = verdict.performed();
  j["status"] = verdict_status_token(verdict.status);
  ordered_json clauses = ordered_json::array();
  for (const auto& clause : verdict.clauses) {
    ordered_json c;
    c["id"] = clause.id;
    c["label"] = clause.label;
    c["required"] = required_move_token(clause.required);
    c["satisfied"] = clause.satisfied;
    c["data_available"] = clause.observed.has_value();
    if (clause.observed) {
      c["delta_pct"] = clause.observed->delta.value();
      c["direction"] = direction_token(clause.observed->direction);
      c["significance"] = significance_token(clause.observed->significance);
    } else {
      c["delta_pct"] = nullptr;
      c["direction"] = nullptr;
      c["significance"] = nullptr;
    }
    clauses.push_back(std::move(c));
  }
  j["clauses"] = std::move(clauses);
  j["missing_inputs"] = verdict.missing_inputs;
  j["narrative"] = verdict.narrative;
  return j;
}

const char* required_move_display(RequiredMove m) {
  switch (m) {
    case RequiredMove::strictly_up: return "rise";
    case RequiredMove::strictly_down: return "fall";
    case RequiredMove::above_inflation: return "grow above π";
  }
  return "?";
}

void emit_table(std::string& out, const std::string& title,
                const std::vector<ReportRow>& rows, int prior, int current,
                double inflation) {
  out += fmt::format("## {}\n\n", title);
  out += fmt::format("| Indicator | {} | {} | Δ to prior year, % |  | π, % |\n",
                     prior, current);
  out += "|---|---|---|---|---|---|\n";
  bool first_comparable = true;
  for (const auto& row : rows) {
    std::string delta = "—", arrow = "—", pi_cell = "—";
    if (row.trend) {
      delta = format_fixed(row.trend->delta.value(), 1);
      arrow = direction_arrow(row.trend->direction);
    }
    if (row.inflation_comparable) {
      pi_cell = first_comparable ? format_fixed(inflation, 2) : "";
      first_comparable = false;
    }
    out += fmt::format("| {} | {}{} | {}{} | {} | {} | {} |\n", row.label,
                       row.prior_text, row.flagged ? " ⚠" : "",
                       row.current_text, row.flagged ? " ⚠" : "", delta, arrow,
                       pi_cell);
  }
  out += "\n";
}

void emit_verdict(std::string& out, const FunctionVerdict& verdict) {
  std::string status;
  switch (verdict.status) {
    case VerdictStatus::performed: status = "PERFORMED"; break;
    case VerdictStatus::not_performed: status = "NOT PERFORMED"; break;
    case VerdictStatus::indeterminate: status = "INDETERMINATE"; break;
  }
  const char* name = market_function_name(verdict.function);
  out += fmt::format("### {}{}: {}\n\n",
                     static_cast<char>(std::toupper(name[0])), name + 1, status);
  out += "| Condition | Required | Δ, % |  | Satisfied |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& clause : verdict.clauses) {
    std::string delta = "n/a", arrow = "—";
    if (clause.observed) {
      delta = format_fixed(clause.observed->delta.value(), 2);
      arrow = direction_arrow(clause.observed->direction);
    }
    out += fmt::format("| {} | {} | {} | {} | {} |\n", clause.label,
                       required_move_display(clause.required), delta, arrow,
                       clause.satisfied ? "yes" : "no");
  }
  if (!verdict.missing_inputs.empty()) {
    out += "\nMissing inputs: ";
    for (std::size_t i = 0; i < verdict.missing_inputs.size(); ++i) {
      if (i) out += "; ";
      out += verdict.missing_inputs[i];
    }
    out += "\n";
  }
  out += fmt::format("\n{}\n\n", verdict.narrative);
}

}  // namespace

AssessmentReport build_report(const CountryProfile& profile,
                              const AssessmentBundle& bundle,
                              std::vector<std::string> warnings) {
  AssessmentReport report{profile, bundle, {}, {}, {}, std::move(warnings)};
  const auto& trends = bundle.trends;
  const AggregateObservation& a = bundle.pair.prior();
  const AggregateObservation& b = bundle.pair.current();
  const IndicatorSet& ia = bundle.prior_indicators;
  const IndicatorSet& ib = bundle.current_indicators;

  auto opt_pct = [](const std::optional<Percent>& p) -> std::optional<double> {
    if (!p) return std::nullopt;
    return p->value();
  };

  auto& acc = report.accumulation_rows;
  acc.push_back(money_row(SeriesId::m0, a.m0(), b.m0(), trends));
  acc.push_back(money_row(SeriesId::m1, a.m1(), b.m1(), trends));
  acc.push_back(money_row(SeriesId::m2, a.m2(), b.m2(), trends));
  acc.push_back(money_row(SeriesId::market_volume, a.market_volume(),
                          b.market_volume(), trends));
  acc.push_back(money_row(SeriesId::m3, ia.m3, ib.m3, trends));
  acc.push_back(money_row(SeriesId::savings, ia.savings, ib.savings, trends));
  acc.push_back(ratio_row(SeriesId::money_multiplier, ia.money_multiplier,
                          ib.money_multiplier, 2, trends, report.warnings,
                          "money multiplier unavailable (m0 is zero), shown as 0.0"));

  auto& red = report.redistribution_rows;
  red.push_back(money_row(SeriesId::gdp, a.gdp(), b.gdp(), trends));
  red.push_back(money_row(SeriesId::m3, ia.m3, ib.m3, trends));
  red.push_back(money_row(SeriesId::trading_volume, a.trading_volume(),
                          b.trading_volume(), trends));
  if (a.investment_share() || b.investment_share())
    red.push_back(ratio_row(SeriesId::investment_share,
                            opt_pct(a.investment_share()),
                            opt_pct(b.investment_share()), 1, trends,
                            report.warnings));
  if (a.hightech_share() || b.hightech_share())
    red.push_back(ratio_row(SeriesId::hightech_share, opt_pct(a.hightech_share()),
                            opt_pct(b.hightech_share()), 1, trends,
                            report.warnings));
  if (a.inventive_activity() || b.inventive_activity())
    red.push_back(ratio_row(SeriesId::inventive_activity, a.inventive_activity(),
                            b.inventive_activity(), 2, trends, report.warnings));
  red.push_back(ratio_row(SeriesId::trading_to_m3, ia.trading_to_m3_pct,
                          ib.trading_to_m3_pct, 2, trends, report.warnings));

  auto& perf = report.performance_rows;
  {
    ReportRow k;
    k.label = "K_tur";
    k.prior_text = dual_turnover_text(ia);
    k.current_text = dual_turnover_text(ib);
    k.flagged = !ia.turnover_ratio || !ib.turnover_ratio;
    perf.push_back(std::move(k));

    ReportRow lim;
    lim.label = "lim_max";
    lim.prior_text = ia.market_limit.decimal().str_fixed(1);
    lim.current_text = ib.market_limit.decimal().str_fixed(1);
    perf.push_back(std::move(lim));

    ReportRow fe;
    fe.label = "FE_sm (%)";
    fe.prior_text = ia.functional_efficiency_pct
                        ? format_fixed(*ia.functional_efficiency_pct, 2)
                        : "0.0";
    fe.current_text = ib.functional_efficiency_pct
                          ? format_fixed(*ib.functional_efficiency_pct, 2)
                          : "0.0";
    fe.flagged = !ia.functional_efficiency_pct || !ib.functional_efficiency_pct;
    perf.push_back(std::move(fe));

    ReportRow smp;
    smp.label = "SMP (%)";
    smp.prior_text = ia.market_potential_pct
                         ? format_fixed(*ia.market_potential_pct, 2)
                         : "0.0";
    smp.current_text = ib.market_potential_pct
                           ? format_fixed(*ib.market_potential_pct, 2)
                           : "0.0";
    smp.flagged = !ia.market_potential_pct || !ib.market_potential_pct;
    perf.push_back(std::move(smp));

    if (perf[0].flagged || perf[2].flagged)
      report.warnings.push_back(
          "turnover/efficiency indicators unavailable for at least one period "
          "(zero market or trading volume); placeholder 0.0 shown");
  }

  for (const auto& set : {ia, ib})
    for (const auto& note : set.notes)
      report.warnings.push_back(
          fmt::format("{} {}: {}", b.country(), set.period, note.message));

  return report;
}

std::string emit_json(const AssessmentReport& report) {
  const AssessmentBundle& bundle = report.bundle;
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["generator"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["country"] = bundle.pair.prior().country();
  j["profile"] = {{"code", report.profile.code},
                  {"name", report.profile.name},
                  {"m2_rule", m2_rule_name(report.profile.m2_rule)},
                  {"m3_rule", m3_rule_name(report.profile.m3_rule)}};
  j["periods"] = {{"prior", bundle.pair.prior().period()},
                  {"current", bundle.pair.current().period()}};
  j["inflation_pct"] = bundle.pair.current().inflation().value();
  j["observations"] = {observation_json(bundle.pair.prior()),
                       observation_json(bundle.pair.current())};
  j["indicators"] = {indicators_json(bundle.prior_indicators),
                     indicators_json(bundle.current_indicators)};
  ordered_json trends = ordered_json::array();
  for (const auto& trend : bundle.trends) trends.push_back(trend_json(trend));
  j["trends"] = std::move(trends);
  j["verdicts"] = {{"accumulation", verdict_json(bundle.accumulation)},
                   {"redistribution", verdict_json(bundle.redistribution)}};
  j["summary"] = {
      {"functional_efficiency_pct",
       {opt_json(bundle.prior_indicators.functional_efficiency_pct),
        opt_json(bundle.current_indicators.functional_efficiency_pct)}},
      {"market_potential_pct",
       {opt_json(bundle.prior_indicators.market_potential_pct),
        opt_json(bundle.current_indicators.market_potential_pct)}},
      {"accumulation_performed", bundle.accumulation.performed()},
      {"redistribution_performed", bundle.redistribution.performed()}};
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

std::string emit_markdown(const AssessmentReport& report) {
  const AssessmentBundle& bundle = report.bundle;
  const int prior = bundle.pair.prior().period();
  const int current = bundle.pair.current().period();
  const double pi = bundle.pair.current().inflation().value();

  std::string out;
  out += fmt::format("# Securities market functional assessment — {} {}→{}\n\n",
                     bundle.pair.prior().country(), prior, current);
  out += fmt::format("Profile: {} ({}) — m2 rule: {}, m3 rule: {}  \n",
                     report.profile.name, report.profile.code,
                     m2_rule_name(report.profile.m2_rule),
                     m3_rule_name(report.profile.m3_rule));
  out += fmt::format("Inflation π ({}): {}%  \n", current, format_fixed(pi, 2));
  out += fmt::format("M3 source: {}  \n\n",
                     bundle.current_indicators.m3_source == M3Source::reported
                         ? "reported"
                         : "synthesized (M2 + Q_sm)");

  emit_table(out, "Money supply and accumulation indicators",
             report.accumulation_rows, prior, current, pi);
  emit_table(out, "Redistribution indicators", report.redistribution_rows,
             prior, current, pi);
  emit_table(out, "Market performance", report.performance_rows, prior, current,
             pi);

  out += "## Verdicts\n\n";
  emit_verdict(out, bundle.accumulation);
  emit_verdict(out, bundle.redistribution);

  if (!report.warnings.empty()) {
    out += "## Warnings\n\n";
    for (const auto& warning : report.warnings)
      out += fmt::format("- {}\n", warning);
    out += "\n";
  }
  out += fmt::format("Generated by {} {}\n", kToolName, kToolVersion);
  return out;
}

std::string emit_report(const AssessmentReport& report, ReportFormat format) {
  return format == ReportFormat::json ? emit_json(report) : emit_markdown(report);
}

IndicatorTable build_indicator_table(
    const CountryProfile& profile,
    const std::vector<AggregateObservation>& observations) {
  IndicatorTable table;
  table.profile = profile;
  table.country = observations.empty() ? profile.code : observations.front().country();

  std::vector<IndicatorSet> sets;
  sets.reserve(observations.size());
  for (const auto& obs : observations) {
    table.periods.push_back(obs.period());
    sets.push_back(compute_indicators(obs));
  }

  auto add_row = [&](std::string label, auto&& cell_of) {
    IndicatorTable::Row row{std::move(label), {}};
    for (std::size_t i = 0; i < observations.size(); ++i)
      row.cells.push_back(cell_of(observations[i], sets[i]));
    table.rows.push_back(std::move(row));
  };
  auto opt_cell = [](const std::optional<double>& v, int digits) {
    return v ? format_fixed(*v, digits) : std::string("0.0 ⚠");
  };

  add_row("M0", [](const AggregateObservation& o, const IndicatorSet&) {
    return o.m0().decimal().str_fixed(1);
  });
  add_row("M1", [](const AggregateObservation& o, const IndicatorSet&) {
    return o.m1().decimal().str_fixed(1);
  });
  add_row("M2", [](const AggregateObservation& o, const IndicatorSet&) {
    return o.m2().decimal().str_fixed(1);
  });
  add_row("Q_sm", [](const AggregateObservation& o, const IndicatorSet&) {
    return o.market_volume().decimal().str_fixed(1);
  });
  add_row("Q_tr", [](const AggregateObservation& o, const IndicatorSet&) {
    return o.trading_volume().decimal().str_fixed(1);
  });
  add_row("μ0", [&](const AggregateObservation&, const IndicatorSet& s) {
    return opt_cell(s.money_multiplier, 2);
  });
  add_row("S_pop", [](const AggregateObservation&, const IndicatorSet& s) {
    return s.savings.decimal().str_fixed(1);
  });
  add_row("M3", [](const AggregateObservation&, const IndicatorSet& s) {
    return s.m3.decimal().str_fixed(1);
  });
  add_row("K_tur", [](const AggregateObservation&, const IndicatorSet& s) {
    if (!s.turnover_ratio) return std::string("0.0 ⚠");
    return fmt::format("{} ({})", format_fixed(*s.turnover_ratio, 2),
                       format_fixed(*s.turnover_ratio_raw, 2));
  });
  add_row("lim_max", [](const AggregateObservation&, const IndicatorSet& s) {
    return s.market_limit.decimal().str_fixed(1);
  });
  add_row("FE_sm (%)", [&](const AggregateObservation&, const IndicatorSet& s) {
    return opt_cell(s.functional_efficiency_pct, 2);
  });
  add_row("SMP (%)", [&](const AggregateObservation&, const IndicatorSet& s) {
    return opt_cell(s.market_potential_pct, 2);
  });
  add_row("Q_tr/M3 (%)", [&](const AggregateObservation&, const IndicatorSet& s) {
    return opt_cell(s.trading_to_m3_pct, 2);
  });

  for (std::size_t i = 0; i < sets.size(); ++i)
    for (const auto& note : sets[i].notes)
      table.warnings.push_back(
          fmt::format("{} {}: {}", table.country, table.periods[i], note.message));
  table.indicators = std::move(sets);
  return table;
}

std::string emit_indicator_table_markdown(const IndicatorTable& table) {
  std::string out = fmt::format("## Indicators — {}\n\n", table.country);
  std::string header = "| Indicator |", sep = "|---|";
  for (int period : table.periods) {
    header += fmt::format(" {} |", period);
    sep += "---|";
  }
  out += header + "\n" + sep + "\n";
  for (const auto& row : table.rows) {
    out += fmt::format("| {} |", row.label);
    for (const auto& cell : row.cells) out += fmt::format(" {} |", cell);
    out += "\n";
  }
  out += "\n";
  if (!table.warnings.empty()) {
    for (const auto& warning : table.warnings)
      out += fmt::format("- ⚠ {}\n", warning);
    out += "\n";
  }
  return out;
}

std::string emit_indicator_table_json(const IndicatorTable& table) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["generator"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["country"] = table.country;
  j["profile"] = {{"code", table.profile.code},
                  {"name", table.profile.name},
                  {"m2_rule", m2_rule_name(table.profile.m2_rule)},
                  {"m3_rule", m3_rule_name(table.profile.m3_rule)}};
  j["periods"] = table.periods;
  ordered_json sets = ordered_json::array();
  for (const auto& set : table.indicators) sets.push_back(indicators_json(set));
  j["indicators"] = std::move(sets);
  j["warnings"] = table.warnings;
  return j.dump(2) + "\n";
}

}  // namespace smfa
