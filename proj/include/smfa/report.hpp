#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smfa/assessment.hpp"
#include "smfa/profiles.hpp"

namespace smfa {

/// One display row of an indicator table. Values are prerendered from the
/// exact operation outputs when the report is built; the emitters only lay
/// them out, nothing is computed at render time.
struct ReportRow {
  std::string label;
  std::string prior_text;
  std::string current_text;
  std::optional<TrendAssessment> trend;
  bool inflation_comparable = false;
  bool flagged = false;  // value shown as a placeholder, see report warnings
};

struct AssessmentReport {
  CountryProfile profile;
  AssessmentBundle bundle;
  std::vector<ReportRow> accumulation_rows;    // money supply side
  std::vector<ReportRow> redistribution_rows;  // GDP / structural side
  std::vector<ReportRow> performance_rows;     // turnover, limit, FE, SMP
  std::vector<std::string> warnings;
};

enum class ReportFormat { json, markdown };
std::optional<ReportFormat> report_format_from_name(std::string_view name);
const char* report_format_extension(ReportFormat format);

AssessmentReport build_report(const CountryProfile& profile,
                              const AssessmentBundle& bundle,
                              std::vector<std::string> warnings = {});

/// Per-country indicator table: one column per period, one row per
/// indicator. Built once from operation outputs, rendered verbatim.
struct IndicatorTable {
  CountryProfile profile;
  std::string country;
  std::vector<int> periods;
  struct Row {
    std::string label;
    std::vector<std::string> cells;
  };
  std::vector<Row> rows;
  std::vector<IndicatorSet> indicators;
  std::vector<std::string> warnings;
};

IndicatorTable build_indicator_table(const CountryProfile& profile,
                                     const std::vector<AggregateObservation>& observations);
std::string emit_indicator_table_markdown(const IndicatorTable& table);
std::string emit_indicator_table_json(const IndicatorTable& table);

/// Versioned, schema-stable JSON document. Emission is deterministic:
/// identical reports serialize to identical bytes.
std::string emit_json(const AssessmentReport& report);

/// Human-readable tables in year / year / change / direction layout, with
/// verdict sections and narratives.
std::string emit_markdown(const AssessmentReport& report);

std::string emit_report(const AssessmentReport& report, ReportFormat format);

}  // namespace smfa
