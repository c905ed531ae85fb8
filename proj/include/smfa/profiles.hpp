#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smfa/domain.hpp"

namespace smfa {

/// How a country's reported M2 maps onto the canonical scheme.
enum class M2Rule {
  identity,
  subtract_short_term_gov_securities,
};

/// How a country's canonical M3 is derived.
enum class M3Rule {
  use_reported,                 // pass reported M3 through; synthesize downstream when absent
  reported_plus_gov_securities,
  m2_plus_gov_securities,       // canonical (post-adjustment) M2 plus government securities
  synthesize_from_q_sm,         // ignore any reported M3, always synthesize
};

const char* m2_rule_name(M2Rule rule);
const char* m3_rule_name(M3Rule rule);
std::optional<M2Rule> m2_rule_from_name(std::string_view name);
std::optional<M3Rule> m3_rule_from_name(std::string_view name);

struct CountryProfile {
  std::string code;  // ISO 3166-1 alpha-2
  std::string name;
  M2Rule m2_rule = M2Rule::identity;
  M3Rule m3_rule = M3Rule::use_reported;
  std::string notes;

  bool is_identity() const {
    return m2_rule == M2Rule::identity && m3_rule == M3Rule::use_reported;
  }
};

/// Aggregate labels a statistics office may report.
enum class RawLabel {
  m0,
  m1,
  m2,
  m2x,
  m3,
  short_term_gov_securities,
  gov_securities,
};

const char* raw_label_name(RawLabel label);

/// One period of reported data as published, before normalization.
struct RawAggregateReport {
  std::string country;
  int period = 0;
  std::map<RawLabel, MoneyAmount> aggregates;
  MoneyAmount market_volume;
  MoneyAmount trading_volume;
  MoneyAmount gdp;
  double inflation_pct = 0.0;
  std::optional<double> investment_share_pct;
  std::optional<double> hightech_share_pct;
  std::optional<double> inventive_activity;
};

struct NormalizedObservation {
  AggregateObservation observation;
  std::vector<ValidationIssue> warnings;
};

/// Maps reported aggregates onto the canonical M0..M3 scheme according to
/// the country profile, then validates. Throws Error with code
/// missing_label, profile_mismatch or nesting_violation_after_adjustment;
/// the last one signals inconsistent source data.
NormalizedObservation normalize(const RawAggregateReport& report,
                                const CountryProfile& profile);

/// The built-in post-Soviet profile set: fifteen countries, of which only
/// Kazakhstan and Kyrgyzstan carry non-identity rules. Mirrored by the
/// bundled data/profiles.csv, which can be edited and passed to
/// load_profiles instead.
const std::vector<CountryProfile>& builtin_profiles();

/// Lookup by ISO code or English name, case-insensitive.
const CountryProfile* find_profile(const std::vector<CountryProfile>& profiles,
                                   std::string_view code_or_name);

/// Parses a profile file: semicolon-delimited, one record per country,
/// columns code;name;m2_rule;m3_rule;notes (notes run to end of line).
/// Lines starting with '#' are comments. Throws Error on malformed input.
std::vector<CountryProfile> load_profiles(std::istream& in);
std::vector<CountryProfile> load_profiles_file(const std::string& path);

}  // namespace smfa
