#include "smfa/profiles.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace smfa {

const char* m2_rule_name(M2Rule rule) {
  switch (rule) {
    case M2Rule::identity: return "identity";
    case M2Rule::subtract_short_term_gov_securities:
      return "subtract_short_term_gov_securities";
  }
  return "?";
}

const char* m3_rule_name(M3Rule rule) {
  switch (rule) {
    case M3Rule::use_reported: return "use_reported";
    case M3Rule::reported_plus_gov_securities: return "reported_plus_gov_securities";
    case M3Rule::m2_plus_gov_securities: return "m2_plus_gov_securities";
    case M3Rule::synthesize_from_q_sm: return "synthesize_from_q_sm";
  }
  return "?";
}

std::optional<M2Rule> m2_rule_from_name(std::string_view name) {
  if (name == "identity") return M2Rule::identity;
  if (name == "subtract_short_term_gov_securities")
    return M2Rule::subtract_short_term_gov_securities;
  return std::nullopt;
}

std::optional<M3Rule> m3_rule_from_name(std::string_view name) {
  if (name == "use_reported") return M3Rule::use_reported;
  if (name == "reported_plus_gov_securities") return M3Rule::reported_plus_gov_securities;
  if (name == "m2_plus_gov_securities") return M3Rule::m2_plus_gov_securities;
  if (name == "synthesize_from_q_sm") return M3Rule::synthesize_from_q_sm;
  return std::nullopt;
}

const char* raw_label_name(RawLabel label) {
  switch (label) {
    case RawLabel::m0: return "m0";
    case RawLabel::m1: return "m1";
    case RawLabel::m2: return "m2";
    case RawLabel::m2x: return "m2x";
    case RawLabel::m3: return "m3";
    case RawLabel::short_term_gov_securities: return "short_term_gov_securities";
    case RawLabel::gov_securities: return "gov_securities";
  }
  return "?";
}

namespace {

MoneyAmount require_label(const RawAggregateReport& report, RawLabel label) {
  auto it = report.aggregates.find(label);
  if (it == report.aggregates.end())
    throw Error(Errc::missing_label,
                fmt::format("{} {}: profile rule needs reported {}",
                            report.country, report.period, raw_label_name(label)));
  return it->second;
}

}  // namespace

NormalizedObservation normalize(const RawAggregateReport& report,
                                const CountryProfile& profile) {
  if (report.country != profile.code && report.country != profile.name)
    throw Error(Errc::profile_mismatch,
                fmt::format("report country {} does not match profile {}",
                            report.country, profile.code));

  ObservationInput input;
  input.country = report.country;
  input.period = report.period;
  input.m0 = require_label(report, RawLabel::m0).decimal();
  input.m1 = require_label(report, RawLabel::m1).decimal();

  Decimal m2 = require_label(report, RawLabel::m2).decimal();
  if (profile.m2_rule == M2Rule::subtract_short_term_gov_securities) {
    Decimal stgs = require_label(report, RawLabel::short_term_gov_securities).decimal();
    m2 = m2 - stgs;
    if (m2.is_negative())
      throw Error(Errc::nesting_violation_after_adjustment,
                  fmt::format("{} {}: canonical m2 is negative after subtracting "
                              "short-term government securities",
                              report.country, report.period));
  }
  input.m2 = m2;

  switch (profile.m3_rule) {
    case M3Rule::use_reported: {
      auto it = report.aggregates.find(RawLabel::m3);
      if (it != report.aggregates.end()) input.m3_reported = it->second.decimal();
      break;
    }
    case M3Rule::reported_plus_gov_securities:
      input.m3_reported = require_label(report, RawLabel::m3).decimal() +
                          require_label(report, RawLabel::gov_securities).decimal();
      break;
    case M3Rule::m2_plus_gov_securities:
      input.m3_reported =
          m2 + require_label(report, RawLabel::gov_securities).decimal();
      break;
    case M3Rule::synthesize_from_q_sm:
      break;  // drop any reported M3; downstream synthesis applies
  }

  input.market_volume = report.market_volume.decimal();
  input.trading_volume = report.trading_volume.decimal();
  input.gdp = report.gdp.decimal();
  input.inflation_pct = report.inflation_pct;
  input.investment_share_pct = report.investment_share_pct;
  input.hightech_share_pct = report.hightech_share_pct;
  input.inventive_activity = report.inventive_activity;

  ValidationOutcome outcome = validate_observation(input);
  if (!outcome.ok()) {
    std::string detail;
    for (const auto& issue : outcome.issues) {
      if (issue.severity != Severity::error) continue;
      if (!detail.empty()) detail += "; ";
      detail += issue.message;
    }
    throw Error(Errc::nesting_violation_after_adjustment,
                fmt::format("{} {}: adjusted aggregates are inconsistent: {}",
                            report.country, report.period, detail));
  }
  return {std::move(*outcome.observation), outcome.warnings()};
}

const std::vector<CountryProfile>& builtin_profiles() {
  static const std::vector<CountryProfile> profiles = {
      {"RU", "Russia", M2Rule::identity, M3Rule::use_reported,
       "Aggregates map one-to-one onto the canonical scheme; M3 is not "
       "published and is synthesized from M2 and market volume."},
      {"UA", "Ukraine", M2Rule::identity, M3Rule::use_reported, ""},
      {"BY", "Belarus", M2Rule::identity, M3Rule::use_reported,
       "Reported aggregates pass through unchanged; the broad M2X/M3 "
       "structure already contains the securities components."},
      {"MD", "Moldova", M2Rule::identity, M3Rule::use_reported, ""},
      {"UZ", "Uzbekistan", M2Rule::identity, M3Rule::use_reported, ""},
      {"KZ", "Kazakhstan", M2Rule::identity, M3Rule::reported_plus_gov_securities,
       "Reported M3 counts foreign-currency deposits but not government "
       "securities; canonical M3 adds them back."},
      {"TJ", "Tajikistan", M2Rule::identity, M3Rule::use_reported, ""},
      {"TM", "Turkmenistan", M2Rule::identity, M3Rule::use_reported, ""},
      {"KG", "Kyrgyzstan", M2Rule::subtract_short_term_gov_securities,
       M3Rule::m2_plus_gov_securities,
       "Reported M2 already counts short-term government securities, so the "
       "canonical M2 subtracts them; canonical M3 is the adjusted M2 plus "
       "total government securities."},
      {"GE", "Georgia", M2Rule::identity, M3Rule::use_reported, ""},
      {"AZ", "Azerbaijan", M2Rule::identity, M3Rule::use_reported, ""},
      {"AM", "Armenia", M2Rule::identity, M3Rule::use_reported, ""},
      {"LT", "Lithuania", M2Rule::identity, M3Rule::use_reported, ""},
      {"LV", "Latvia", M2Rule::identity, M3Rule::use_reported, ""},
      {"EE", "Estonia", M2Rule::identity, M3Rule::use_reported, ""},
  };
  return profiles;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

const CountryProfile* find_profile(const std::vector<CountryProfile>& profiles,
                                   std::string_view code_or_name) {
  const std::string key = lower(code_or_name);
  for (const auto& profile : profiles)
    if (lower(profile.code) == key || lower(profile.name) == key) return &profile;
  return nullptr;
}

std::vector<CountryProfile> load_profiles(std::istream& in) {
  std::vector<CountryProfile> profiles;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("code;", 0) != 0)
        throw Error(Errc::malformed_header,
                    "profile file must start with header 'code;name;m2_rule;m3_rule;notes'");
      header_seen = true;
      continue;
    }

    // code;name;m2_rule;m3_rule;notes — notes run to end of line.
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
      std::size_t sep = line.find(';', start);
      if (sep == std::string::npos)
        throw Error(Errc::unparsable_number,
                    fmt::format("profiles line {}: expected 5 fields", line_no));
      fields.push_back(line.substr(start, sep - start));
      start = sep + 1;
    }
    fields.push_back(line.substr(start));

    CountryProfile profile;
    profile.code = fields[0];
    profile.name = fields[1];
    auto m2 = m2_rule_from_name(fields[2]);
    auto m3 = m3_rule_from_name(fields[3]);
    if (!m2)
      throw Error(Errc::unparsable_number,
                  fmt::format("profiles line {}: unknown m2_rule '{}'", line_no, fields[2]));
    if (!m3)
      throw Error(Errc::unparsable_number,
                  fmt::format("profiles line {}: unknown m3_rule '{}'", line_no, fields[3]));
    profile.m2_rule = *m2;
    profile.m3_rule = *m3;
    profile.notes = fields[4];
    if (find_profile(profiles, profile.code))
      throw Error(Errc::duplicate_record,
                  fmt::format("profiles line {}: duplicate country {}", line_no, profile.code));
    profiles.push_back(std::move(profile));
  }
  if (!header_seen)
    throw Error(Errc::malformed_header, "profile file is empty");
  return profiles;
}

std::vector<CountryProfile> load_profiles_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::io_error, fmt::format("cannot open profiles file {}", path));
  return load_profiles(in);
}

}  // namespace smfa
