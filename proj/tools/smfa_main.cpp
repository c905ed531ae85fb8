// Command-line front end: ingestion -> normalization -> indicators ->
// assessment -> reports. Exit code reflects tool health, never the market
// verdict: 0 success, 1 data/validation failure, 2 usage error.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "smfa/assessment.hpp"
#include "smfa/dataset.hpp"
#include "smfa/plotdata.hpp"
#include "smfa/report.hpp"
#include "smfa/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string input;
  std::string country;
  int from = 0;
  int to = 9999;
  std::string profiles_path;
  std::string out_dir;
  std::string format = "markdown";
  bool strict = false;
};

struct CountryData {
  smfa::CountryProfile profile;
  std::vector<smfa::AggregateObservation> observations;  // sorted by period
  std::vector<std::string> warnings;
};

void add_common_options(CLI::App* cmd, RunConfig& config, bool with_format) {
  cmd->add_option("-i,--input", config.input, "observation dataset (CSV)")
      ->required();
  cmd->add_option("-c,--country", config.country,
                  "country code or name (default: all countries in the file)");
  cmd->add_option("--from", config.from, "first period (year), inclusive");
  cmd->add_option("--to", config.to, "last period (year), inclusive");
  cmd->add_option("-p,--profiles", config.profiles_path,
                  "country profile file overriding the built-in set");
  cmd->add_option("-o,--out", config.out_dir,
                  "output directory (default: standard output)");
  if (with_format)
    cmd->add_option("-f,--format", config.format, "report format")
        ->check(CLI::IsMember({"json", "markdown"}));
  cmd->add_flag("--strict", config.strict, "treat warnings as errors");
}

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

// Loads, normalizes and groups the dataset. Returns empty on failure with
// the exit code stored in `exit_code`.
std::optional<std::map<std::string, CountryData>> load_countries(
    const RunConfig& config, int& exit_code) {
  exit_code = kExitOk;

  std::vector<smfa::CountryProfile> profiles;
  try {
    profiles = config.profiles_path.empty()
                   ? smfa::builtin_profiles()
                   : smfa::load_profiles_file(config.profiles_path);
  } catch (const smfa::Error& e) {
    std::cerr << "error [" << smfa::errc_name(e.code()) << "]: " << e.what() << "\n";
    exit_code = e.code() == smfa::Errc::io_error ? kExitUsage : kExitDataError;
    return std::nullopt;
  }

  auto parsed = smfa::parse_dataset_file(config.input);
  bool warned = false;
  for (const auto& diagnostic : parsed.diagnostics) {
    std::cerr << diagnostic.format() << "\n";
    warned |= diagnostic.severity == smfa::Severity::warning;
    if (diagnostic.code == smfa::Errc::io_error) {
      exit_code = kExitUsage;
      return std::nullopt;
    }
  }
  if (!parsed.ok() || (config.strict && warned)) {
    exit_code = kExitDataError;
    return std::nullopt;
  }

  std::optional<std::string> country_filter;
  if (!config.country.empty()) {
    if (const auto* p = smfa::find_profile(profiles, config.country))
      country_filter = p->code;
    else
      country_filter = config.country;  // may still match record codes
  }

  std::map<std::string, CountryData> countries;
  bool failed = false;
  for (const auto& record : parsed.records) {
    if (record.period < config.from || record.period > config.to) continue;
    if (country_filter && record.country != *country_filter) continue;

    const auto* profile = smfa::find_profile(profiles, record.country);
    if (!profile) {
      std::cerr << fmt::format(
          "error [ProfileMismatch]: no profile for country '{}' ({} {})\n",
          record.country, record.country, record.period);
      failed = true;
      continue;
    }
    try {
      auto normalized = smfa::normalize(record, *profile);
      auto& bucket = countries[profile->code];
      bucket.profile = *profile;
      for (const auto& warning : normalized.warnings) {
        std::cerr << fmt::format("warning [{}] {} {}: {}\n",
                                 smfa::errc_name(warning.code), record.country,
                                 record.period, warning.message);
        bucket.warnings.push_back(fmt::format("{} {}: {}", record.country,
                                              record.period, warning.message));
      }
      bucket.observations.push_back(std::move(normalized.observation));
    } catch (const smfa::Error& e) {
      std::cerr << "error [" << smfa::errc_name(e.code()) << "]: " << e.what()
                << "\n";
      failed = true;
    }
  }
  if (failed) {
    exit_code = kExitDataError;
    return std::nullopt;
  }
  if (countries.empty()) {
    std::cerr << "error: no observations selected";
    if (country_filter) std::cerr << " for country '" << *country_filter << "'";
    std::cerr << "\n";
    exit_code = kExitDataError;
    return std::nullopt;
  }
  bool any_warning = false;
  for (auto& [code, data] : countries) {
    std::sort(data.observations.begin(), data.observations.end(),
              [](const auto& a, const auto& b) { return a.period() < b.period(); });
    any_warning |= !data.warnings.empty();
  }
  if (config.strict && any_warning) {
    std::cerr << "error: warnings present and --strict is set\n";
    exit_code = kExitDataError;
    return std::nullopt;
  }
  return countries;
}

bool write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error [IoError]: cannot write " << path.string() << "\n";
    return false;
  }
  out << content;
  return out.good();
}

bool ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "error [IoError]: cannot create directory " << dir << ": "
              << ec.message() << "\n";
    return false;
  }
  return true;
}

int cmd_indicators(const RunConfig& config) {
  int exit_code = 0;
  auto countries = load_countries(config, exit_code);
  if (!countries) return exit_code;
  const bool json = config.format == "json";

  std::vector<std::string> documents;
  for (const auto& [code, data] : *countries) {
    auto table = smfa::build_indicator_table(data.profile, data.observations);
    documents.push_back(json ? smfa::emit_indicator_table_json(table)
                             : smfa::emit_indicator_table_markdown(table));
    if (!config.out_dir.empty()) {
      if (!ensure_out_dir(config.out_dir)) return kExitDataError;
      const auto path = std::filesystem::path(config.out_dir) /
                        fmt::format("{}_indicators.{}", code, json ? "json" : "md");
      if (!write_file(path, documents.back())) return kExitDataError;
    }
  }
  if (config.out_dir.empty()) {
    if (json && documents.size() > 1) {
      std::cout << "[\n";
      for (std::size_t i = 0; i < documents.size(); ++i) {
        std::string doc = documents[i];
        if (!doc.empty() && doc.back() == '\n') doc.pop_back();
        std::cout << doc << (i + 1 < documents.size() ? ",\n" : "\n");
      }
      std::cout << "]\n";
    } else {
      for (const auto& doc : documents) std::cout << doc;
    }
  }
  return kExitOk;
}

int cmd_assess(const RunConfig& config) {
  int exit_code = 0;
  auto countries = load_countries(config, exit_code);
  if (!countries) return exit_code;
  const auto format = *smfa::report_format_from_name(config.format);

  std::vector<std::string> documents;
  for (const auto& [code, data] : *countries) {
    if (data.observations.size() < 2) {
      std::cerr << fmt::format(
          "warning [InsufficientPeriods]: {} has {} period(s); at least two "
          "consecutive years are needed\n",
          code, data.observations.size());
      continue;
    }
    bool paired = false;
    for (std::size_t i = 0; i + 1 < data.observations.size(); ++i) {
      const auto& prior = data.observations[i];
      const auto& current = data.observations[i + 1];
      if (current.period() != prior.period() + 1) continue;  // gap in the series
      paired = true;
      auto pair = smfa::PeriodPair::make(prior, current);
      auto report =
          smfa::build_report(data.profile, smfa::assess_all(pair), data.warnings);
      documents.push_back(smfa::emit_report(report, format));
      if (!config.out_dir.empty()) {
        if (!ensure_out_dir(config.out_dir)) return kExitDataError;
        const auto path =
            std::filesystem::path(config.out_dir) /
            fmt::format("{}_{}_{}_assessment.{}", code, prior.period(),
                        current.period(), smfa::report_format_extension(format));
        if (!write_file(path, documents.back())) return kExitDataError;
      }
    }
    if (!paired)
      std::cerr << fmt::format(
          "warning [InsufficientPeriods]: {} has no consecutive year pair\n", code);
  }
  if (documents.empty()) {
    std::cerr << "error [InsufficientPeriods]: no consecutive year pair in the "
                 "selected data\n";
    return kExitDataError;
  }
  if (config.out_dir.empty()) {
    if (format == smfa::ReportFormat::json && documents.size() > 1) {
      std::cout << "[\n";
      for (std::size_t i = 0; i < documents.size(); ++i) {
        std::string doc = documents[i];
        if (!doc.empty() && doc.back() == '\n') doc.pop_back();
        std::cout << doc << (i + 1 < documents.size() ? ",\n" : "\n");
      }
      std::cout << "]\n";
    } else {
      for (const auto& doc : documents) std::cout << doc;
    }
  }
  return kExitOk;
}

int cmd_plotdata(const RunConfig& config) {
  int exit_code = 0;
  auto countries = load_countries(config, exit_code);
  if (!countries) return exit_code;

  const std::string out_dir = config.out_dir.empty() ? "." : config.out_dir;
  if (!ensure_out_dir(out_dir)) return kExitDataError;

  bool produced = false;
  for (const auto& [code, data] : *countries) {
    try {
      const auto plot = smfa::build_plot_data(data.observations);
      const auto base = std::filesystem::path(out_dir);
      if (!write_file(base / fmt::format("{}_{}", code, smfa::PlotData::money_supply_filename()),
                      plot.money_supply) ||
          !write_file(base / fmt::format("{}_{}", code, smfa::PlotData::cash_share_filename()),
                      plot.cash_share) ||
          !write_file(base / fmt::format("{}_{}", code, smfa::PlotData::efficiency_filename()),
                      plot.efficiency))
        return kExitDataError;
      produced = true;
    } catch (const smfa::Error& e) {
      std::cerr << "error [" << smfa::errc_name(e.code()) << "]: " << e.what()
                << "\n";
    }
  }
  return produced ? kExitOk : kExitDataError;
}

int cmd_profiles_list(const std::string& profiles_path) {
  std::vector<smfa::CountryProfile> profiles;
  try {
    profiles = profiles_path.empty() ? smfa::builtin_profiles()
                                     : smfa::load_profiles_file(profiles_path);
  } catch (const smfa::Error& e) {
    std::cerr << "error [" << smfa::errc_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == smfa::Errc::io_error ? kExitUsage : kExitDataError;
  }
  std::cout << "| Code | Country | M2 rule | M3 rule | Notes |\n";
  std::cout << "|---|---|---|---|---|\n";
  for (const auto& profile : profiles)
    std::cout << fmt::format("| {} | {} | {} | {} | {} |\n", profile.code,
                             profile.name, smfa::m2_rule_name(profile.m2_rule),
                             smfa::m3_rule_name(profile.m3_rule), profile.notes);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{fmt::format(
      "{} {} — functional assessment of emerging securities markets from "
      "monetary aggregates",
      smfa::kToolName, smfa::kToolVersion)};
  app.require_subcommand(1);

  RunConfig config;
  auto* indicators =
      app.add_subcommand("indicators", "compute per-period indicator tables");
  add_common_options(indicators, config, true);
  auto* assess = app.add_subcommand(
      "assess", "evaluate the accumulation and redistribution functions over "
                "consecutive year pairs");
  add_common_options(assess, config, true);
  auto* plotdata = app.add_subcommand(
      "plotdata", "emit plot-ready money circulation series (CSV files)");
  add_common_options(plotdata, config, false);
  auto* profiles = app.add_subcommand("profiles", "country profile utilities");
  std::string profiles_path;
  auto* profiles_list =
      profiles->add_subcommand("list", "print the active profile set");
  profiles_list->add_option("-p,--profiles", profiles_path,
                            "profile file overriding the built-in set");
  profiles->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (config.from > config.to)
    return fail_usage(fmt::format("--from {} is later than --to {}", config.from,
                                  config.to));

  try {
    if (indicators->parsed()) return cmd_indicators(config);
    if (assess->parsed()) return cmd_assess(config);
    if (plotdata->parsed()) return cmd_plotdata(config);
    if (profiles->parsed()) return cmd_profiles_list(profiles_path);
  } catch (const smfa::Error& e) {
    std::cerr << "error [" << smfa::errc_name(e.code()) << "]: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}
