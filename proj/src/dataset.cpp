#include "smfa/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace smfa {

std::string Diagnostic::format() const {
  std::string out = severity == Severity::error ? "error" : "warning";
  out += fmt::format(" [{}]", errc_name(code));
  if (line > 0) out += fmt::format(" line {}", line);
  if (!column.empty()) out += fmt::format(" column '{}'", column);
  out += ": ";
  out += message;
  return out;
}

namespace {

const std::vector<std::string>& required_columns() {
  static const std::vector<std::string> cols = {
      "country", "period", "m0", "m1", "m2", "q_sm", "q_tr", "gdp", "pi"};
  return cols;
}

const std::vector<std::string>& optional_columns() {
  static const std::vector<std::string> cols = {
      "m3", "omega_si", "omega_l", "k_inv",
      "m2x", "short_term_gov_securities", "gov_securities"};
  return cols;
}

std::vector<std::string> split_row(const std::string& line, char delim) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == delim) {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(std::move(cell));
  return cells;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

bool is_absent(const std::string& cell) { return cell.empty() || cell == "-"; }

struct RowReader {
  const std::vector<std::string>& cells;
  const std::map<std::string, std::size_t>& columns;
  int line;
  std::vector<Diagnostic>& diagnostics;
  bool failed = false;

  std::optional<std::string> raw(const std::string& name) const {
    auto it = columns.find(name);
    if (it == columns.end() || it->second >= cells.size()) return std::nullopt;
    std::string cell = trim(cells[it->second]);
    if (is_absent(cell)) return std::nullopt;
    return cell;
  }

  std::optional<Decimal> decimal(const std::string& name, bool required) {
    auto cell = raw(name);
    if (!cell) {
      if (required) {
        diagnostics.push_back({Severity::error, Errc::unparsable_number, line, name,
                               "required value is missing"});
        failed = true;
      }
      return std::nullopt;
    }
    auto value = Decimal::parse(*cell);
    if (!value) {
      diagnostics.push_back({Severity::error, Errc::unparsable_number, line, name,
                             fmt::format("cannot parse number '{}'", *cell)});
      failed = true;
      return std::nullopt;
    }
    return value;
  }

  std::optional<MoneyAmount> money(const std::string& name, bool required) {
    auto value = decimal(name, required);
    if (!value) return std::nullopt;
    if (value->is_negative()) {
      diagnostics.push_back({Severity::error, Errc::negative_amount, line, name,
                             fmt::format("money amount '{}' is negative", value->str())});
      failed = true;
      return std::nullopt;
    }
    return MoneyAmount(*value);
  }
};

}  // namespace

DatasetParseResult parse_dataset(std::istream& in) {
  DatasetParseResult result;
  std::string line;
  int line_no = 0;

  // header
  if (!std::getline(in, line)) {
    result.diagnostics.push_back(
        {Severity::error, Errc::malformed_header, 0, "", "file is empty"});
    return result;
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  // strip a UTF-8 BOM if an exporting spreadsheet left one
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);

  const char delim = line.find(';') != std::string::npos ? ';' : ',';
  std::map<std::string, std::size_t> columns;
  {
    const auto header = split_row(line, delim);
    const auto& req = required_columns();
    const auto& opt = optional_columns();
    for (std::size_t i = 0; i < header.size(); ++i) {
      const std::string name = trim(header[i]);
      if (name.empty()) {
        result.diagnostics.push_back({Severity::error, Errc::malformed_header,
                                      line_no, "", "empty column name in header"});
        continue;
      }
      const bool known =
          std::find(req.begin(), req.end(), name) != req.end() ||
          std::find(opt.begin(), opt.end(), name) != opt.end();
      if (!known) {
        result.diagnostics.push_back(
            {Severity::warning, Errc::unknown_column, line_no, name,
             "unknown column is ignored"});
        continue;
      }
      if (!columns.emplace(name, i).second)
        result.diagnostics.push_back({Severity::error, Errc::malformed_header,
                                      line_no, name, "column appears twice"});
    }
    bool missing_required = false;
    for (const auto& name : req)
      if (!columns.count(name)) {
        result.diagnostics.push_back({Severity::error, Errc::missing_required_column,
                                      line_no, name, "required column is missing"});
        missing_required = true;
      }
    if (missing_required) return result;
  }

  std::set<std::pair<std::string, int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;

    RowReader row{split_row(line, delim), columns, line_no, result.diagnostics};
    RawAggregateReport record;

    if (auto country = row.raw("country"); country && !country->empty()) {
      record.country = *country;
    } else {
      result.diagnostics.push_back({Severity::error, Errc::unparsable_number,
                                    line_no, "country", "country code is missing"});
      row.failed = true;
    }

    if (auto period = row.raw("period")) {
      bool digits = !period->empty() &&
                    std::all_of(period->begin(), period->end(),
                                [](unsigned char c) { return std::isdigit(c); });
      if (digits && period->size() <= 4) {
        record.period = std::stoi(*period);
      } else {
        result.diagnostics.push_back(
            {Severity::error, Errc::bad_period, line_no, "period",
             fmt::format("'{}' is not a calendar year (annual data only)", *period)});
        row.failed = true;
      }
    } else {
      result.diagnostics.push_back({Severity::error, Errc::bad_period, line_no,
                                    "period", "period is missing"});
      row.failed = true;
    }

    const std::pair<const char*, RawLabel> aggregate_columns[] = {
        {"m0", RawLabel::m0},
        {"m1", RawLabel::m1},
        {"m2", RawLabel::m2},
        {"m3", RawLabel::m3},
        {"m2x", RawLabel::m2x},
        {"short_term_gov_securities", RawLabel::short_term_gov_securities},
        {"gov_securities", RawLabel::gov_securities},
    };
    for (const auto& [name, label] : aggregate_columns) {
      const bool required = label == RawLabel::m0 || label == RawLabel::m1 ||
                            label == RawLabel::m2;
      if (auto value = row.money(name, required))
        record.aggregates.emplace(label, *value);
    }

    if (auto v = row.money("q_sm", true)) record.market_volume = *v;
    if (auto v = row.money("q_tr", true)) record.trading_volume = *v;
    if (auto v = row.money("gdp", true)) record.gdp = *v;
    if (auto v = row.decimal("pi", true)) record.inflation_pct = v->to_double();
    if (auto v = row.decimal("omega_si", false)) record.investment_share_pct = v->to_double();
    if (auto v = row.decimal("omega_l", false)) record.hightech_share_pct = v->to_double();
    if (auto v = row.decimal("k_inv", false)) record.inventive_activity = v->to_double();

    if (row.failed) continue;

    if (!seen.emplace(record.country, record.period).second) {
      result.diagnostics.push_back(
          {Severity::error, Errc::duplicate_record, line_no, "",
           fmt::format("duplicate record for {} {}", record.country, record.period)});
      continue;
    }
    result.records.push_back(std::move(record));
  }
  return result;
}

DatasetParseResult parse_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    DatasetParseResult result;
    result.diagnostics.push_back({Severity::error, Errc::io_error, 0, "",
                                  fmt::format("cannot open {}", path)});
    return result;
  }
  return parse_dataset(in);
}

}  // namespace smfa
