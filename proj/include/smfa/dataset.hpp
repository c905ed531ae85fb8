#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "smfa/profiles.hpp"

namespace smfa {

/// One parse- or validation-time finding, anchored to its source location.
struct Diagnostic {
  Severity severity = Severity::error;
  Errc code = Errc::io_error;
  int line = 0;              // 0 when not tied to a line
  std::string column;        // empty when not tied to a column
  std::string message;

  std::string format() const;
};

struct DatasetParseResult {
  std::vector<RawAggregateReport> records;
  std::vector<Diagnostic> diagnostics;

  bool ok() const {
    for (const auto& d : diagnostics)
      if (d.severity == Severity::error) return false;
    return true;
  }
};

/// Parses a delimited observation file. Comma or semicolon delimited (auto
/// detected from the header), double-quote quoting, UTF-8. Numbers are
/// locale-tolerant ("39 085,3" and "39085.3" both parse). Empty cells and
/// "-" mark absent optional values. All defects are collected in one pass
/// with line numbers; records with errors are dropped, the rest survive.
///
/// Required columns: country, period, m0, m1, m2, q_sm, q_tr, gdp, pi.
/// Optional columns: m3, omega_si, omega_l, k_inv, m2x,
/// short_term_gov_securities, gov_securities.
/// Unknown columns are ignored with a warning. One record per
/// (country, period); duplicates are fatal.
DatasetParseResult parse_dataset(std::istream& in);
DatasetParseResult parse_dataset_file(const std::string& path);

}  // namespace smfa
