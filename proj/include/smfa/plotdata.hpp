#pragma once

#include <string>
#include <vector>

#include "smfa/domain.hpp"

namespace smfa {

/// Columnar plot-ready series for the money-circulation summary: money
/// supply levels, the cash share of M2, and efficiency/potential per year.
/// Plain delimited text, header row, dot decimals.
struct PlotData {
  std::string money_supply;  // period,m0,m1,m2,m3
  std::string cash_share;    // period,cash_share_pct  (100 * M0 / M2)
  std::string efficiency;    // period,functional_efficiency_pct,market_potential_pct

  static const char* money_supply_filename() { return "money_supply.csv"; }
  static const char* cash_share_filename() { return "cash_share.csv"; }
  static const char* efficiency_filename() { return "fe_smp.csv"; }
};

/// Builds the three plot files from observations sorted by period. Throws
/// Error{insufficient_periods} when fewer than two periods are given.
/// Undefined cells (zero denominators) are left empty.
PlotData build_plot_data(const std::vector<AggregateObservation>& observations);

}  // namespace smfa
