#include "smfa/plotdata.hpp"

#include <fmt/format.h>

#include "smfa/indicators.hpp"

namespace smfa {

PlotData build_plot_data(const std::vector<AggregateObservation>& observations) {
  if (observations.size() < 2)
    throw Error(Errc::insufficient_periods,
                fmt::format("plot data needs at least 2 periods, got {}",
                            observations.size()));

  PlotData data;
  data.money_supply = "period,m0,m1,m2,m3\n";
  data.cash_share = "period,cash_share_pct\n";
  data.efficiency = "period,functional_efficiency_pct,market_potential_pct\n";

  for (const auto& obs : observations) {
    const IndicatorSet set = compute_indicators(obs);
    data.money_supply +=
        fmt::format("{},{},{},{},{}\n", obs.period(), obs.m0().str(),
                    obs.m1().str(), obs.m2().str(), set.m3.str());

    std::string share;
    if (!obs.m2().is_zero())
      share = format_fixed(100.0 * obs.m0().to_double() / obs.m2().to_double(), 4);
    data.cash_share += fmt::format("{},{}\n", obs.period(), share);

    std::string fe, smp;
    if (set.functional_efficiency_pct) {
      fe = format_fixed(*set.functional_efficiency_pct, 4);
      smp = format_fixed(*set.market_potential_pct, 4);
    }
    data.efficiency += fmt::format("{},{},{}\n", obs.period(), fe, smp);
  }
  return data;
}

}  // namespace smfa
