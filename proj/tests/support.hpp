#pragma once

// Test-only helpers: must-parse fixtures, the golden Russia 2017/2018
// observations, and a deterministic generator of random valid observations
// for property-style checks.

#include <cstdint>
#include <random>
#include <stdexcept>

#include "smfa/domain.hpp"

namespace smfa::test {

inline Decimal dec(const char* text) {
  auto value = Decimal::parse(text);
  if (!value) throw std::runtime_error(std::string("bad decimal literal: ") + text);
  return *value;
}

inline AggregateObservation must_validate(const ObservationInput& input) {
  auto outcome = validate_observation(input);
  if (!outcome.ok())
    throw std::runtime_error("fixture observation invalid: " +
                             (outcome.issues.empty() ? std::string("?")
                                                     : outcome.issues.front().message));
  return *outcome.observation;
}

// Official 2017/2018 values for Russia; M3 is not reported and the
// structural shares come with the redistribution inputs.
inline ObservationInput russia2017() {
  ObservationInput in;
  in.country = "RU";
  in.period = 2017;
  in.m0 = dec("7860.6");
  in.m1 = dec("17787.2");
  in.m2 = dec("39085.3");
  in.market_volume = dec("912.5");
  in.trading_volume = dec("887569");
  in.gdp = dec("92089.3");
  in.inflation_pct = 2.5;
  in.investment_share_pct = 21.6;
  in.hightech_share_pct = 21.5;
  in.inventive_activity = 1.55;
  return in;
}

inline ObservationInput russia2018() {
  ObservationInput in;
  in.country = "RU";
  in.period = 2018;
  in.m0 = dec("8762.8");
  in.m1 = dec("20025.9");
  in.m2 = dec("43384.3");
  in.market_volume = dec("1070.9");
  in.trading_volume = dec("861119");
  in.gdp = dec("103626.6");
  in.inflation_pct = 4.27;
  in.investment_share_pct = 21.1;
  in.hightech_share_pct = 20.7;
  in.inventive_activity = 1.70;
  return in;
}

inline PeriodPair russia_pair() {
  return PeriodPair::make(must_validate(russia2017()), must_validate(russia2018()));
}

// Deterministic generator. Money values are drawn at one fractional digit
// so that scaling by another one-digit decimal stays exact.
struct Gen {
  std::mt19937_64 rng;

  explicit Gen(std::uint64_t seed = 0xC0FFEE) : rng(seed) {}

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }

  // value in tenths: [lo10, hi10] / 10
  Decimal money1dp(std::int64_t lo10, std::int64_t hi10) {
    return Decimal::from_units(int_in(lo10, hi10) * 1000);
  }

  ObservationInput observation(int period = 2000, bool with_structural = true) {
    ObservationInput in;
    in.country = "RU";
    in.period = period;
    in.m0 = money1dp(1, 500'000);
    in.m1 = in.m0 + money1dp(0, 500'000);
    in.m2 = in.m1 + money1dp(0, 500'000);
    in.market_volume = money1dp(1, 500'000);
    in.trading_volume = money1dp(1, 5'000'000);
    in.gdp = money1dp(1, 5'000'000);
    in.inflation_pct = real(-5.0, 30.0);
    if (with_structural) {
      in.investment_share_pct = real(0.1, 60.0);
      in.hightech_share_pct = real(0.1, 60.0);
      in.inventive_activity = real(0.01, 5.0);
    }
    return in;
  }

  PeriodPair pair(bool with_structural = true) {
    auto prior = observation(2000, with_structural);
    auto current = observation(2001, with_structural);
    current.country = prior.country;
    return PeriodPair::make(must_validate(prior), must_validate(current));
  }
};

}  // namespace smfa::test
