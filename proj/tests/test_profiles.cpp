#include <doctest.h>

#include <fstream>
#include <sstream>

#include "smfa/profiles.hpp"
#include "support.hpp"

using namespace smfa;
using test::dec;

namespace {

RawAggregateReport base_report(const std::string& country) {
  RawAggregateReport report;
  report.country = country;
  report.period = 2017;
  report.market_volume = MoneyAmount(dec("912.5"));
  report.trading_volume = MoneyAmount(dec("887569"));
  report.gdp = MoneyAmount(dec("92089.3"));
  report.inflation_pct = 4.27;
  return report;
}

}  // namespace

TEST_SUITE("profiles") {

TEST_CASE("builtin set covers the fifteen countries") {
  const auto& profiles = builtin_profiles();
  REQUIRE(profiles.size() == 15);

  int non_identity = 0;
  for (const auto& profile : profiles)
    if (!profile.is_identity()) ++non_identity;
  CHECK(non_identity == 2);

  const auto* ru = find_profile(profiles, "Russia");
  REQUIRE(ru);
  CHECK(ru->code == "RU");
  CHECK(ru->is_identity());

  const auto* kz = find_profile(profiles, "kazakhstan");
  REQUIRE(kz);
  CHECK(kz->m3_rule == M3Rule::reported_plus_gov_securities);
  CHECK(kz->m2_rule == M2Rule::identity);

  const auto* kg = find_profile(profiles, "KG");
  REQUIRE(kg);
  CHECK(kg->m2_rule == M2Rule::subtract_short_term_gov_securities);
  CHECK(kg->m3_rule == M3Rule::m2_plus_gov_securities);

  CHECK(find_profile(profiles, "XX") == nullptr);
}

TEST_CASE("identity profile passes reported values through unchanged") {
  auto report = base_report("RU");
  report.aggregates = {{RawLabel::m0, MoneyAmount(dec("7860.6"))},
                       {RawLabel::m1, MoneyAmount(dec("17787.2"))},
                       {RawLabel::m2, MoneyAmount(dec("39085.3"))}};
  auto result = normalize(report, *find_profile(builtin_profiles(), "RU"));
  CHECK(result.observation.m0().decimal() == dec("7860.6"));
  CHECK(result.observation.m1().decimal() == dec("17787.2"));
  CHECK(result.observation.m2().decimal() == dec("39085.3"));
  CHECK_FALSE(result.observation.m3_reported());
  CHECK(result.warnings.empty());
}

TEST_CASE("kyrgyzstan adjustments reduce to identity when securities are zero") {
  auto report = base_report("KG");
  report.aggregates = {{RawLabel::m0, MoneyAmount(dec("10"))},
                       {RawLabel::m1, MoneyAmount(dec("40"))},
                       {RawLabel::m2, MoneyAmount(dec("100"))},
                       {RawLabel::short_term_gov_securities, MoneyAmount(dec("0"))},
                       {RawLabel::gov_securities, MoneyAmount(dec("0"))}};
  auto result = normalize(report, *find_profile(builtin_profiles(), "KG"));
  CHECK(result.observation.m2().decimal() == dec("100"));
  REQUIRE(result.observation.m3_reported());
  CHECK(result.observation.m3_reported()->decimal() == dec("100"));
}

TEST_CASE("kyrgyzstan subtracts short-term and adds total government securities") {
  // hand-checked: m2 = 100 - 8 = 92, m3 = 92 + 20 = 112
  auto report = base_report("KG");
  report.aggregates = {{RawLabel::m0, MoneyAmount(dec("10"))},
                       {RawLabel::m1, MoneyAmount(dec("40"))},
                       {RawLabel::m2, MoneyAmount(dec("100"))},
                       {RawLabel::short_term_gov_securities, MoneyAmount(dec("8"))},
                       {RawLabel::gov_securities, MoneyAmount(dec("20"))}};
  auto result = normalize(report, *find_profile(builtin_profiles(), "KG"));
  CHECK(result.observation.m2().decimal() == dec("92"));
  REQUIRE(result.observation.m3_reported());
  CHECK(result.observation.m3_reported()->decimal() == dec("112"));
}

TEST_CASE("kazakhstan adds government securities to reported m3") {
  auto report = base_report("KZ");
  report.aggregates = {{RawLabel::m0, MoneyAmount(dec("10"))},
                       {RawLabel::m1, MoneyAmount(dec("40"))},
                       {RawLabel::m2, MoneyAmount(dec("100"))},
                       {RawLabel::m3, MoneyAmount(dec("120"))},
                       {RawLabel::gov_securities, MoneyAmount(dec("7.5"))}};
  auto result = normalize(report, *find_profile(builtin_profiles(), "KZ"));
  REQUIRE(result.observation.m3_reported());
  CHECK(result.observation.m3_reported()->decimal() == dec("127.5"));
}

TEST_CASE("missing labels demanded by the rules are typed errors") {
  auto report = base_report("KG");
  report.aggregates = {{RawLabel::m0, MoneyAmount(dec("10"))},
                       {RawLabel::m1, MoneyAmount(dec("40"))},
                       {RawLabel::m2, MoneyAmount(dec("100"))}};
  try {
    normalize(report, *find_profile(builtin_profiles(), "KG"));
    FAIL("expected missing_label");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_label);
  }
}

TEST_CASE("profile and report country must agree") {
  auto report = base_report("RU");
  report.aggregates = {{RawLabel::m0, MoneyAmount(dec("1"))},
                       {RawLabel::m1, MoneyAmount(dec("2"))},
                       {RawLabel::m2, MoneyAmount(dec("3"))}};
  try {
    normalize(report, *find_profile(builtin_profiles(), "KZ"));
    FAIL("expected profile_mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::profile_mismatch);
  }
}

TEST_CASE("adjustments that break nesting are reported, never emitted") {
  auto report = base_report("KG");
  report.aggregates = {{RawLabel::m0, MoneyAmount(dec("10"))},
                       {RawLabel::m1, MoneyAmount(dec("40"))},
                       {RawLabel::m2, MoneyAmount(dec("100"))},
                       {RawLabel::short_term_gov_securities, MoneyAmount(dec("95"))},
                       {RawLabel::gov_securities, MoneyAmount(dec("20"))}};
  try {
    normalize(report, *find_profile(builtin_profiles(), "KG"));
    FAIL("expected nesting_violation_after_adjustment");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::nesting_violation_after_adjustment);
  }

  report.aggregates[RawLabel::short_term_gov_securities] = MoneyAmount(dec("120"));
  CHECK_THROWS_AS(normalize(report, *find_profile(builtin_profiles(), "KG")), Error);
}

TEST_CASE("identity normalization round-trips every field bit-exactly") {
  test::Gen gen(7);
  const auto& ru = *find_profile(builtin_profiles(), "RU");
  for (int i = 0; i < 300; ++i) {
    auto report = base_report("RU");
    const Decimal m0 = gen.money1dp(0, 100'000);
    const Decimal m1 = m0 + gen.money1dp(0, 100'000);
    const Decimal m2 = m1 + gen.money1dp(0, 100'000);
    report.aggregates = {{RawLabel::m0, MoneyAmount(m0)},
                         {RawLabel::m1, MoneyAmount(m1)},
                         {RawLabel::m2, MoneyAmount(m2)}};
    report.market_volume = MoneyAmount(gen.money1dp(1, 100'000));
    auto result = normalize(report, ru);
    CHECK(result.observation.m0().decimal().units() == m0.units());
    CHECK(result.observation.m1().decimal().units() == m1.units());
    CHECK(result.observation.m2().decimal().units() == m2.units());
    CHECK(result.observation.market_volume().decimal().units() ==
          report.market_volume.decimal().units());
    CHECK_FALSE(result.observation.m3_reported());
  }
}

TEST_CASE("every profile either emits nested aggregates or errors") {
  test::Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const auto& profiles = builtin_profiles();
    const auto& profile = profiles[static_cast<std::size_t>(
        gen.int_in(0, static_cast<std::int64_t>(profiles.size()) - 1))];
    auto report = base_report(profile.code);
    const Decimal m0 = gen.money1dp(0, 1000);
    const Decimal m1 = m0 + gen.money1dp(0, 1000);
    const Decimal m2 = m1 + gen.money1dp(0, 1000);
    report.aggregates = {{RawLabel::m0, MoneyAmount(m0)},
                         {RawLabel::m1, MoneyAmount(m1)},
                         {RawLabel::m2, MoneyAmount(m2)},
                         {RawLabel::m3, MoneyAmount(m2 + gen.money1dp(0, 1000))},
                         {RawLabel::short_term_gov_securities,
                          MoneyAmount(gen.money1dp(0, 2000))},
                         {RawLabel::gov_securities, MoneyAmount(gen.money1dp(0, 2000))}};
    try {
      auto result = normalize(report, profile);
      const auto& obs = result.observation;
      CHECK(obs.m0() <= obs.m1());
      CHECK(obs.m1() <= obs.m2());
      if (obs.m3_reported()) CHECK(obs.m2() <= *obs.m3_reported());
    } catch (const Error& e) {
      CHECK(e.code() == Errc::nesting_violation_after_adjustment);
    }
  }
}

TEST_CASE("synthesize rule drops a reported m3 so synthesis applies downstream") {
  CountryProfile profile{"RU", "Russia", M2Rule::identity,
                         M3Rule::synthesize_from_q_sm, ""};
  auto report = base_report("RU");
  report.aggregates = {{RawLabel::m0, MoneyAmount(dec("10"))},
                       {RawLabel::m1, MoneyAmount(dec("40"))},
                       {RawLabel::m2, MoneyAmount(dec("100"))},
                       {RawLabel::m3, MoneyAmount(dec("150"))}};
  auto result = normalize(report, profile);
  CHECK_FALSE(result.observation.m3_reported());
}

TEST_CASE("bundled profile file mirrors the builtin set") {
  auto loaded = load_profiles_file(std::string(SMFA_DATA_DIR) + "/profiles.csv");
  const auto& builtin = builtin_profiles();
  REQUIRE(loaded.size() == builtin.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].code == builtin[i].code);
    CHECK(loaded[i].name == builtin[i].name);
    CHECK(loaded[i].m2_rule == builtin[i].m2_rule);
    CHECK(loaded[i].m3_rule == builtin[i].m3_rule);
    CHECK(loaded[i].notes == builtin[i].notes);
  }
}

TEST_CASE("profile loader rejects malformed files") {
  {
    std::istringstream in("");
    CHECK_THROWS_AS(load_profiles(in), Error);
  }
  {
    std::istringstream in("wrong;header\nRU;Russia;identity;use_reported;\n");
    CHECK_THROWS_AS(load_profiles(in), Error);
  }
  {
    std::istringstream in(
        "code;name;m2_rule;m3_rule;notes\nRU;Russia;bogus_rule;use_reported;\n");
    CHECK_THROWS_AS(load_profiles(in), Error);
  }
  {
    std::istringstream in(
        "code;name;m2_rule;m3_rule;notes\n"
        "RU;Russia;identity;use_reported;\n"
        "RU;Russia;identity;use_reported;\n");
    CHECK_THROWS_AS(load_profiles(in), Error);
  }
}

}  // TEST_SUITE
