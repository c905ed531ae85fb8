#include <doctest.h>

#include <algorithm>

#include "smfa/domain.hpp"
#include "support.hpp"

using namespace smfa;
using test::dec;

namespace {

int count_code(const std::vector<ValidationIssue>& issues, Errc code) {
  return static_cast<int>(
      std::count_if(issues.begin(), issues.end(),
                    [code](const ValidationIssue& i) { return i.code == code; }));
}

}  // namespace

TEST_SUITE("domain") {

TEST_CASE("strong types reject invalid construction") {
  CHECK_THROWS_AS(MoneyAmount(dec("-1")), Error);
  CHECK_NOTHROW(MoneyAmount(dec("0")));
  CHECK_THROWS_AS(Percent(std::numeric_limits<double>::quiet_NaN()), Error);
  CHECK_THROWS_AS(Percent(std::numeric_limits<double>::infinity()), Error);
  CHECK_NOTHROW(Percent(-12.6));
}

TEST_CASE("official 2017 row validates cleanly") {
  auto outcome = validate_observation(test::russia2017());
  REQUIRE(outcome.ok());
  CHECK(outcome.issues.empty());
  CHECK(outcome.observation->m2().str() == "39085.3");
}

TEST_CASE("non-nested aggregates are rejected") {
  ObservationInput in = test::russia2017();
  in.m0 = dec("5");
  in.m1 = dec("3");
  in.m2 = dec("10");
  auto outcome = validate_observation(in);
  CHECK_FALSE(outcome.ok());
  CHECK(count_code(outcome.issues, Errc::non_nested_aggregates) == 1);
}

TEST_CASE("degenerate all-zero economy is valid with a warning") {
  ObservationInput in;
  in.country = "RU";
  in.period = 2000;
  // all money fields zero
  auto outcome = validate_observation(in);
  REQUIRE(outcome.ok());
  CHECK(count_code(outcome.issues, Errc::zero_market_volume) == 1);
  CHECK(outcome.issues.front().severity == Severity::warning);
}

TEST_CASE("validation reports every violation, not just the first") {
  ObservationInput in;
  in.country = "RU";
  in.period = 0;             // bad period
  in.m0 = dec("10");
  in.m1 = dec("5");          // m0 > m1
  in.m2 = dec("4");          // m1 > m2
  in.m3_reported = dec("1"); // m3 < m2
  in.market_volume = dec("-2");  // negative
  in.inflation_pct = std::numeric_limits<double>::quiet_NaN();
  auto outcome = validate_observation(in);
  CHECK_FALSE(outcome.ok());
  CHECK(count_code(outcome.issues, Errc::non_nested_aggregates) == 3);
  CHECK(count_code(outcome.issues, Errc::negative_amount) == 1);
  CHECK(count_code(outcome.issues, Errc::bad_period) == 1);
  CHECK(count_code(outcome.issues, Errc::non_finite_percent) == 1);
  CHECK(outcome.issues.size() >= 6);
}

TEST_CASE("reported m3 below m2 is rejected") {
  ObservationInput in = test::russia2017();
  in.m3_reported = dec("39000");
  auto outcome = validate_observation(in);
  CHECK_FALSE(outcome.ok());
  CHECK(count_code(outcome.issues, Errc::non_nested_aggregates) == 1);
}

TEST_CASE("period pair demands one country and consecutive years") {
  auto a = test::must_validate(test::russia2017());
  auto b = test::must_validate(test::russia2018());
  CHECK_NOTHROW(PeriodPair::make(a, b));

  auto c = test::russia2018();
  c.country = "KZ";
  CHECK_THROWS_AS(PeriodPair::make(a, test::must_validate(c)), Error);

  auto d = test::russia2018();
  d.period = 2019;
  CHECK_THROWS_AS(PeriodPair::make(a, test::must_validate(d)), Error);
  CHECK_THROWS_AS(PeriodPair::make(b, a), Error);  // reversed order
}

}  // TEST_SUITE
