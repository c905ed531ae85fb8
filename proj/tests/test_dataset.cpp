#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "smfa/dataset.hpp"
#include "support.hpp"

using namespace smfa;
using test::dec;

namespace {

DatasetParseResult parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_dataset(in);
}

int count_code(const std::vector<Diagnostic>& diagnostics, Errc code) {
  return static_cast<int>(std::count_if(
      diagnostics.begin(), diagnostics.end(),
      [code](const Diagnostic& d) { return d.code == code; }));
}

}  // namespace

TEST_SUITE("dataset") {

TEST_CASE("bundled fixture parses into the official values") {
  const auto result =
      parse_dataset_file(std::string(SMFA_DATA_DIR) + "/russia_2017_2018.csv");
  REQUIRE(result.ok());
  REQUIRE(result.records.size() == 2);

  const auto& r17 = result.records[0];
  CHECK(r17.country == "RU");
  CHECK(r17.period == 2017);
  CHECK(r17.aggregates.at(RawLabel::m0).decimal() == dec("7860.6"));
  CHECK(r17.aggregates.at(RawLabel::m1).decimal() == dec("17787.2"));
  CHECK(r17.aggregates.at(RawLabel::m2).decimal() == dec("39085.3"));
  CHECK_FALSE(r17.aggregates.count(RawLabel::m3));
  CHECK(r17.market_volume.decimal() == dec("912.5"));
  CHECK(r17.trading_volume.decimal() == dec("887569"));
  CHECK(r17.gdp.decimal() == dec("92089.3"));
  CHECK(*r17.investment_share_pct == doctest::Approx(21.6));
  CHECK(*r17.inventive_activity == doctest::Approx(1.55));

  const auto& r18 = result.records[1];
  CHECK(r18.period == 2018);
  CHECK(r18.inflation_pct == doctest::Approx(4.27));
  CHECK(r18.market_volume.decimal() == dec("1070.9"));
}

TEST_CASE("empty file is a malformed header") {
  const auto result = parse_text("");
  CHECK_FALSE(result.ok());
  CHECK(count_code(result.diagnostics, Errc::malformed_header) == 1);
}

TEST_CASE("missing required columns are each named") {
  const auto result = parse_text("country;period;m0;m1\nRU;2017;1;2\n");
  CHECK_FALSE(result.ok());
  CHECK(count_code(result.diagnostics, Errc::missing_required_column) == 5);
}

TEST_CASE("unknown columns warn and are ignored") {
  const auto result = parse_text(
      "country;period;m0;m1;m2;q_sm;q_tr;gdp;pi;mystery\n"
      "RU;2017;1;2;3;4;5;6;7;whatever\n");
  CHECK(result.ok());
  REQUIRE(result.records.size() == 1);
  CHECK(count_code(result.diagnostics, Errc::unknown_column) == 1);
  CHECK(result.diagnostics.front().severity == Severity::warning);
}

TEST_CASE("comma-delimited files with quoted locale numbers parse too") {
  const auto result = parse_text(
      "country,period,m0,m1,m2,q_sm,q_tr,gdp,pi\n"
      "RU,2017,\"7 860,6\",\"17 787,2\",\"39 085,3\",\"912,5\",\"887 569\","
      "\"92 089,3\",\"4,27\"\n");
  REQUIRE(result.ok());
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].aggregates.at(RawLabel::m2).decimal() == dec("39085.3"));
  CHECK(result.records[0].inflation_pct == doctest::Approx(4.27));
}

TEST_CASE("empty cells and dashes mark absent optionals") {
  const auto result = parse_text(
      "country;period;m0;m1;m2;m3;q_sm;q_tr;gdp;pi;omega_si;omega_l;k_inv\n"
      "RU;2017;1;2;3;;4;5;6;7;-;;1,5\n");
  REQUIRE(result.ok());
  const auto& record = result.records.front();
  CHECK_FALSE(record.aggregates.count(RawLabel::m3));
  CHECK_FALSE(record.investment_share_pct);
  CHECK_FALSE(record.hightech_share_pct);
  CHECK(*record.inventive_activity == doctest::Approx(1.5));
}

TEST_CASE("duplicate country-period records are fatal") {
  const auto result = parse_text(
      "country;period;m0;m1;m2;q_sm;q_tr;gdp;pi\n"
      "RU;2017;1;2;3;4;5;6;7\n"
      "RU;2017;1;2;3;4;5;6;7\n");
  CHECK_FALSE(result.ok());
  CHECK(count_code(result.diagnostics, Errc::duplicate_record) == 1);
  CHECK(result.records.size() == 1);
}

TEST_CASE("sub-annual periods are rejected, not resampled") {
  const auto result = parse_text(
      "country;period;m0;m1;m2;q_sm;q_tr;gdp;pi\n"
      "RU;2017Q1;1;2;3;4;5;6;7\n"
      "RU;2017.5;1;2;3;4;5;6;7\n");
  CHECK_FALSE(result.ok());
  CHECK(count_code(result.diagnostics, Errc::bad_period) == 2);
}

TEST_CASE("every defect is collected in one pass with its location") {
  const auto result = parse_text(
      "country;period;m0;m1;m2;q_sm;q_tr;gdp;pi\n"
      "RU;2017;oops;2;3;4;5;6;7\n"     // bad m0
      "RU;2018;1;2;3;4;5;6;bad\n"      // bad pi
      "RU;zzz;1;2;3;4;5;6;7\n"         // bad period
      ";2020;1;2;3;4;5;6;7\n"          // missing country
      "RU;2021;-5;2;3;4;5;6;7\n");     // negative money
  CHECK_FALSE(result.ok());
  CHECK(result.diagnostics.size() >= 5);
  CHECK(count_code(result.diagnostics, Errc::unparsable_number) >= 2);
  CHECK(count_code(result.diagnostics, Errc::bad_period) == 1);
  CHECK(count_code(result.diagnostics, Errc::negative_amount) == 1);

  const auto bad_m0 = std::find_if(
      result.diagnostics.begin(), result.diagnostics.end(),
      [](const Diagnostic& d) { return d.column == "m0" && d.line == 2; });
  REQUIRE(bad_m0 != result.diagnostics.end());
  CHECK(bad_m0->format().find("line 2") != std::string::npos);

  // healthy rows before and between defects still parse
  CHECK(result.records.empty());
}

TEST_CASE("raw aggregate columns feed the non-identity profiles") {
  const auto result = parse_text(
      "country;period;m0;m1;m2;q_sm;q_tr;gdp;pi;short_term_gov_securities;gov_securities\n"
      "KG;2017;10;40;100;5;6;200;3;8;20\n");
  REQUIRE(result.ok());
  const auto& record = result.records.front();
  CHECK(record.aggregates.at(RawLabel::short_term_gov_securities).decimal() == dec("8"));
  CHECK(record.aggregates.at(RawLabel::gov_securities).decimal() == dec("20"));

  const auto normalized = normalize(record, *find_profile(builtin_profiles(), "KG"));
  CHECK(normalized.observation.m2().decimal() == dec("92"));
  CHECK(normalized.observation.m3_reported()->decimal() == dec("112"));
}

}  // TEST_SUITE
