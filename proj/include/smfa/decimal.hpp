#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace smfa {

/// Fixed-point decimal with four fractional digits on a checked int64
/// mantissa. Official statistics tables carry at most one fractional digit,
/// so sums and differences of table values are exact here; binary floating
/// point would drift at exactly the precision the golden values are pinned
/// to. Ratios are not closed under this representation and are taken in
/// double precision by the callers that need them.
class Decimal {
 public:
  static constexpr int fraction_digits = 4;
  static constexpr std::int64_t scale = 10'000;

  constexpr Decimal() = default;

  static constexpr Decimal from_units(std::int64_t units) { return Decimal(units); }
  static Decimal from_int(std::int64_t whole);

  /// Locale-tolerant parse. Accepts "39 085,3" (space-grouped, comma
  /// decimal) as well as "39085.3"; grouping may use regular, no-break or
  /// narrow no-break spaces; the sign may be ASCII or U+2212. At most four
  /// fractional digits. Returns empty on anything else.
  static std::optional<Decimal> parse(std::string_view text);

  constexpr std::int64_t units() const { return units_; }
  constexpr bool is_zero() const { return units_ == 0; }
  constexpr bool is_negative() const { return units_ < 0; }
  double to_double() const;

  /// Canonical rendering: dot decimal separator, no grouping, trailing
  /// fractional zeros trimmed ("39085.3", "912.5", "887569").
  std::string str() const;

  /// Exactly `digits` fractional digits (0..4), rounded half away from zero.
  std::string str_fixed(int digits) const;

  Decimal operator+(Decimal rhs) const;
  Decimal operator-(Decimal rhs) const;
  Decimal operator-() const;

  /// Exact product, or empty when the result does not fit the working scale
  /// without truncation (or overflows int64).
  std::optional<Decimal> mul_exact(Decimal rhs) const;

  auto operator<=>(const Decimal&) const = default;

 private:
  explicit constexpr Decimal(std::int64_t units) : units_(units) {}

  std::int64_t units_ = 0;
};

/// Half-away-from-zero fixed rendering for derived (double) indicators;
/// matches the rounding used for Decimal::str_fixed.
std::string format_fixed(double value, int digits);

}  // namespace smfa
