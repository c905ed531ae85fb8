#include "smfa/decimal.hpp"

#include <cmath>
#include <cstdlib>

#include "smfa/errors.hpp"

namespace smfa {

namespace {

constexpr std::int64_t kMaxUnits = INT64_MAX;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(Errc::numeric_overflow, "decimal addition overflow");
  return out;
}

// Strips grouping characters: ASCII space, NBSP (U+00A0), narrow NBSP
// (U+202F) and apostrophe. Maps U+2212 to '-'. Returns empty on any other
// non [0-9+-.,] byte.
bool preprocess(std::string_view text, std::string& out) {
  out.clear();
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == ' ' || c == '\'') continue;
    if (c == 0xC2 && i + 1 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0xA0) {
      ++i;
      continue;
    }
    if (c == 0xE2 && i + 2 < text.size()) {
      unsigned char c1 = static_cast<unsigned char>(text[i + 1]);
      unsigned char c2 = static_cast<unsigned char>(text[i + 2]);
      if (c1 == 0x80 && c2 == 0xAF) {  // narrow no-break space
        i += 2;
        continue;
      }
      if (c1 == 0x88 && c2 == 0x92) {  // minus sign
        out.push_back('-');
        i += 2;
        continue;
      }
    }
    if ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.' || c == ',') {
      out.push_back(static_cast<char>(c));
      continue;
    }
    return false;
  }
  return true;
}

}  // namespace

Decimal Decimal::from_int(std::int64_t whole) {
  std::int64_t units = 0;
  if (__builtin_mul_overflow(whole, scale, &units))
    throw Error(Errc::numeric_overflow, "decimal out of range");
  return Decimal(units);
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
  std::string s;
  if (!preprocess(text, s) || s.empty()) return std::nullopt;

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }

  __int128 integer = 0;
  int int_digits = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    integer = integer * 10 + (s[pos] - '0');
    if (++int_digits > 15) return std::nullopt;
    ++pos;
  }

  std::int64_t frac = 0;
  int frac_digits = 0;
  if (pos < s.size()) {
    if (s[pos] != '.' && s[pos] != ',') return std::nullopt;
    ++pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      if (++frac_digits > fraction_digits) return std::nullopt;
      frac = frac * 10 + (s[pos] - '0');
      ++pos;
    }
    if (frac_digits == 0) return std::nullopt;  // bare separator
  }
  if (pos != s.size()) return std::nullopt;  // second separator or stray sign
  if (int_digits == 0 && frac_digits == 0) return std::nullopt;

  for (int i = frac_digits; i < fraction_digits; ++i) frac *= 10;

  __int128 units = integer * scale + frac;
  if (negative) units = -units;
  if (units > kMaxUnits || units < -static_cast<__int128>(kMaxUnits))
    return std::nullopt;
  return Decimal(static_cast<std::int64_t>(units));
}

double Decimal::to_double() const {
  return static_cast<double>(units_) / static_cast<double>(scale);
}

std::string Decimal::str() const {
  std::int64_t a = units_ < 0 ? -units_ : units_;
  std::int64_t whole = a / scale;
  std::int64_t frac = a % scale;
  std::string out = units_ < 0 ? "-" : "";
  out += std::to_string(whole);
  if (frac != 0) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04lld", static_cast<long long>(frac));
    std::string digits(buf);
    while (digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

std::string Decimal::str_fixed(int digits) const {
  if (digits < 0 || digits > fraction_digits)
    throw Error(Errc::out_of_range, "str_fixed digits must be in 0..4");
  std::int64_t q = 1;
  for (int i = digits; i < fraction_digits; ++i) q *= 10;
  std::int64_t a = units_ < 0 ? -units_ : units_;
  std::int64_t rounded = (a + q / 2) / q;

  std::int64_t unit = scale / q;  // 10^digits
  std::int64_t whole = rounded / unit;
  std::int64_t frac = rounded % unit;
  std::string out = (units_ < 0 && rounded != 0) ? "-" : "";
  out += std::to_string(whole);
  if (digits > 0) {
    std::string f = std::to_string(frac);
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

Decimal Decimal::operator+(Decimal rhs) const {
  return Decimal(checked_add(units_, rhs.units_));
}

Decimal Decimal::operator-(Decimal rhs) const {
  return Decimal(checked_add(units_, -rhs.units_));
}

Decimal Decimal::operator-() const { return Decimal(-units_); }

std::optional<Decimal> Decimal::mul_exact(Decimal rhs) const {
  __int128 product = static_cast<__int128>(units_) * rhs.units_;
  if (product % scale != 0) return std::nullopt;
  product /= scale;
  if (product > kMaxUnits || product < -static_cast<__int128>(kMaxUnits))
    return std::nullopt;
  return Decimal(static_cast<std::int64_t>(product));
}

std::string format_fixed(double value, int digits) {
  double p = 1.0;
  for (int i = 0; i < digits; ++i) p *= 10.0;
  double scaled = value * p;
  if (!std::isfinite(scaled) || std::abs(scaled) >= 9.0e15) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
  }
  long long r = std::llround(scaled);  // llround is half away from zero
  long long a = r < 0 ? -r : r;
  long long unit = static_cast<long long>(p);
  std::string out = r < 0 ? "-" : "";
  out += std::to_string(digits > 0 ? a / unit : a);
  if (digits > 0) {
    std::string f = std::to_string(a % unit);
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

}  // namespace smfa
