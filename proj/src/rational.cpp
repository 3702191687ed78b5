#include "paed/rational.hpp"

#include <charconv>
#include <cmath>

namespace paed {

Rational rational_from_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt mantissa = 0;
  std::size_t digits = 0;
  std::size_t frac_digits = 0;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("malformed decimal: " + std::string(text));
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') throw std::invalid_argument("malformed decimal: " + std::string(text));
    mantissa = mantissa * 10 + (c - '0');
    ++digits;
    if (seen_point) ++frac_digits;
  }
  if (digits == 0) throw std::invalid_argument("malformed decimal: " + std::string(text));
  BigInt den = 1;
  for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
  Rational r(mantissa, den);
  return negative ? -r : r;
}

Rational rational_from_double_decimal(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite number");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
  if (text.find('e') != std::string_view::npos || text.find('E') != std::string_view::npos) {
    // Fall back to the exact dyadic value for extreme magnitudes.
    return Rational(x);
  }
  return rational_from_decimal(text);
}

std::string format_fixed(const Rational& r, int decimals) {
  BigInt scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  Rational scaled = r * scale;
  BigInt num = numerator(scaled);
  BigInt den = denominator(scaled);
  bool negative = num < 0;
  if (negative) num = -num;
  // Round half away from zero.
  BigInt q = (2 * num + den) / (2 * den);
  std::string digits = q.str();
  if (static_cast<int>(digits.size()) <= decimals)
    digits.insert(0, static_cast<std::size_t>(decimals + 1 - digits.size()), '0');
  std::string out;
  if (negative && q != 0) out += '-';
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
  if (decimals > 0) {
    out += '.';
    out += digits.substr(digits.size() - static_cast<std::size_t>(decimals));
  }
  return out;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

} // namespace paed
