#ifndef PAED_RATIONAL_HPP
#define PAED_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paed {

// Exact arbitrary-precision rational. All cost and threshold arithmetic in
// the scheduling modules runs on this type so that break-even comparisons
// never flip under rounding.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses a plain decimal literal ("-12", "0.056", "17.56") into an exact
// rational. Scientific notation is not accepted.
Rational rational_from_decimal(std::string_view text);

// Shortest round-trip decimal of a double, re-read as an exact rational.
// Turns config/JSON numbers like 0.056 into 56/1000 instead of the nearest
// dyadic.
Rational rational_from_double_decimal(double x);

// Fixed-point rendering with the given number of decimal places, rounding
// half away from zero. Used by the result emitters.
std::string format_fixed(const Rational& r, int decimals);

// Integer parts of an exact division.
BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt ceil_div(const BigInt& num, const BigInt& den);

inline BigInt ceil_rational(const Rational& r) {
  return ceil_div(numerator(r), denominator(r));
}

inline std::int64_t to_int64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

} // namespace paed

#endif
