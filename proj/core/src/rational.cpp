#include "bitminer/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace bitminer {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* what) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) {
    throw std::overflow_error(what);
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("rational denominator must be nonzero");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : num;
  den_ = g ? den / g : den;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  const Wide lhs = Wide(a.num_) * b.den_;
  const Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::operator*(const Rational& other) const {
  // Cross-reduce before multiplying to keep intermediates small.
  const std::int64_t g1 = std::gcd(num_, other.den_);
  const std::int64_t g2 = std::gcd(other.num_, den_);
  const Wide n = Wide(g1 ? num_ / g1 : num_) * (g2 ? other.num_ / g2 : other.num_);
  const Wide d = Wide(g2 ? den_ / g2 : den_) * (g1 ? other.den_ / g1 : other.den_);
  return Rational(narrow(n, "rational multiply overflow"),
                  narrow(d, "rational multiply overflow"));
}

Rational Rational::operator/(const Rational& other) const {
  if (other.num_ == 0) {
    throw std::invalid_argument("rational division by zero");
  }
  return *this * Rational(other.den_, other.num_);
}

std::string Rational::to_decimal(int digits) const {
  Wide scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  const bool negative = num_ < 0;
  const Wide mag = negative ? -Wide(num_) : Wide(num_);
  const Wide scaled = mag * scale;
  Wide q = scaled / den_;
  const Wide r = scaled % den_;

  // Round half to even on the last rendered digit.
  const Wide twice = r * 2;
  if (twice > den_ || (twice == den_ && (q % 2) != 0)) ++q;

  const Wide whole = q / scale;
  Wide frac = q % scale;

  std::string out;
  if (negative && (whole != 0 || frac != 0)) out += '-';
  out += std::to_string(static_cast<long long>(whole));
  if (digits > 0) {
    std::string f(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0 && frac != 0; --i) {
      f[static_cast<std::size_t>(i)] = static_cast<char>('0' + int(frac % 10));
      frac /= 10;
    }
    out += '.';
    out += f;
  }
  return out;
}

}  // namespace bitminer
