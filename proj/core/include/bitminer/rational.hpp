#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace bitminer {

/// Exact rational with positive denominator, kept in lowest terms.
///
/// Support fractions, confidences and lifts are compared by 128-bit
/// cross-multiplication, never through floating point, so itemsets sitting
/// exactly on a threshold boundary classify deterministically.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;

  Rational operator*(const Rational& other) const;
  Rational operator/(const Rational& other) const;

  /// Fixed-point decimal rendering with round-half-even,
  /// e.g. 3/4 -> "0.750000".
  std::string to_decimal(int digits = 6) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace bitminer
