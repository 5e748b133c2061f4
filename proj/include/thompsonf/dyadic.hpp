#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace thompsonf {

using BigInt = boost::multiprecision::cpp_int;

class Rational;

/// Exact dyadic rational numerator / 2^exponent.
///
/// Always stored canonically: the numerator is odd whenever the exponent is
/// positive, and zero is (0, 0). Equality is therefore field equality.
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(std::int64_t value) : numerator_(value) {}  // NOLINT(google-explicit-constructor)
  Dyadic(BigInt numerator, std::uint32_t exponent);

  /// numerator / 2^exponent, with an exponent that may be negative.
  static Dyadic from_scaled(BigInt numerator, std::int64_t exponent);
  /// 2^e for any integer e.
  static Dyadic power_of_two(std::int64_t e);
  /// "p/q" with q a positive power of two, or a bare integer.
  static Dyadic parse(std::string_view text);

  const BigInt& numerator() const noexcept { return numerator_; }
  std::uint32_t exponent() const noexcept { return exponent_; }

  bool is_zero() const { return numerator_.is_zero(); }
  int sign() const { return numerator_.sign(); }

  /// Writes a nonzero value as odd * 2^e and returns e.
  std::int64_t two_adic_valuation() const;
  /// The odd part of a nonzero value, with its sign.
  BigInt odd_part() const;

  /// Multiplication by 2^e.
  Dyadic scaled(std::int64_t e) const;

  std::string to_string() const;
  Rational to_rational() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
  void normalize();

  BigInt numerator_{0};
  std::uint32_t exponent_{0};
};

/// Exact rational in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t value) : numerator_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Dyadic& d) : Rational(d.to_rational()) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt numerator, BigInt denominator);

  /// "p/q" with any positive q, or a bare integer.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const noexcept { return numerator_; }
  const BigInt& denominator() const noexcept { return denominator_; }

  int sign() const { return numerator_.sign(); }
  bool is_dyadic() const;
  std::optional<Dyadic> to_dyadic() const;

  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  void normalize();

  BigInt numerator_{0};
  BigInt denominator_{1};
};

/// e with dy / dx = 2^e exactly. Both arguments must be positive.
/// Throws NotPowerOfTwo when the ratio is not an integral power of two.
std::int64_t slope_exponent(const Dyadic& dx, const Dyadic& dy);

}  // namespace thompsonf
