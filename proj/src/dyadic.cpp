#include "thompsonf/dyadic.hpp"

#include <cctype>
#include <limits>

#include "thompsonf/error.hpp"

namespace thompsonf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) fail(ErrorCode::ParseError, "expected an integer in '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      fail(ErrorCode::ParseError, "invalid number '" + std::string(whole) + "'");
  }
  std::string digits(s.substr(i));
  BigInt v(digits);
  return s[0] == '-' ? BigInt(-v) : v;
}

std::uint32_t low_zero_bits(const BigInt& v) {
  return static_cast<std::uint32_t>(boost::multiprecision::lsb(boost::multiprecision::abs(v)));
}

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::SlopeNotPowerOfTwo: return "SlopeNotPowerOfTwo";
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotInOrbital: return "NotInOrbital";
    case ErrorCode::IterationCap: return "IterationCap";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnboundName: return "UnboundName";
    case ErrorCode::SupportOutOfRange: return "SupportOutOfRange";
    case ErrorCode::NotFiniteIndex: return "NotFiniteIndex";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::NotMonotone:
    case ErrorCode::SlopeNotPowerOfTwo:
    case ErrorCode::CoordinateOutOfRange:
    case ErrorCode::OutOfRange:
    case ErrorCode::BadInput:
    case ErrorCode::NegativeIndex:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnboundName:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Dyadic

Dyadic::Dyadic(BigInt numerator, std::uint32_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (numerator_.is_zero()) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  std::uint32_t shift = std::min(low_zero_bits(numerator_), exponent_);
  if (shift > 0) {
    numerator_ >>= shift;  // exact: low bits are zero, sign preserved
    exponent_ -= shift;
  }
}

Dyadic Dyadic::from_scaled(BigInt numerator, std::int64_t exponent) {
  if (exponent >= 0) {
    if (exponent > std::numeric_limits<std::uint32_t>::max())
      fail(ErrorCode::OutOfRange, "dyadic exponent too large");
    return Dyadic(std::move(numerator), static_cast<std::uint32_t>(exponent));
  }
  numerator <<= static_cast<unsigned>(-exponent);
  return Dyadic(std::move(numerator), 0);
}

Dyadic Dyadic::power_of_two(std::int64_t e) {
  return from_scaled(BigInt(1), -e);
}

Dyadic Dyadic::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_integer(s, text), 0);
  BigInt num = parse_integer(s.substr(0, slash), text);
  BigInt den = parse_integer(s.substr(slash + 1), text);
  if (den <= 0) fail(ErrorCode::ParseError, "denominator must be positive in '" + std::string(text) + "'");
  std::uint32_t k = low_zero_bits(den);
  if ((den >> k) != 1)
    fail(ErrorCode::ParseError, "denominator is not a power of two in '" + std::string(text) + "'");
  return Dyadic(std::move(num), k);
}

std::int64_t Dyadic::two_adic_valuation() const {
  if (is_zero()) fail(ErrorCode::BadInput, "two-adic valuation of zero");
  return static_cast<std::int64_t>(low_zero_bits(numerator_)) - static_cast<std::int64_t>(exponent_);
}

BigInt Dyadic::odd_part() const {
  if (is_zero()) fail(ErrorCode::BadInput, "odd part of zero");
  return numerator_ >> low_zero_bits(numerator_);
}

Dyadic Dyadic::scaled(std::int64_t e) const {
  return from_scaled(numerator_, static_cast<std::int64_t>(exponent_) - e);
}

std::string Dyadic::to_string() const {
  if (exponent_ == 0) return numerator_.str();
  BigInt den = BigInt(1) << exponent_;
  return numerator_.str() + "/" + den.str();
}

Rational Dyadic::to_rational() const {
  return Rational(numerator_, BigInt(1) << exponent_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  std::uint32_t k = std::max(a.exponent_, b.exponent_);
  BigInt n = (a.numerator_ << (k - a.exponent_)) + (b.numerator_ << (k - b.exponent_));
  return Dyadic(std::move(n), k);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.numerator_ * b.numerator_, a.exponent_ + b.exponent_);
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.numerator_ = -r.numerator_;
  return r;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  std::uint32_t k = std::max(a.exponent_, b.exponent_);
  BigInt lhs = a.numerator_ << (k - a.exponent_);
  BigInt rhs = b.numerator_ << (k - b.exponent_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(BigInt numerator, BigInt denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) fail(ErrorCode::BadInput, "zero denominator");
  normalize();
}

void Rational::normalize() {
  if (denominator_ < 0) {
    numerator_ = -numerator_;
    denominator_ = -denominator_;
  }
  if (numerator_.is_zero()) {
    denominator_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(numerator_, denominator_);
  if (g != 1) {
    numerator_ /= g;
    denominator_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text), BigInt(1));
  BigInt num = parse_integer(s.substr(0, slash), text);
  BigInt den = parse_integer(s.substr(slash + 1), text);
  if (den <= 0) fail(ErrorCode::ParseError, "denominator must be positive in '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

bool Rational::is_dyadic() const {
  return (denominator_ >> low_zero_bits(denominator_)) == 1;
}

std::optional<Dyadic> Rational::to_dyadic() const {
  if (!is_dyadic()) return std::nullopt;
  return Dyadic(numerator_, low_zero_bits(denominator_));
}

std::string Rational::to_string() const {
  if (denominator_ == 1) return numerator_.str();
  return numerator_.str() + "/" + denominator_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
                  a.denominator_ * b.denominator_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.numerator_ * b.numerator_, a.denominator_ * b.denominator_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.numerator_.is_zero()) fail(ErrorCode::BadInput, "division by zero");
  return Rational(a.numerator_ * b.denominator_, a.denominator_ * b.numerator_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.numerator_ = -r.numerator_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.numerator_ * b.denominator_;
  BigInt rhs = b.numerator_ * a.denominator_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

std::int64_t slope_exponent(const Dyadic& dx, const Dyadic& dy) {
  if (dx.sign() <= 0 || dy.sign() <= 0)
    fail(ErrorCode::BadInput, "slope_exponent needs positive increments");
  if (dx.odd_part() != dy.odd_part())
    fail(ErrorCode::NotPowerOfTwo,
         "slope " + dy.to_string() + " / " + dx.to_string() + " is not a power of two");
  return dy.two_adic_valuation() - dx.two_adic_valuation();
}

}  // namespace thompsonf
