#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "upq/error.hpp"

namespace upq {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits live inline and are
/// combined through 128-bit intermediates. Anything larger is promoted to an
/// arbitrary-precision boost rational and demoted again as soon as it fits, so
/// every value has exactly one representation.
class Rational {
 public:
  Rational() noexcept = default;

  Rational(std::int64_t value) {  // NOLINT(google-explicit-constructor)
    assign_wide(static_cast<Wide>(value), 1);
  }

  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    assign_wide(static_cast<Wide>(num), static_cast<Wide>(den));
  }

  explicit Rational(const BigInt& value) { assign_big(BigRational(value)); }

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    // boost rejects a negative denominator here
    assign_big(den < 0 ? BigRational(BigInt(-num), BigInt(-den)) : BigRational(num, den));
  }

  explicit Rational(const BigRational& value) { assign_big(value); }

  /// Parses "n", "-n", "+n" or "n/d" (d may carry a sign; it is normalized).
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    if (text.find('/', slash + 1) != std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  }

  BigInt numerator() const {
    return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
  }
  BigInt denominator() const {
    return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_);
  }

  bool is_integer() const {
    return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
  }
  int sign() const {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }

  Rational floor() const {
    if (!big_) {
      std::int64_t q = num_ / den_;
      if (num_ % den_ != 0 && num_ < 0) --q;
      return Rational(q);
    }
    const BigInt n = numerator();
    const BigInt d = denominator();
    BigInt q = n / d;
    if (q * d != n && n < 0) q -= 1;
    return Rational(q);
  }
  Rational ceil() const { return -(-*this).floor(); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// Exact conversion of an integral value; throws when the value is not an
  /// integer or does not fit.
  std::int64_t to_int64() const {
    if (!is_integer()) throw Error(ErrorCode::Overflow, to_string() + " is not an integer");
    if (big_) throw Error(ErrorCode::Overflow, to_string() + " does not fit in 64 bits");
    return num_;
  }

  std::string to_string() const {
    if (big_) {
      const BigInt d = denominator();
      return d == 1 ? numerator().str() : numerator().str() + "/" + d.str();
    }
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  BigRational to_big() const { return big_ ? *big_ : BigRational(BigInt(num_), BigInt(den_)); }

  Rational operator-() const {
    if (!big_) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return Rational(BigRational(-*big_));
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    if (x.small() && y.small()) {
      Rational r;
      if (x.den_ == y.den_) {
        r.assign_wide(Wide(x.num_) + y.num_, x.den_);
      } else {
        r.assign_wide(Wide(x.num_) * y.den_ + Wide(y.num_) * x.den_, Wide(x.den_) * y.den_);
      }
      return r;
    }
    return Rational(BigRational(x.to_big() + y.to_big()));
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    if (x.small() && y.small()) {
      Rational r;
      r.assign_wide(Wide(x.num_) * y.num_, Wide(x.den_) * y.den_);
      return r;
    }
    return Rational(BigRational(x.to_big() * y.to_big()));
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.sign() == 0) throw Error(ErrorCode::Overflow, "division by zero");
    if (x.small() && y.small()) {
      Rational r;
      r.assign_wide(Wide(x.num_) * y.den_, Wide(x.den_) * y.num_);
      return r;
    }
    return Rational(BigRational(x.to_big() / y.to_big()));
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    if (x.small() && y.small()) return x.num_ == y.num_ && x.den_ == y.den_;
    return x.to_big() == y.to_big();
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    if (x.small() && y.small()) {
      const Wide lhs = Wide(x.num_) * y.den_;
      const Wide rhs = Wide(y.num_) * x.den_;
      if (lhs < rhs) return std::strong_ordering::less;
      if (lhs > rhs) return std::strong_ordering::greater;
      return std::strong_ordering::equal;
    }
    const BigRational lhs = x.to_big();
    const BigRational rhs = y.to_big();
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  /// True when the value is held inline (exposed for tests of the promotion path).
  bool is_compact() const noexcept { return !big_; }

 private:
  using Wide = __int128;
  using UWide = unsigned __int128;
  static constexpr std::int64_t kCompactMax = INT64_MAX;

  bool small() const noexcept { return !big_; }

  static bool fits(Wide v) { return v >= -Wide(kCompactMax) && v <= Wide(kCompactMax); }

  static UWide gcd_wide(UWide a, UWide b) {
    constexpr UWide kLow = ~std::uint64_t{0};
    if (a <= kLow && b <= kLow) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    while (b != 0) {
      UWide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static BigInt widen(Wide v) {
    const bool negative = v < 0;
    UWide mag = negative ? UWide(0) - UWide(v) : UWide(v);
    BigInt out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return negative ? BigInt(-out) : out;
  }

  void assign_wide(Wide n, Wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const UWide g = gcd_wide(n < 0 ? UWide(0) - UWide(n) : UWide(n), UWide(d));
    if (g > 1) {
      n /= Wide(g);
      d /= Wide(g);
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      big_ = std::make_shared<const BigRational>(widen(n), widen(d));
    }
  }

  void assign_big(const BigRational& v) {
    const BigInt& n = boost::multiprecision::numerator(v);
    const BigInt& d = boost::multiprecision::denominator(v);
    static const BigInt kMax(kCompactMax);
    if (n <= kMax && n >= -kMax && d <= kMax) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      big_ = std::make_shared<const BigRational>(v);
    }
  }

  static BigInt parse_integer(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      negative = text[i] == '-';
      ++i;
    }
    if (i == text.size()) {
      throw Error(ErrorCode::ParseError, "malformed integer '" + std::string(text) + "'");
    }
    BigInt value = 0;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '0' || c > '9') {
        throw Error(ErrorCode::ParseError, "malformed integer '" + std::string(text) + "'");
      }
      value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
};

inline Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }
inline Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }

}  // namespace upq
