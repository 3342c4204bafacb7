#ifndef SDG_RATIONAL_HPP
#define SDG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; arbitrary-precision integers underneath, so products over
/// long outcome sequences never overflow.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by intent
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_probability() const { return num_ >= 0 && num_ <= den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws on division by zero
  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  /// Renders "a/b", or just "a" when the denominator is 1.
  std::string str() const;

  double to_double() const;

  /// Accepts "a/b", a plain integer, or a decimal like "0.5". Decimals are
  /// converted exactly over powers of ten, never through binary floating
  /// point. Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

 private:
  BigInt num_;
  BigInt den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational rational(long long num, long long den) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace sdg

#endif  // SDG_RATIONAL_HPP
