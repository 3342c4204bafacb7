#include "sdg/rational.hpp"

#include <boost/integer/common_factor.hpp>

#include <cctype>
#include <ostream>

namespace sdg {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw std::invalid_argument("rational: zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
  } else {
    BigInt g = boost::integer::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) {
    throw std::domain_error("rational: division by zero");
  }
  return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

namespace {

bool parse_int(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  out = BigInt(std::string(s));
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
  };
  if (text.empty()) fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt n, d;
    if (!parse_int(text.substr(0, slash), n) || !parse_int(text.substr(slash + 1), d)) {
      fail();
    }
    if (d == 0) fail();
    return Rational(n, d);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) fail();
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) whole.remove_prefix(1);
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    }
    BigInt w = 0;
    if (!whole.empty() && !parse_int(whole, w)) fail();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = w * scale + BigInt(std::string(frac));
    if (neg) num = -num;
    return Rational(num, scale);
  }

  BigInt n;
  if (!parse_int(text, n)) fail();
  return Rational(n, 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace sdg
