#include "cutpaste/scalar.hpp"

#include "cutpaste/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <regex>

namespace cutpaste {

namespace {

// Largest r with r^l <= n, for n >= 0.
Integer integer_root(const Integer& n, long l) {
  if (n < 2) return n;
  Integer lo = 1;
  Integer hi = 1;
  while (boost::multiprecision::pow(hi, static_cast<unsigned>(l)) <= n) hi *= 2;
  while (lo + 1 < hi) {
    const Integer mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(l)) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

GroupScalar GroupScalar::rational(const Rational& value) {
  if (value == 0) throw Error(ErrorKind::InvalidSpec, "zero is not invertible");
  return GroupScalar(Variant::Rational, value, 1);
}

GroupScalar GroupScalar::exp(const Rational& exponent, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidSpec, "sign must be +1 or -1");
  return GroupScalar(Variant::SignedExp, exponent, sign);
}

GroupScalar GroupScalar::one(Variant v) { return v == Variant::Rational ? rational(1) : exp(0); }

int GroupScalar::sign() const {
  if (variant_ == Variant::SignedExp) return sign_;
  return value_ < 0 ? -1 : 1;
}

bool GroupScalar::is_one() const {
  return variant_ == Variant::Rational ? value_ == 1 : (value_ == 0 && sign_ == 1);
}

GroupScalar GroupScalar::inverse() const {
  if (variant_ == Variant::Rational) return GroupScalar(variant_, 1 / value_, 1);
  return GroupScalar(variant_, -value_, sign_);
}

GroupScalar GroupScalar::abs() const {
  if (variant_ == Variant::Rational) return GroupScalar(variant_, value_ < 0 ? Rational(-value_) : value_, 1);
  return GroupScalar(variant_, value_, 1);
}

GroupScalar GroupScalar::pow(long k) const { return pow(Integer(k)); }

GroupScalar GroupScalar::pow(const Integer& k) const {
  const bool odd = (k % 2) != 0;
  if (variant_ == Variant::SignedExp) return GroupScalar(variant_, value_ * Rational(k), odd ? sign_ : 1);
  const Integer magnitude = k < 0 ? Integer(-k) : k;
  if (magnitude > 1000000) throw Error(ErrorKind::InvalidSpec, "exponent too large for an exact rational power");
  const auto e = static_cast<unsigned>(magnitude);
  const Rational base = k < 0 ? Rational(1 / value_) : value_;
  Rational result(boost::multiprecision::pow(numerator(base), e), boost::multiprecision::pow(denominator(base), e));
  return GroupScalar(variant_, result, 1);
}

GroupScalar GroupScalar::root(long l) const {
  if (l <= 0) throw Error(ErrorKind::InvalidSpec, "root order must be positive");
  if (l == 1) return *this;
  if (sign() < 0 && l % 2 == 0)
    throw Error(ErrorKind::FractionalExponent, "even root of a negative scalar " + to_string(*this));
  if (variant_ == Variant::SignedExp) return GroupScalar(variant_, value_ / l, sign_);
  const Integer num = numerator(value_) < 0 ? Integer(-numerator(value_)) : numerator(value_);
  const Integer den = denominator(value_);
  const Integer rn = integer_root(num, l);
  const Integer rd = integer_root(den, l);
  if (boost::multiprecision::pow(rn, static_cast<unsigned>(l)) != num ||
      boost::multiprecision::pow(rd, static_cast<unsigned>(l)) != den)
    throw Error(ErrorKind::FractionalExponent,
                to_string(*this) + " has no exact rational root of order " + std::to_string(l));
  return GroupScalar(variant_, Rational(sign() < 0 ? Integer(-rn) : rn, rd), 1);
}

GroupScalar operator*(const GroupScalar& a, const GroupScalar& b) {
  if (a.variant_ != b.variant_) throw Error(ErrorKind::VariantMismatch, "rational and exponential scalars do not mix");
  if (a.variant_ == GroupScalar::Variant::Rational) return GroupScalar(a.variant_, a.value_ * b.value_, 1);
  return GroupScalar(a.variant_, a.value_ + b.value_, a.sign_ * b.sign_);
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_exp_string(const GroupScalar& s) {
  if (s.variant() == GroupScalar::Variant::Rational) return to_string(s.value());
  return std::string(s.sign() < 0 ? "-" : "") + "exp(" + to_string(s.exponent()) + ")";
}

std::string to_string(const GroupScalar& s) {
  if (s.variant() == GroupScalar::Variant::SignedExp && s.exponent() == 0) return s.sign() < 0 ? "-1" : "1";
  return to_exp_string(s);
}

Rational parse_rational(const std::string& text) {
  static const std::regex shape(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, shape)) throw Error(ErrorKind::SyntaxError, "not a rational number: '" + text + "'");
  const Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  const Integer den(m[2].matched ? m[2].str() : "1");
  if (den == 0) throw Error(ErrorKind::SyntaxError, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace cutpaste
