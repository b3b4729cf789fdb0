#pragma once

#include "cutpaste/exact_linalg.hpp"

#include <string>

namespace cutpaste {

/// Element of the target group of an invertible field theory: either a
/// nonzero rational, or sign * exp(r) with r rational. The second form is
/// exact for positive reals of the shape exp(rational) and their negatives.
class GroupScalar {
 public:
  enum class Variant { Rational, SignedExp };

  GroupScalar() : GroupScalar(one(Variant::Rational)) {}

  // Throws InvalidSpec for zero.
  static GroupScalar rational(const Rational& value);
  static GroupScalar exp(const Rational& exponent, int sign = 1);
  static GroupScalar one(Variant v);

  Variant variant() const noexcept { return variant_; }
  // Rational variant only.
  const Rational& value() const noexcept { return value_; }
  // SignedExp variant only.
  const Rational& exponent() const noexcept { return value_; }
  int sign() const;

  bool is_one() const;
  GroupScalar inverse() const;
  GroupScalar abs() const;
  GroupScalar pow(long k) const;
  GroupScalar pow(const Integer& k) const;
  // Exact l-th root. Throws FractionalExponent when it does not exist in
  // the variant (a rational that is not an l-th power, or a negative value
  // with even l).
  GroupScalar root(long l) const;

  // Throws VariantMismatch.
  friend GroupScalar operator*(const GroupScalar& a, const GroupScalar& b);
  friend GroupScalar operator/(const GroupScalar& a, const GroupScalar& b) { return a * b.inverse(); }
  friend bool operator==(const GroupScalar&, const GroupScalar&) = default;

 private:
  GroupScalar(Variant v, Rational value, int sign) : variant_(v), value_(std::move(value)), sign_(sign) {}

  Variant variant_;
  Rational value_;
  int sign_ = 1;
};

// "p/q" or "p"; exp form prints "exp(r)", with exp(0) as "1" and -exp(0) as "-1".
std::string to_string(const GroupScalar& s);
// Always "exp(r)" / "-exp(r)" for the exp variant, including r = 0.
std::string to_exp_string(const GroupScalar& s);
std::string to_string(const Rational& q);

// Parses "p/q" or an integer. Throws SyntaxError.
Rational parse_rational(const std::string& text);

}  // namespace cutpaste
