#pragma once

#include <compare>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace swt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(const Integer& numerator, const Integer& denominator);

// sign * sqrt(radicand), radicand >= 0, sign == 0 iff radicand == 0.
class SignedRadical {
 public:
  SignedRadical() = default;
  SignedRadical(int sign, Rational radicand);

  static SignedRadical one() { return SignedRadical(1, Rational(1)); }

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  double to_double() const;

  friend bool operator==(const SignedRadical&, const SignedRadical&) = default;

 private:
  int sign_ = 0;
  Rational radicand_{0};
};

SignedRadical operator*(const SignedRadical& a, const SignedRadical& b);

// Finite sum c_1 sqrt(d_1) + ... with distinct squarefree d_i > 0 and nonzero
// rational c_i. The term map is the canonical form, so equality of the maps is
// equality of the real numbers.
class RadicalSum {
 public:
  using Terms = std::map<Integer, Rational>;

  RadicalSum() = default;
  explicit RadicalSum(Rational value);

  // Throws std::invalid_argument on a non-squarefree or nonpositive key.
  static RadicalSum from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // True when the value is rational (no irrational terms).
  bool is_rational() const;

  double to_double() const;

  RadicalSum& operator+=(const RadicalSum& other);
  RadicalSum& operator-=(const RadicalSum& other);
  RadicalSum& operator*=(const Rational& factor);

  friend bool operator==(const RadicalSum&, const RadicalSum&) = default;

 private:
  friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);
  friend RadicalSum canonicalize(const SignedRadical& value);

  void add_term(const Integer& radicand, const Rational& coefficient);

  Terms terms_;
};

RadicalSum operator+(RadicalSum a, const RadicalSum& b);
RadicalSum operator-(RadicalSum a, const RadicalSum& b);
RadicalSum operator-(RadicalSum a);
RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);
RadicalSum operator*(const RadicalSum& a, const SignedRadical& b);
RadicalSum operator*(RadicalSum a, const Rational& b);

// sign * sqrt(p/q)  ->  (sign * a / (b * q)) * sqrt(d), d squarefree.
RadicalSum canonicalize(const SignedRadical& value);

inline double to_double(const RadicalSum& value) { return value.to_double(); }

struct SquareSplit {
  Integer root;        // largest s with s^2 | value
  Integer squarefree;  // value / s^2
};

// Trial-division split of a positive integer into root^2 * squarefree.
SquareSplit split_square(const Integer& value);
bool is_squarefree(const Integer& value);

// "5/12", "-1/6*sqrt(6)", "1/2*sqrt(2) + sqrt(3)", "0".
std::string to_string(const RadicalSum& value);
std::string to_string(const Rational& value);

}  // namespace swt
