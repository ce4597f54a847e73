#include "swt/radical.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace swt {

namespace {

// Small-word trial division. Radicands produced by the hook products are
// products of integers bounded by N + n, so the loop exits early in practice.
void split_square_u64(std::uint64_t value, std::uint64_t& root,
                      std::uint64_t& squarefree) {
  root = 1;
  squarefree = 1;
  for (std::uint64_t p = 2; p <= value / p; p += (p == 2 ? 1 : 2)) {
    int power = 0;
    while (value % p == 0) {
      value /= p;
      ++power;
    }
    for (int e = 0; e < power / 2; ++e) root *= p;
    if (power % 2 == 1) squarefree *= p;
  }
  squarefree *= value;
}

SquareSplit split_square_big(Integer value) {
  SquareSplit out{Integer(1), Integer(1)};
  for (Integer p = 2; p * p <= value; p += (p == 2 ? 1 : 2)) {
    if (value <= std::numeric_limits<std::uint64_t>::max()) break;
    int power = 0;
    while (value % p == 0) {
      value /= p;
      ++power;
    }
    for (int e = 0; e < power / 2; ++e) out.root *= p;
    if (power % 2 == 1) out.squarefree *= p;
  }
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t root = 1;
    std::uint64_t squarefree = 1;
    split_square_u64(value.convert_to<std::uint64_t>(), root, squarefree);
    out.root *= root;
    out.squarefree *= squarefree;
  } else {
    out.squarefree *= value;
  }
  return out;
}

double rational_to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  return Rational(numerator) / Rational(denominator);
}

SignedRadical::SignedRadical(int sign, Rational radicand)
    : sign_(sign), radicand_(std::move(radicand)) {
  if (sign_ < -1 || sign_ > 1) {
    throw std::invalid_argument("SignedRadical: sign must be -1, 0 or +1");
  }
  if (radicand_ < 0) {
    throw std::invalid_argument("SignedRadical: negative radicand");
  }
  if ((sign_ == 0) != (radicand_ == 0)) {
    throw std::invalid_argument("SignedRadical: sign is zero iff radicand is zero");
  }
}

double SignedRadical::to_double() const {
  return sign_ * std::sqrt(rational_to_double(radicand_));
}

SignedRadical operator*(const SignedRadical& a, const SignedRadical& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return SignedRadical(a.sign() * b.sign(), a.radicand() * b.radicand());
}

SquareSplit split_square(const Integer& value) {
  if (value <= 0) throw std::invalid_argument("split_square: value must be positive");
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t root = 1;
    std::uint64_t squarefree = 1;
    split_square_u64(value.convert_to<std::uint64_t>(), root, squarefree);
    return {Integer(root), Integer(squarefree)};
  }
  return split_square_big(value);
}

bool is_squarefree(const Integer& value) {
  return value > 0 && split_square(value).root == 1;
}

RadicalSum::RadicalSum(Rational value) {
  if (value != 0) terms_.emplace(Integer(1), std::move(value));
}

RadicalSum RadicalSum::from_terms(Terms terms) {
  RadicalSum out;
  for (auto& [radicand, coefficient] : terms) {
    if (!is_squarefree(radicand)) {
      throw std::invalid_argument("RadicalSum: radicand " + radicand.str() +
                                  " is not a positive squarefree integer");
    }
    if (coefficient != 0) out.terms_.emplace(radicand, std::move(coefficient));
  }
  return out;
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

double RadicalSum::to_double() const {
  double total = 0.0;
  for (const auto& [radicand, coefficient] : terms_) {
    total += rational_to_double(coefficient) * std::sqrt(radicand.convert_to<double>());
  }
  return total;
}

void RadicalSum::add_term(const Integer& radicand, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
  for (const auto& [radicand, coefficient] : other.terms_) add_term(radicand, coefficient);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& other) {
  for (const auto& [radicand, coefficient] : other.terms_) add_term(radicand, -coefficient);
  return *this;
}

RadicalSum& RadicalSum::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [radicand, coefficient] : terms_) coefficient *= factor;
  return *this;
}

RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
RadicalSum operator-(RadicalSum a) { return a *= Rational(-1); }
RadicalSum operator*(RadicalSum a, const Rational& b) { return a *= b; }

// c1 sqrt(d1) * c2 sqrt(d2) = c1 c2 g sqrt((d1/g)(d2/g)), g = gcd(d1, d2); the
// cofactors are coprime squarefree numbers, so their product is squarefree.
RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
  RadicalSum out;
  for (const auto& [d1, c1] : a.terms()) {
    for (const auto& [d2, c2] : b.terms()) {
      const Integer g = boost::multiprecision::gcd(d1, d2);
      out.add_term((d1 / g) * (d2 / g), c1 * c2 * Rational(g));
    }
  }
  return out;
}

RadicalSum operator*(const RadicalSum& a, const SignedRadical& b) {
  if (b.is_zero() || a.is_zero()) return {};
  return a * canonicalize(b);
}

RadicalSum canonicalize(const SignedRadical& value) {
  if (value.is_zero()) return {};
  const Integer p = boost::multiprecision::numerator(value.radicand());
  const Integer q = boost::multiprecision::denominator(value.radicand());
  // sqrt(p/q) = s1 sqrt(d1) / (s2 sqrt(d2)) = s1 / (s2 d2) * sqrt(d1 d2)
  const SquareSplit top = split_square(p);
  const SquareSplit bottom = split_square(q);
  const Integer g = boost::multiprecision::gcd(top.squarefree, bottom.squarefree);
  const Integer radicand = (top.squarefree / g) * (bottom.squarefree / g);
  Rational coefficient =
      make_rational(top.root * g, bottom.root * bottom.squarefree) * Rational(value.sign());
  RadicalSum out;
  out.add_term(radicand, coefficient);
  return out;
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const RadicalSum& value) {
  if (value.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [radicand, coefficient] : value.terms()) {
    Rational magnitude = coefficient < 0 ? Rational(-coefficient) : coefficient;
    if (first) {
      if (coefficient < 0) out += "-";
    } else {
      out += coefficient < 0 ? " - " : " + ";
    }
    first = false;
    if (radicand == 1) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += "sqrt(" + radicand.str() + ")";
    }
  }
  return out;
}

}  // namespace swt
