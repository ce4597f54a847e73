#include "swt/pattern_calculus.hpp"

#include <stdexcept>

namespace swt {

namespace {

struct Ratio {
  Integer numerator{1};
  Integer denominator{1};

  void times(long factor) { numerator *= factor; }
  void over(long factor) {
    if (factor == 0) throw std::domain_error("fundamental_element: vanishing denominator factor");
    denominator *= factor;
  }
};

}  // namespace

SignedRadical fundamental_element(const GTPattern& initial, const ShiftVector& shift) {
  const int n = initial.order();
  const int k = shift.letter;
  if (!apply_shift(initial, shift)) {
    throw std::invalid_argument("fundamental_element: shift does not yield a valid pattern");
  }
  auto p = [&](int i, int j) -> long { return partial_hook(initial, i, j); };

  int sign = 1;
  Ratio ratio;
  for (int j = k + 1; j <= n; ++j) {
    const int lower = shift.tau(j - 1);
    const int upper = shift.tau(j);
    if (lower - upper < 0) sign = -sign;
    for (int i = 1; i <= j - 1; ++i) {
      if (i == lower) continue;
      ratio.times(p(upper, j) - p(i, j - 1));
      ratio.over(p(lower, j - 1) - p(i, j - 1) + 1);
    }
    for (int i = 1; i <= j; ++i) {
      if (i == upper) continue;
      ratio.times(p(lower, j - 1) - p(i, j) + 1);
      ratio.over(p(upper, j) - p(i, j));
    }
  }
  const int tail = shift.tau(k);
  for (int i = 1; i <= k - 1; ++i) ratio.times(p(tail, k) - p(i, k - 1));
  for (int i = 1; i <= k; ++i) {
    if (i != tail) ratio.over(p(tail, k) - p(i, k));
  }

  Rational magnitude = make_rational(abs(ratio.numerator), abs(ratio.denominator));
  if (magnitude == 0) return {};
  return SignedRadical(sign, std::move(magnitude));
}

}  // namespace swt
