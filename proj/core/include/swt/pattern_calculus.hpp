#pragma once

#include "swt/gt_pattern.hpp"
#include "swt/radical.hpp"

namespace swt {

// Matrix element of the fundamental tensor operator taking `initial` to
// `initial + shift`, from Louck's pattern-calculus product:
//
//   prod_{j=k+1..n} S(tau_{j-1} - tau_j) sqrt| A_j |  *  sqrt| B_k |
//
//   A_j = prod_{i<j, i!=tau_{j-1}} (p(tau_j,j) - p(i,j-1))
//         * prod_{i<=j, i!=tau_j} (p(tau_{j-1},j-1) - p(i,j) + 1)
//       / prod_{i<=j, i!=tau_j} (p(tau_j,j) - p(i,j))
//         / prod_{i<j, i!=tau_{j-1}} (p(tau_{j-1},j-1) - p(i,j-1) + 1)
//
//   B_k = prod_{i<k} (p(tau_k,k) - p(i,k-1)) / prod_{i<=k, i!=tau_k} (p(tau_k,k) - p(i,k))
//
// with k = shift.letter, partial hooks p(i,j) = m(i,j) + j - i taken on the
// initial pattern, S(x) = +1 for x >= 0 and -1 otherwise, and empty products 1.
//
// Throws std::invalid_argument if the shift does not produce a valid pattern,
// std::domain_error if a denominator factor vanishes.
SignedRadical fundamental_element(const GTPattern& initial, const ShiftVector& shift);

struct OperatorElement {
  GTPattern initial;
  ShiftVector shift;
  SignedRadical value;
};

}  // namespace swt
