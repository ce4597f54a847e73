#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "swt/tableaux.hpp"

namespace swt {

// Triangular Gelfand-Tsetlin pattern of order n. Row j (1..n) has j entries
// m(i, j); row n is the U(n) partition and row 1 the bottom apex. Every
// instance satisfies m(i, j) >= m(i, j-1) >= m(i+1, j).
//
// Ordering is lexicographic on the entries read top row first, left to right.
class GTPattern {
 public:
  // All-zero triangle.
  static GTPattern zero(int n);
  // Rows given top (length n) to bottom (length 1). Throws
  // std::invalid_argument on a malformed triangle or a betweenness violation.
  static GTPattern from_rows(const std::vector<std::vector<int>>& top_down);

  int order() const { return n_; }
  // m(i, j), 1 <= i <= j <= n.
  int entry(int i, int j) const;
  std::span<const int> row(int j) const;
  Partition top() const;

  // Rows top to bottom.
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const GTPattern&, const GTPattern&) = default;
  friend auto operator<=>(const GTPattern&, const GTPattern&) = default;

 private:
  GTPattern(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {}
  std::size_t offset(int j) const;

  friend class PatternBuilder;

  int n_ = 0;
  // Row n first, then row n-1, ..., row 1.
  std::vector<int> entries_;
};

// Increment positions of one fundamental insertion: row j (letter <= j <= n)
// gains +1 at position tau(j).
struct ShiftVector {
  int letter = 1;
  std::vector<int> taus;  // tau(letter), tau(letter + 1), ..., tau(n)

  int tau(int j) const { return taus[j - letter]; }
  int order() const { return letter + static_cast<int>(taus.size()) - 1; }

  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
  friend auto operator<=>(const ShiftVector&, const ShiftVector&) = default;
};

struct Insertion {
  GTPattern pattern;
  ShiftVector shift;
};

// Row j is the shape of the entries <= j of t. Throws if t uses a letter > n.
GTPattern from_weyl(const WeylTableau& t, int n);
WeylTableau to_weyl(const GTPattern& pattern);

// p(i, j) = m(i, j) + j - i. Throws std::out_of_range outside the triangle.
int partial_hook(const GTPattern& pattern, int i, int j);

// w_j = |row j| - |row j-1|.
WeightVector pattern_weight(const GTPattern& pattern);

// The shifted pattern, or nullopt if it breaks betweenness or the shift is
// malformed for this order.
std::optional<GTPattern> apply_shift(const GTPattern& pattern, const ShiftVector& shift);

// Every pattern obtained by adding one at tau(j) in rows j = letter..n whose top
// row equals target_top and that still satisfies betweenness, ordered
// lexicographically by taus. An empty result means no legal insertion.
std::vector<Insertion> insert_letter(const GTPattern& pattern, int letter, const Partition& target_top);

}  // namespace swt
