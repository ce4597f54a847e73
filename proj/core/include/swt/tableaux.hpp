#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace swt {

// n = 2s + 1 states per node, N nodes.
struct SystemShape {
  SystemShape(int n, int N);

  int n;
  int N;

  // n^N, saturating at UINT64_MAX.
  std::uint64_t dimension() const;

  friend bool operator==(const SystemShape&, const SystemShape&) = default;
};

// A product state |f(1) f(2) ... f(N)>, letters in 1..n.
class Configuration {
 public:
  Configuration(std::vector<int> letters, int n);

  int alphabet() const { return n_; }
  int size() const { return static_cast<int>(letters_.size()); }
  // 1-based position, as in f(j).
  int at(int j) const { return letters_[j - 1]; }
  std::span<const int> letters() const { return letters_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::vector<int> letters_;
  int n_;
};

// Weakly decreasing nonnegative parts. Stored zero-padded to a requested
// length; comparisons ignore trailing zeros.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts, int padded_length = 0);

  // Part i (0-based); zero past the stored length.
  int part(int i) const;
  std::span<const int> parts() const { return parts_; }
  // Number of nonzero parts.
  int length() const;
  // Sum of parts.
  int size() const;
  Partition padded(int length) const;
  std::vector<int> nonzero_parts() const;

  friend bool operator==(const Partition& a, const Partition& b);
  // Lexicographic on the nonzero parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

// Letter multiplicities, counts[k - 1] = number of occurrences of letter k.
struct WeightVector {
  std::vector<int> counts;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// Young-diagram filling stored row by row.
class Tableau {
 public:
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  int max_entry() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 protected:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  std::vector<std::vector<int>> rows_;
};

// Bijective filling with 1..N, strictly increasing along rows and columns.
class StandardTableau : public Tableau {
 public:
  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  // Row (0-based) holding the letter, letter in 1..size().
  int row_of(int letter) const;
};

// Filling over 1..n, weakly increasing along rows, strictly down columns.
class WeylTableau : public Tableau {
 public:
  WeylTableau() = default;
  explicit WeylTableau(std::vector<std::vector<int>> rows);
};

// Shapes lambda_1, lambda_12, ..., lambda_1..N of a growth sequence.
struct PartitionChain {
  std::vector<Partition> shapes;
};

struct RskPair {
  WeylTableau insertion;
  StandardTableau recording;
};

// Partitions of N into at most n parts, descending lexicographic order.
std::vector<Partition> enumerate_partitions(int N, int n);

// Ordered by the sequence (row of 1, row of 2, ..., row of N), lexicographic.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

// Ordered by the Gelfand-Tsetlin pattern, top row first, ascending.
// Throws std::invalid_argument if shape has more than n parts.
std::vector<WeylTableau> enumerate_sswt(const Partition& shape, int n);

// Hook-length formula.
std::uint64_t dim_symmetric(const Partition& shape);
// Weyl dimension formula; throws if shape has more than n parts.
std::uint64_t dim_unitary(const Partition& shape, int n);

// chain.shapes[j - 1] is the shape of the letters 1..j of y, padded to
// padded_length.
PartitionChain chain_from_syt(const StandardTableau& y, int padded_length = 0);

// Row-insertion Robinson-Schensted-Knuth.
RskPair rsk(const Configuration& word);

WeightVector content(const Configuration& f);
WeightVector weight(const WeylTableau& t, int n);

}  // namespace swt
