#include "swt/tableaux.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace swt {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::uint64_t to_u64(const BigInt& value) {
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("dimension exceeds 64-bit range");
  }
  return value.convert_to<std::uint64_t>();
}

void require_shape(const std::vector<std::vector<int>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw std::invalid_argument("tableau row " + std::to_string(r + 1) + " is empty");
    if (r > 0 && rows[r].size() > rows[r - 1].size()) {
      throw std::invalid_argument("tableau rows must weakly decrease in length (row " +
                                  std::to_string(r + 1) + ")");
    }
  }
}

void partitions_into(int remaining, int max_part, int slots, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

// Rows of the tableau whose letters <= j form shape top_down[n - j].
std::vector<std::vector<int>> tableau_from_rows(const std::vector<std::vector<int>>& top_down) {
  const int n = static_cast<int>(top_down.size());
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < n; ++r) {
    std::vector<int> row;
    int previous = 0;
    for (int j = 1; j <= n; ++j) {
      const auto& pattern_row = top_down[n - j];
      const int here = r < j ? pattern_row[r] : 0;
      row.insert(row.end(), here - previous, j);
      previous = here;
    }
    if (row.empty()) break;
    rows.push_back(std::move(row));
  }
  return rows;
}

void interlacing_rows(std::vector<std::vector<int>>& top_down, int n,
                      std::vector<WeylTableau>& out) {
  const std::vector<int> above = top_down.back();
  if (static_cast<int>(above.size()) == 1) {
    out.emplace_back(tableau_from_rows(top_down));
    return;
  }
  std::vector<int> below(above.size() - 1);
  // odometer over above[i+1] <= below[i] <= above[i], least-significant last
  for (std::size_t i = 0; i < below.size(); ++i) below[i] = above[i + 1];
  while (true) {
    top_down.push_back(below);
    interlacing_rows(top_down, n, out);
    top_down.pop_back();
    int i = static_cast<int>(below.size()) - 1;
    while (i >= 0 && below[i] == above[i]) {
      below[i] = above[i + 1];
      --i;
    }
    if (i < 0) break;
    ++below[i];
  }
}

}  // namespace

SystemShape::SystemShape(int n_, int N_) : n(n_), N(N_) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
}

std::uint64_t SystemShape::dimension() const {
  std::uint64_t total = 1;
  for (int j = 0; j < N; ++j) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= static_cast<std::uint64_t>(n);
  }
  return total;
}

Configuration::Configuration(std::vector<int> letters, int n) : letters_(std::move(letters)), n_(n) {
  if (n_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (letters_.empty()) throw std::invalid_argument("configuration must have at least one letter");
  for (std::size_t j = 0; j < letters_.size(); ++j) {
    if (letters_[j] < 1 || letters_[j] > n_) {
      throw std::invalid_argument("configuration letter " + std::to_string(letters_[j]) +
                                  " at position " + std::to_string(j + 1) + " is outside 1.." +
                                  std::to_string(n_));
    }
  }
}

Partition::Partition(std::vector<int> parts, int padded_length) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  if (padded_length > 0) {
    if (length() > padded_length) {
      throw std::invalid_argument("partition has " + std::to_string(length()) +
                                  " nonzero parts, more than " + std::to_string(padded_length));
    }
    parts_.resize(padded_length, 0);
  }
}

int Partition::part(int i) const {
  return i < static_cast<int>(parts_.size()) ? parts_[i] : 0;
}

int Partition::length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::padded(int length) const { return Partition(nonzero_parts(), length); }

std::vector<int> Partition::nonzero_parts() const {
  return {parts_.begin(), parts_.begin() + length()};
}

bool operator==(const Partition& a, const Partition& b) {
  return a.nonzero_parts() == b.nonzero_parts();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  return a.nonzero_parts() <=> b.nonzero_parts();
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  require_shape(rows_);
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

int Tableau::max_entry() const {
  int best = 0;
  for (const auto& row : rows_) {
    for (int v : row) best = std::max(best, v);
  }
  return best;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : Tableau(std::move(rows)) {
  const int total = size();
  std::vector<bool> seen(total + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > total || seen[v]) {
        throw std::invalid_argument("standard tableau must contain 1.." + std::to_string(total) +
                                    " exactly once");
      }
      seen[v] = true;
      if (c > 0 && rows_[r][c - 1] >= v) {
        throw std::invalid_argument("standard tableau rows must strictly increase");
      }
      if (r > 0 && rows_[r - 1][c] >= v) {
        throw std::invalid_argument("standard tableau columns must strictly increase");
      }
    }
  }
}

int StandardTableau::row_of(int letter) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (std::find(rows_[r].begin(), rows_[r].end(), letter) != rows_[r].end()) {
      return static_cast<int>(r);
    }
  }
  throw std::out_of_range("letter " + std::to_string(letter) + " not in tableau");
}

WeylTableau::WeylTableau(std::vector<std::vector<int>> rows) : Tableau(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1) throw std::invalid_argument("Weyl tableau entries must be >= 1");
      if (c > 0 && rows_[r][c - 1] > v) {
        throw std::invalid_argument("Weyl tableau rows must weakly increase");
      }
      if (r > 0 && rows_[r - 1][c] >= v) {
        throw std::invalid_argument("Weyl tableau columns must strictly increase");
      }
    }
  }
}

std::vector<Partition> enumerate_partitions(int N, int n) {
  if (N < 1 || n < 1) throw std::invalid_argument("enumerate_partitions: N and n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_into(N, N, n, prefix, out);
  return out;
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  const std::vector<int> parts = shape.nonzero_parts();
  const int total = shape.size();
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(parts.size());
  // Place letters 1..N in turn; trying rows top to bottom yields the
  // lexicographic order on the row sequence.
  auto place = [&](auto&& self, int letter) -> void {
    if (letter > total) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r < parts.size(); ++r) {
      const std::size_t filled = rows[r].size();
      if (static_cast<int>(filled) == parts[r]) continue;
      if (r > 0 && rows[r - 1].size() <= filled) continue;
      rows[r].push_back(letter);
      self(self, letter + 1);
      rows[r].pop_back();
    }
  };
  if (total > 0) place(place, 1);
  return out;
}

std::vector<WeylTableau> enumerate_sswt(const Partition& shape, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_sswt: n must be >= 1");
  if (shape.length() > n) {
    throw std::invalid_argument("enumerate_sswt: shape has more than " + std::to_string(n) + " parts");
  }
  std::vector<WeylTableau> out;
  const Partition top = shape.padded(n);
  std::vector<std::vector<int>> top_down{{top.parts().begin(), top.parts().end()}};
  interlacing_rows(top_down, n, out);
  return out;
}

std::uint64_t dim_symmetric(const Partition& shape) {
  const std::vector<int> parts = shape.nonzero_parts();
  BigInt numerator = 1;
  for (int k = 2; k <= shape.size(); ++k) numerator *= k;
  BigInt hooks = 1;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      int below = 0;
      for (std::size_t r2 = r + 1; r2 < parts.size() && parts[r2] > c; ++r2) ++below;
      hooks *= parts[r] - c + below;
    }
  }
  return to_u64(numerator / hooks);
}

std::uint64_t dim_unitary(const Partition& shape, int n) {
  if (shape.length() > n) {
    throw std::invalid_argument("dim_unitary: shape has more than " + std::to_string(n) + " parts");
  }
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      numerator *= shape.part(i) - shape.part(j) + j - i;
      denominator *= j - i;
    }
  }
  return to_u64(numerator / denominator);
}

PartitionChain chain_from_syt(const StandardTableau& y, int padded_length) {
  const int total = y.size();
  const int rows = static_cast<int>(y.rows().size());
  std::vector<int> row_of(total + 1, 0);
  for (int r = 0; r < rows; ++r) {
    for (int v : y.rows()[r]) row_of[v] = r;
  }
  PartitionChain chain;
  std::vector<int> current(std::max(rows, padded_length), 0);
  for (int letter = 1; letter <= total; ++letter) {
    ++current[row_of[letter]];
    chain.shapes.emplace_back(current, padded_length);
  }
  return chain;
}

RskPair rsk(const Configuration& word) {
  std::vector<std::vector<int>> insertion;
  std::vector<std::vector<int>> recording;
  for (int j = 1; j <= word.size(); ++j) {
    int letter = word.at(j);
    std::size_t r = 0;
    for (; r < insertion.size(); ++r) {
      auto& row = insertion[r];
      auto bumped = std::upper_bound(row.begin(), row.end(), letter);
      if (bumped == row.end()) {
        row.push_back(letter);
        break;
      }
      std::swap(letter, *bumped);
    }
    if (r == insertion.size()) {
      insertion.push_back({letter});
      recording.push_back({});
    }
    recording[r].push_back(j);
  }
  return {WeylTableau(std::move(insertion)), StandardTableau(std::move(recording))};
}

WeightVector content(const Configuration& f) {
  WeightVector out{std::vector<int>(f.alphabet(), 0)};
  for (int letter : f.letters()) ++out.counts[letter - 1];
  return out;
}

WeightVector weight(const WeylTableau& t, int n) {
  if (t.max_entry() > n) {
    throw std::invalid_argument("weight: tableau entry exceeds alphabet " + std::to_string(n));
  }
  WeightVector out{std::vector<int>(n, 0)};
  for (const auto& row : t.rows()) {
    for (int v : row) ++out.counts[v - 1];
  }
  return out;
}

}  // namespace swt
