#include "swt/gt_pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace swt {

namespace {

// upper has one more entry than lower.
bool interlaces(std::span<const int> upper, std::span<const int> lower) {
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (upper[i] < lower[i] || lower[i] < upper[i + 1]) return false;
  }
  return true;
}

std::size_t row_offset(int n, int j) {
  return static_cast<std::size_t>(n * (n + 1) / 2 - j * (j + 1) / 2);
}

}  // namespace

class PatternBuilder {
 public:
  static GTPattern make(int n, std::vector<int> entries) { return GTPattern(n, std::move(entries)); }
  static std::vector<int>& entries(GTPattern& p) { return p.entries_; }
};

GTPattern GTPattern::zero(int n) {
  if (n < 1) throw std::invalid_argument("pattern order must be >= 1");
  return GTPattern(n, std::vector<int>(static_cast<std::size_t>(n * (n + 1) / 2), 0));
}

GTPattern GTPattern::from_rows(const std::vector<std::vector<int>>& top_down) {
  const int n = static_cast<int>(top_down.size());
  if (n < 1) throw std::invalid_argument("pattern must have at least one row");
  std::vector<int> entries;
  for (int r = 0; r < n; ++r) {
    const auto& row = top_down[r];
    if (static_cast<int>(row.size()) != n - r) {
      throw std::invalid_argument("pattern row " + std::to_string(r + 1) + " from the top must have " +
                                  std::to_string(n - r) + " entries");
    }
    for (int v : row) {
      if (v < 0) throw std::invalid_argument("pattern entries must be nonnegative");
    }
    if (r > 0 && !interlaces(top_down[r - 1], row)) {
      throw std::invalid_argument("betweenness violated between rows " + std::to_string(n - r + 1) +
                                  " and " + std::to_string(n - r));
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return GTPattern(n, std::move(entries));
}

std::size_t GTPattern::offset(int j) const { return row_offset(n_, j); }

int GTPattern::entry(int i, int j) const {
  if (j < 1 || j > n_ || i < 1 || i > j) {
    throw std::out_of_range("pattern index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside the triangle of order " + std::to_string(n_));
  }
  return entries_[offset(j) + i - 1];
}

std::span<const int> GTPattern::row(int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("pattern row " + std::to_string(j) + " out of range");
  return std::span<const int>(entries_).subspan(offset(j), j);
}

Partition GTPattern::top() const {
  auto r = row(n_);
  return Partition(std::vector<int>(r.begin(), r.end()), n_);
}

std::vector<std::vector<int>> GTPattern::rows() const {
  std::vector<std::vector<int>> out;
  for (int j = n_; j >= 1; --j) {
    auto r = row(j);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

GTPattern from_weyl(const WeylTableau& t, int n) {
  if (n < 1) throw std::invalid_argument("pattern order must be >= 1");
  if (t.max_entry() > n) {
    throw std::invalid_argument("Weyl tableau entry " + std::to_string(t.max_entry()) +
                                " exceeds alphabet " + std::to_string(n));
  }
  if (static_cast<int>(t.rows().size()) > n) {
    throw std::invalid_argument("Weyl tableau has more than " + std::to_string(n) + " rows");
  }
  std::vector<int> entries;
  for (int j = n; j >= 1; --j) {
    for (int i = 1; i <= j; ++i) {
      int count = 0;
      if (i <= static_cast<int>(t.rows().size())) {
        const auto& row = t.rows()[i - 1];
        count = static_cast<int>(std::upper_bound(row.begin(), row.end(), j) - row.begin());
      }
      entries.push_back(count);
    }
  }
  return PatternBuilder::make(n, std::move(entries));
}

WeylTableau to_weyl(const GTPattern& pattern) {
  const int n = pattern.order();
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row;
    int previous = 0;
    for (int j = i; j <= n; ++j) {
      const int here = pattern.entry(i, j);
      row.insert(row.end(), here - previous, j);
      previous = here;
    }
    if (row.empty()) break;
    rows.push_back(std::move(row));
  }
  return WeylTableau(std::move(rows));
}

int partial_hook(const GTPattern& pattern, int i, int j) {
  return pattern.entry(i, j) + j - i;
}

WeightVector pattern_weight(const GTPattern& pattern) {
  const int n = pattern.order();
  WeightVector out{std::vector<int>(n, 0)};
  int previous = 0;
  for (int j = 1; j <= n; ++j) {
    int sum = 0;
    for (int v : pattern.row(j)) sum += v;
    out.counts[j - 1] = sum - previous;
    previous = sum;
  }
  return out;
}

std::optional<GTPattern> apply_shift(const GTPattern& pattern, const ShiftVector& shift) {
  const int n = pattern.order();
  if (shift.letter < 1 || shift.order() != n) return std::nullopt;
  GTPattern shifted = pattern;
  auto& raw = PatternBuilder::entries(shifted);
  for (int j = shift.letter; j <= n; ++j) {
    const int tau = shift.tau(j);
    if (tau < 1 || tau > j) return std::nullopt;
    ++raw[row_offset(n, j) + tau - 1];
  }
  for (int j = n; j >= 2; --j) {
    if (!interlaces(shifted.row(j), shifted.row(j - 1))) return std::nullopt;
  }
  return shifted;
}

std::vector<Insertion> insert_letter(const GTPattern& pattern, int letter, const Partition& target_top) {
  const int n = pattern.order();
  if (letter < 1 || letter > n) {
    throw std::invalid_argument("letter " + std::to_string(letter) + " outside 1.." + std::to_string(n));
  }
  if (target_top.length() > n) {
    throw std::invalid_argument("target partition has more than " + std::to_string(n) + " parts");
  }
  // The target fixes tau(n).
  int top_tau = 0;
  for (int i = 1; i <= n; ++i) {
    const int diff = target_top.part(i - 1) - pattern.entry(i, n);
    if (diff == 0) continue;
    if (diff != 1 || top_tau != 0) {
      throw std::invalid_argument("target partition must add exactly one box to the pattern's top row");
    }
    top_tau = i;
  }
  if (top_tau == 0) {
    throw std::invalid_argument("target partition must add exactly one box to the pattern's top row");
  }

  std::vector<Insertion> out;
  GTPattern work = pattern;
  auto& raw = PatternBuilder::entries(work);
  std::vector<int> taus(n - letter + 1, 0);
  taus.back() = top_tau;
  ++raw[row_offset(n, n) + top_tau - 1];

  // Rows n-1 down to letter; row j must interlace under the new row j+1, and
  // the lowest changed row must sit over the untouched row letter-1.
  auto descend = [&](auto&& self, int j) -> void {
    if (j < letter) {
      if (letter > 1 && !interlaces(work.row(letter), work.row(letter - 1))) return;
      out.push_back({work, ShiftVector{letter, taus}});
      return;
    }
    for (int tau = 1; tau <= j; ++tau) {
      ++raw[row_offset(n, j) + tau - 1];
      if (interlaces(work.row(j + 1), work.row(j))) {
        taus[j - letter] = tau;
        self(self, j - 1);
      }
      --raw[row_offset(n, j) + tau - 1];
    }
  };
  descend(descend, n - 1);
  std::sort(out.begin(), out.end(),
            [](const Insertion& a, const Insertion& b) { return a.shift.taus < b.shift.taus; });
  return out;
}

}  // namespace swt
