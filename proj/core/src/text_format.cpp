#include "swt/text_format.hpp"

#include <charconv>
#include <limits>

namespace swt {

namespace {

struct Entry {
  int value;
  std::size_t offset;
};

using Grid = std::vector<std::vector<Entry>>;

std::string annotate(const std::string& what, std::size_t position) {
  return what + " at position " + std::to_string(position);
}

std::vector<Entry> scan_list(std::string_view text, std::size_t base) {
  std::vector<Entry> out;
  std::size_t i = 0;
  if (text.empty()) throw ParseError("empty list", base);
  while (true) {
    const std::size_t start = i;
    int value = 0;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') throw ParseError("unexpected '+'", base + i);
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", base + start);
    if (ec != std::errc() || ptr == first) {
      if (first == last) throw ParseError("expected integer after ','", base + i);
      throw ParseError(std::string("expected integer, found '") + *first + "'", base + i);
    }
    out.push_back({value, base + start});
    i = static_cast<std::size_t>(ptr - text.data());
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError(std::string("expected ',' or '/', found '") + text[i] + "'", base + i);
    ++i;
  }
  return out;
}

Grid scan_grid(std::string_view text) {
  Grid grid;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = text.find('/', start);
    const std::size_t end = slash == std::string_view::npos ? text.size() : slash;
    if (end == start) throw ParseError("empty row", start);
    grid.push_back(scan_list(text.substr(start, end - start), start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return grid;
}

std::vector<std::vector<int>> values(const Grid& grid) {
  std::vector<std::vector<int>> out;
  for (const auto& row : grid) {
    std::vector<int> r;
    for (const auto& e : row) r.push_back(e.value);
    out.push_back(std::move(r));
  }
  return out;
}

// Row/column monotonicity with the offending entry's position. strict_rows
// distinguishes standard (strict) from Weyl (weak) rows.
void check_tableau_order(const Grid& grid, bool strict_rows) {
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (r > 0 && grid[r].size() > grid[r - 1].size()) {
      throw ParseError("row " + std::to_string(r + 1) + " is longer than the row above", grid[r].front().offset);
    }
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      const Entry& e = grid[r][c];
      if (e.value < 1) throw ParseError("tableau entries must be >= 1", e.offset);
      if (c > 0) {
        const int left = grid[r][c - 1].value;
        if (strict_rows ? left >= e.value : left > e.value) {
          throw ParseError(strict_rows ? "row entries must strictly increase" : "row entries must weakly increase",
                           e.offset);
        }
      }
      if (r > 0 && grid[r - 1][c].value >= e.value) {
        throw ParseError("column entries must strictly increase", e.offset);
      }
    }
  }
}

std::string join(std::span<const int> items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(items[i]);
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(annotate(what, position)), position_(position) {}

std::vector<int> parse_integer_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& e : scan_list(text, 0)) out.push_back(e.value);
  return out;
}

std::vector<std::vector<int>> parse_integer_rows(std::string_view text) {
  return values(scan_grid(text));
}

Partition parse_partition(std::string_view text, int padded_length) {
  const auto entries = scan_list(text, 0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].value < 0) throw ParseError("partition parts must be nonnegative", entries[i].offset);
    if (i > 0 && entries[i].value > entries[i - 1].value) {
      throw ParseError("partition parts must be weakly decreasing", entries[i].offset);
    }
  }
  std::vector<int> parts;
  for (const auto& e : entries) parts.push_back(e.value);
  try {
    return Partition(std::move(parts), padded_length);
  } catch (const std::invalid_argument& error) {
    throw ParseError(error.what(), 0);
  }
}

Configuration parse_configuration(std::string_view text, int n) {
  const auto entries = scan_list(text, 0);
  std::vector<int> letters;
  for (const auto& e : entries) {
    if (e.value < 1 || e.value > n) {
      throw ParseError("letter " + std::to_string(e.value) + " outside 1.." + std::to_string(n), e.offset);
    }
    letters.push_back(e.value);
  }
  return Configuration(std::move(letters), n);
}

StandardTableau parse_standard_tableau(std::string_view text) {
  const Grid grid = scan_grid(text);
  check_tableau_order(grid, true);
  std::size_t total = 0;
  for (const auto& row : grid) total += row.size();
  std::vector<bool> seen(total + 1, false);
  for (const auto& row : grid) {
    for (const auto& e : row) {
      if (e.value > static_cast<int>(total) || seen[e.value]) {
        throw ParseError("standard tableau must use 1.." + std::to_string(total) + " exactly once", e.offset);
      }
      seen[e.value] = true;
    }
  }
  return StandardTableau(values(grid));
}

WeylTableau parse_weyl_tableau(std::string_view text) {
  const Grid grid = scan_grid(text);
  check_tableau_order(grid, false);
  return WeylTableau(values(grid));
}

GTPattern parse_pattern(std::string_view text) {
  const Grid grid = scan_grid(text);
  const std::size_t n = grid.size();
  for (std::size_t r = 0; r < n; ++r) {
    if (grid[r].size() != n - r) {
      throw ParseError("pattern row " + std::to_string(r + 1) + " must have " + std::to_string(n - r) +
                           " entries",
                       grid[r].front().offset);
    }
    for (std::size_t i = 0; r > 0 && i < grid[r].size(); ++i) {
      const auto& e = grid[r][i];
      if (grid[r - 1][i].value < e.value || e.value < grid[r - 1][i + 1].value) {
        throw ParseError("betweenness violated", e.offset);
      }
    }
  }
  try {
    return GTPattern::from_rows(values(grid));
  } catch (const std::invalid_argument& error) {
    throw ParseError(error.what(), 0);
  }
}

std::string format_partition(const Partition& lambda) {
  const auto parts = lambda.nonzero_parts();
  if (parts.empty()) return "0";
  return join(parts);
}

std::string format_configuration(const Configuration& f) { return join(f.letters()); }

std::string format_tableau(const Tableau& tableau) {
  std::string out;
  for (std::size_t r = 0; r < tableau.rows().size(); ++r) {
    if (r > 0) out += '/';
    out += join(tableau.rows()[r]);
  }
  return out;
}

std::string format_pattern(const GTPattern& pattern) {
  std::string out;
  for (int j = pattern.order(); j >= 1; --j) {
    if (j < pattern.order()) out += '/';
    out += join(pattern.row(j));
  }
  return out;
}

std::string format_taus(const ShiftVector& shift) { return join(shift.taus); }

}  // namespace swt
