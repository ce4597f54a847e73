#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swt/gt_pattern.hpp"
#include "swt/tableaux.hpp"

namespace swt {

// Malformed text input. position() is the 0-based character offset where
// parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// "1,3,2,1"
std::vector<int> parse_integer_list(std::string_view text);
// "1,1,3/2" -> {{1,1,3},{2}}
std::vector<std::vector<int>> parse_integer_rows(std::string_view text);

Partition parse_partition(std::string_view text, int padded_length = 0);
Configuration parse_configuration(std::string_view text, int n);
StandardTableau parse_standard_tableau(std::string_view text);
WeylTableau parse_weyl_tableau(std::string_view text);
// Rows top (length n) to bottom: "3,1,0/2,1/2".
GTPattern parse_pattern(std::string_view text);

// Nonzero parts only: "3,1".
std::string format_partition(const Partition& lambda);
std::string format_configuration(const Configuration& f);
std::string format_tableau(const Tableau& tableau);
std::string format_pattern(const GTPattern& pattern);
std::string format_taus(const ShiftVector& shift);

}  // namespace swt
