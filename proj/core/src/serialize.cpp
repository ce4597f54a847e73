#include "swt/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "swt/text_format.hpp"

namespace swt {

namespace {

nlohmann::json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Integer integer_from_json(const nlohmann::json& value) {
  if (value.is_number_integer()) return Integer(value.get<std::int64_t>());
  if (value.is_string()) {
    try {
      return Integer(value.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("radical sum: malformed integer string");
    }
  }
  throw std::invalid_argument("radical sum: expected an integer");
}

std::vector<std::tuple<std::size_t, std::size_t, const RadicalSum*>> sorted_entries(const SWMatrix& matrix) {
  std::vector<std::tuple<std::size_t, std::size_t, const RadicalSum*>> out;
  for (std::size_t c = 0; c < matrix.columns().size(); ++c) {
    for (const auto& [r, value] : matrix.column(c)) out.emplace_back(r, c, &value);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  return out;
}

}  // namespace

nlohmann::json to_json(const RadicalSum& value) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [radicand, coefficient] : value.terms()) {
    out.push_back({integer_json(boost::multiprecision::numerator(coefficient)),
                   integer_json(boost::multiprecision::denominator(coefficient)), integer_json(radicand)});
  }
  return out;
}

RadicalSum radical_sum_from_json(const nlohmann::json& document) {
  if (!document.is_array()) throw std::invalid_argument("radical sum: expected an array of triples");
  RadicalSum out;
  for (const auto& term : document) {
    if (!term.is_array() || term.size() != 3) {
      throw std::invalid_argument("radical sum: each term must be [numerator, denominator, radicand]");
    }
    const Integer denominator = integer_from_json(term[1]);
    if (denominator <= 0) throw std::invalid_argument("radical sum: denominator must be positive");
    RadicalSum::Terms terms;
    terms.emplace(integer_from_json(term[2]), make_rational(integer_from_json(term[0]), denominator));
    out += RadicalSum::from_terms(std::move(terms));
  }
  return out;
}

nlohmann::json to_json(const CrystalGraph& graph) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : graph.levels) {
    nlohmann::json patterns = nlohmann::json::array();
    for (const auto& pattern : level) patterns.push_back(format_pattern(pattern));
    levels.push_back(std::move(patterns));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t j = 0; j < graph.edges.size(); ++j) {
    for (const auto& edge : graph.edges[j]) {
      edges.push_back({{"level", j},
                       {"from", format_pattern(graph.levels[j][edge.from])},
                       {"to", format_pattern(graph.levels[j + 1][edge.to])},
                       {"letter", edge.letter},
                       {"taus", edge.shift.taus},
                       {"value", to_json(canonicalize(edge.value))}});
    }
  }
  return {{"levels", std::move(levels)}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const SWMatrix& matrix, EntryEncoding encoding) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& f : matrix.rows()) rows.push_back(format_configuration(f));
  nlohmann::json columns = nlohmann::json::array();
  for (const auto& key : matrix.columns()) {
    columns.push_back({{"lambda", format_partition(key.lambda)},
                       {"t", format_tableau(key.t)},
                       {"y", format_tableau(key.y)}});
  }
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [r, c, value] : sorted_entries(matrix)) {
    if (encoding == EntryEncoding::kExact) {
      entries.push_back({r, c, to_json(*value)});
    } else {
      entries.push_back({r, c, value->to_double()});
    }
  }
  return {{"shape", {{"n", matrix.shape().n}, {"N", matrix.shape().N}}},
          {"rows", std::move(rows)},
          {"columns", std::move(columns)},
          {"entries", std::move(entries)}};
}

void write_csv(std::ostream& out, const SWMatrix& matrix) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "row,column,value\n" << std::setprecision(17);
  for (const auto& [r, c, value] : sorted_entries(matrix)) out << r << ',' << c << ',' << value->to_double() << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace swt
