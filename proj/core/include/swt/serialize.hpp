#pragma once

#include <ostream>

#include <nlohmann/json.hpp>

#include "swt/crystallizer.hpp"
#include "swt/radical.hpp"
#include "swt/transform.hpp"

namespace swt {

// [[numerator, denominator, radicand], ...] sorted by radicand; 5/12 is
// [[5,12,1]], -sqrt(6)/6 is [[-1,6,6]], zero is []. Integers that do not fit
// in 64 bits are written as decimal strings.
nlohmann::json to_json(const RadicalSum& value);
// Accepts the format above; throws std::invalid_argument otherwise.
RadicalSum radical_sum_from_json(const nlohmann::json& document);

// {levels: [[pattern, ...], ...], edges: [{level, from, to, letter, taus, value}, ...]}
nlohmann::json to_json(const CrystalGraph& graph);

enum class EntryEncoding { kExact, kFloat };

// {shape: {n, N}, rows: [...], columns: [{lambda, t, y}, ...],
//  entries: [[row, col, value], ...]} with entries sorted by (row, col).
nlohmann::json to_json(const SWMatrix& matrix, EntryEncoding encoding = EntryEncoding::kExact);

// "row,column,value" lines with a header, sorted by (row, column).
void write_csv(std::ostream& out, const SWMatrix& matrix);

}  // namespace swt
