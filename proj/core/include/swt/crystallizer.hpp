#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "swt/gt_pattern.hpp"
#include "swt/radical.hpp"
#include "swt/tableaux.hpp"

namespace swt {

struct CrystalEdge {
  std::size_t from = 0;  // index into levels[j]
  std::size_t to = 0;    // index into levels[j + 1]
  int letter = 1;
  ShiftVector shift;
  SignedRadical value;
};

// Graded DAG of patterns grown from the zero triangle by inserting f(1), f(2),
// ... under the shape chain of y. levels[0] is the zero pattern; every vertex
// in levels[j] has top row chain[j]. edges[j] joins levels[j] to levels[j+1].
// Zero-valued edges are never stored.
struct CrystalGraph {
  std::vector<std::vector<GTPattern>> levels;
  std::vector<std::vector<CrystalEdge>> edges;

  std::size_t vertex_count() const;
  std::size_t edge_count() const;
};

enum class AmplitudeMethod {
  kLevelAccumulation,  // dynamic programming over the deduplicated levels
  kPathEnumeration,    // literal sum over every path; exponential, oracle only
};

struct AmplitudeOptions {
  AmplitudeMethod method = AmplitudeMethod::kLevelAccumulation;
  // Visit insertion branches in reverse order. The result must not change.
  bool reverse_branches = false;
};

// Full forward growth of f under the chain of y, without pruning toward any
// particular final pattern. Throws if f and y disagree on N or y has more rows
// than the alphabet.
CrystalGraph build_forward_graph(const Configuration& f, const StandardTableau& y);

// Forward growth restricted to vertices lying on some path that ends at
// GT(t). Empty levels mean a zero amplitude. Throws if shape(y) != shape(t).
CrystalGraph build_graph(const Configuration& f, const StandardTableau& y, const WeylTableau& t);

// <f | lambda t y>. Throws std::invalid_argument on mismatched shapes.
RadicalSum amplitude(const Configuration& f, const Partition& lambda, const WeylTableau& t,
                     const StandardTableau& y, AmplitudeOptions options = {});

// Number of distinct zero-to-GT(t) paths, saturating at UINT64_MAX.
std::uint64_t path_count(const Configuration& f, const Partition& lambda, const WeylTableau& t,
                         const StandardTableau& y);

// Amplitudes <f | lambda t y> for every t reachable at the final level, keyed
// by GT(t). One level-accumulation pass shared by all t of shape(y).
std::map<GTPattern, RadicalSum> final_amplitudes(const Configuration& f, const StandardTableau& y);

// Level-accumulated amplitudes of every vertex of a graph (index-aligned with
// graph.levels).
std::vector<std::vector<RadicalSum>> accumulate(const CrystalGraph& graph);

}  // namespace swt
