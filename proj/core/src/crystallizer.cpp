#include "swt/crystallizer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "swt/pattern_calculus.hpp"

namespace swt {

namespace {

void require_growth_inputs(const Configuration& f, const StandardTableau& y) {
  if (f.size() != y.size()) {
    throw std::invalid_argument("configuration has " + std::to_string(f.size()) +
                                " letters but y has " + std::to_string(y.size()) + " boxes");
  }
  if (static_cast<int>(y.rows().size()) > f.alphabet()) {
    throw std::invalid_argument("y has more than n = " + std::to_string(f.alphabet()) + " rows");
  }
}

void require_column(const Configuration& f, const Partition& lambda, const WeylTableau& t,
                    const StandardTableau& y) {
  if (t.shape() != lambda || y.shape() != lambda) {
    throw std::invalid_argument("shapes of lambda, t and y must agree");
  }
  if (lambda.size() != f.size()) {
    throw std::invalid_argument("lambda must partition N = " + std::to_string(f.size()));
  }
  if (lambda.length() > f.alphabet() || t.max_entry() > f.alphabet()) {
    throw std::invalid_argument("t does not fit the alphabet 1.." + std::to_string(f.alphabet()));
  }
}

CrystalGraph grow(const Configuration& f, const StandardTableau& y, bool reverse_branches) {
  require_growth_inputs(f, y);
  const int n = f.alphabet();
  const PartitionChain chain = chain_from_syt(y, n);

  CrystalGraph graph;
  graph.levels.push_back({GTPattern::zero(n)});
  for (int j = 1; j <= f.size(); ++j) {
    const auto& current = graph.levels.back();
    std::map<GTPattern, std::size_t> next;
    struct Pending {
      std::size_t from;
      GTPattern to;
      ShiftVector shift;
      SignedRadical value;
    };
    std::vector<Pending> pending;
    for (std::size_t v = 0; v < current.size(); ++v) {
      auto insertions = insert_letter(current[v], f.at(j), chain.shapes[j - 1]);
      if (reverse_branches) std::reverse(insertions.begin(), insertions.end());
      for (auto& insertion : insertions) {
        SignedRadical value = fundamental_element(current[v], insertion.shift);
        if (value.is_zero()) continue;
        next.emplace(insertion.pattern, 0);
        pending.push_back({v, std::move(insertion.pattern), std::move(insertion.shift), std::move(value)});
      }
    }
    std::vector<GTPattern> level;
    for (auto& [pattern, index] : next) {
      index = level.size();
      level.push_back(pattern);
    }
    std::vector<CrystalEdge> edges;
    for (auto& p : pending) {
      edges.push_back({p.from, next.at(p.to), f.at(j), std::move(p.shift), std::move(p.value)});
    }
    graph.levels.push_back(std::move(level));
    graph.edges.push_back(std::move(edges));
  }
  return graph;
}

// Keeps only the vertices from which `target` is reachable.
CrystalGraph prune_to(const CrystalGraph& graph, const GTPattern& target) {
  const std::size_t depth = graph.levels.size();
  std::vector<std::vector<bool>> alive(depth);
  for (std::size_t j = 0; j < depth; ++j) alive[j].assign(graph.levels[j].size(), false);
  const auto& last = graph.levels.back();
  if (auto it = std::find(last.begin(), last.end(), target); it != last.end()) {
    alive.back()[it - last.begin()] = true;
  }
  for (std::size_t j = depth - 1; j-- > 0;) {
    for (const auto& edge : graph.edges[j]) {
      if (alive[j + 1][edge.to]) alive[j][edge.from] = true;
    }
  }

  CrystalGraph out;
  std::vector<std::vector<std::size_t>> remap(depth);
  for (std::size_t j = 0; j < depth; ++j) {
    remap[j].assign(graph.levels[j].size(), 0);
    std::vector<GTPattern> level;
    for (std::size_t v = 0; v < graph.levels[j].size(); ++v) {
      if (!alive[j][v]) continue;
      remap[j][v] = level.size();
      level.push_back(graph.levels[j][v]);
    }
    out.levels.push_back(std::move(level));
  }
  for (std::size_t j = 0; j + 1 < depth; ++j) {
    std::vector<CrystalEdge> edges;
    for (const auto& edge : graph.edges[j]) {
      if (!alive[j][edge.from] || !alive[j + 1][edge.to]) continue;
      CrystalEdge kept = edge;
      kept.from = remap[j][edge.from];
      kept.to = remap[j + 1][edge.to];
      edges.push_back(std::move(kept));
    }
    out.edges.push_back(std::move(edges));
  }
  return out;
}

void enumerate_paths(const GTPattern& vertex, int j, const Configuration& f, const PartitionChain& chain,
                     const GTPattern& target, const SignedRadical& product, bool reverse_branches,
                     RadicalSum& total) {
  if (j > f.size()) {
    if (vertex == target) total += canonicalize(product);
    return;
  }
  auto insertions = insert_letter(vertex, f.at(j), chain.shapes[j - 1]);
  if (reverse_branches) std::reverse(insertions.begin(), insertions.end());
  for (const auto& insertion : insertions) {
    SignedRadical value = fundamental_element(vertex, insertion.shift);
    if (value.is_zero()) continue;
    enumerate_paths(insertion.pattern, j + 1, f, chain, target, product * value, reverse_branches, total);
  }
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                            : a + b;
}

std::vector<std::vector<RadicalSum>> accumulate_impl(const CrystalGraph& graph, bool reverse_edges) {
  std::vector<std::vector<RadicalSum>> amplitudes(graph.levels.size());
  for (std::size_t j = 0; j < graph.levels.size(); ++j) amplitudes[j].resize(graph.levels[j].size());
  if (graph.levels.empty() || graph.levels.front().empty()) return amplitudes;
  amplitudes[0][0] = RadicalSum(Rational(1));
  for (std::size_t j = 0; j < graph.edges.size(); ++j) {
    const auto& edges = graph.edges[j];
    auto step = [&](const CrystalEdge& edge) {
      amplitudes[j + 1][edge.to] += amplitudes[j][edge.from] * edge.value;
    };
    if (reverse_edges) {
      std::for_each(edges.rbegin(), edges.rend(), step);
    } else {
      std::for_each(edges.begin(), edges.end(), step);
    }
  }
  return amplitudes;
}

}  // namespace

std::size_t CrystalGraph::vertex_count() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  return total;
}

std::size_t CrystalGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& level : edges) total += level.size();
  return total;
}

CrystalGraph build_forward_graph(const Configuration& f, const StandardTableau& y) {
  return grow(f, y, false);
}

CrystalGraph build_graph(const Configuration& f, const StandardTableau& y, const WeylTableau& t) {
  require_column(f, y.shape(), t, y);
  return prune_to(grow(f, y, false), from_weyl(t, f.alphabet()));
}

std::vector<std::vector<RadicalSum>> accumulate(const CrystalGraph& graph) {
  return accumulate_impl(graph, false);
}

RadicalSum amplitude(const Configuration& f, const Partition& lambda, const WeylTableau& t,
                     const StandardTableau& y, AmplitudeOptions options) {
  require_column(f, lambda, t, y);
  const GTPattern target = from_weyl(t, f.alphabet());
  if (options.method == AmplitudeMethod::kPathEnumeration) {
    RadicalSum total;
    enumerate_paths(GTPattern::zero(f.alphabet()), 1, f, chain_from_syt(y, f.alphabet()), target,
                    SignedRadical::one(), options.reverse_branches, total);
    return total;
  }
  const CrystalGraph graph = prune_to(grow(f, y, options.reverse_branches), target);
  const auto amplitudes = accumulate_impl(graph, options.reverse_branches);
  if (amplitudes.back().empty()) return {};
  return amplitudes.back().front();
}

std::uint64_t path_count(const Configuration& f, const Partition& lambda, const WeylTableau& t,
                         const StandardTableau& y) {
  const CrystalGraph graph = build_graph(f, y, t);
  if (lambda != y.shape()) throw std::invalid_argument("shapes of lambda, t and y must agree");
  std::vector<std::uint64_t> counts(graph.levels.front().size(), 1);
  for (std::size_t j = 0; j < graph.edges.size(); ++j) {
    std::vector<std::uint64_t> next(graph.levels[j + 1].size(), 0);
    for (const auto& edge : graph.edges[j]) next[edge.to] = saturating_add(next[edge.to], counts[edge.from]);
    counts = std::move(next);
  }
  return counts.empty() ? 0 : counts.front();
}

std::map<GTPattern, RadicalSum> final_amplitudes(const Configuration& f, const StandardTableau& y) {
  require_growth_inputs(f, y);
  const int n = f.alphabet();
  const PartitionChain chain = chain_from_syt(y, n);
  std::map<GTPattern, RadicalSum> level;
  level.emplace(GTPattern::zero(n), RadicalSum(Rational(1)));
  for (int j = 1; j <= f.size(); ++j) {
    std::map<GTPattern, RadicalSum> next;
    for (const auto& [pattern, value] : level) {
      for (const auto& insertion : insert_letter(pattern, f.at(j), chain.shapes[j - 1])) {
        const SignedRadical edge = fundamental_element(pattern, insertion.shift);
        if (edge.is_zero()) continue;
        next[insertion.pattern] += value * edge;
      }
    }
    std::erase_if(next, [](const auto& entry) { return entry.second.is_zero(); });
    level = std::move(next);
  }
  return level;
}

}  // namespace swt
