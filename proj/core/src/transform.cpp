#include "swt/transform.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include <Eigen/Dense>

#include "swt/gt_pattern.hpp"

namespace swt {

namespace {

using Dense = Eigen::MatrixXd;

void require_dimension(const SWMatrix& matrix, std::size_t size) {
  if (size != matrix.dimension()) {
    throw std::invalid_argument("state has dimension " + std::to_string(size) + ", expected " +
                                std::to_string(matrix.dimension()));
  }
}

Dense dense_of(const SWMatrix& matrix) {
  const auto d = static_cast<Eigen::Index>(matrix.dimension());
  Dense out = Dense::Zero(d, d);
  for (std::size_t c = 0; c < matrix.columns().size(); ++c) {
    for (const auto& [r, value] : matrix.column(c)) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = value.to_double();
    }
  }
  return out;
}

// Row permutation swapping node slots k, k+1 (1-based).
std::vector<std::size_t> swap_permutation(const SWMatrix& matrix, int k) {
  const auto& rows = matrix.rows();
  std::vector<std::size_t> image(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<int> letters(rows[r].letters().begin(), rows[r].letters().end());
    std::swap(letters[k - 1], letters[k]);
    image[r] = matrix.row_index(Configuration(std::move(letters), rows[r].alphabet()));
  }
  return image;
}

// C = M^T P M with (P M)[r] = M[image[r]].
Dense conjugated_transposition(const SWMatrix& matrix, const Dense& m, int k) {
  const auto image = swap_permutation(matrix, k);
  Dense permuted(m.rows(), m.cols());
  for (std::size_t r = 0; r < image.size(); ++r) {
    permuted.row(static_cast<Eigen::Index>(r)) = m.row(static_cast<Eigen::Index>(image[r]));
  }
  return m.transpose() * permuted;
}

double max_abs(const Dense& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

RadicalSum sparse_dot(const std::vector<SWMatrix::Entry>& a, const std::vector<SWMatrix::Entry>& b) {
  RadicalSum total;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      total += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return total;
}

struct SectorLayout {
  Partition lambda;
  std::size_t first = 0;     // first column of the sector
  std::size_t t_count = 0;
  std::size_t y_count = 0;
};

std::vector<SectorLayout> sector_layout(const SWMatrix& matrix) {
  std::vector<SectorLayout> out;
  const auto& columns = matrix.columns();
  std::size_t c = 0;
  while (c < columns.size()) {
    SectorLayout sector{columns[c].lambda, c, 0, 0};
    sector.y_count = enumerate_syt(sector.lambda).size();
    std::size_t end = c;
    while (end < columns.size() && columns[end].lambda == sector.lambda) ++end;
    sector.t_count = (end - c) / sector.y_count;
    out.push_back(std::move(sector));
    c = end;
  }
  return out;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned workers = requested == 0 ? std::thread::hardware_concurrency() : requested;
  workers = std::max(1u, workers);
  return static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

ResourceError::ResourceError(std::uint64_t requested, std::uint64_t cap)
    : std::runtime_error("matrix dimension " + std::to_string(requested) + " exceeds size cap " +
                         std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

std::vector<Configuration> product_basis(const SystemShape& shape) {
  std::vector<Configuration> out;
  out.reserve(static_cast<std::size_t>(shape.dimension()));
  std::vector<int> letters(shape.N, 1);
  while (true) {
    out.emplace_back(letters, shape.n);
    int j = shape.N - 1;
    while (j >= 0 && letters[j] == shape.n) letters[j--] = 1;
    if (j < 0) break;
    ++letters[j];
  }
  return out;
}

std::vector<ColumnKey> irreducible_basis(const SystemShape& shape) {
  std::vector<ColumnKey> out;
  for (const auto& lambda : enumerate_partitions(shape.N, shape.n)) {
    const auto tableaux_y = enumerate_syt(lambda);
    for (auto& t : enumerate_sswt(lambda, shape.n)) {
      for (const auto& y : tableaux_y) out.push_back({lambda.padded(shape.n), t, y});
    }
  }
  return out;
}

SWMatrix::SWMatrix(SystemShape shape, std::vector<Configuration> rows, std::vector<ColumnKey> columns,
                   std::vector<std::vector<Entry>> entries)
    : shape_(shape), rows_(std::move(rows)), columns_(std::move(columns)), entries_(std::move(entries)) {
  if (entries_.size() != columns_.size()) throw std::invalid_argument("SWMatrix: one entry list per column");
}

const RadicalSum& SWMatrix::at(std::size_t row, std::size_t col) const {
  static const RadicalSum zero;
  const auto& entries = entries_.at(col);
  auto it = std::lower_bound(entries.begin(), entries.end(), row,
                             [](const Entry& e, std::size_t r) { return e.first < r; });
  return it != entries.end() && it->first == row ? it->second : zero;
}

std::size_t SWMatrix::nonzero_count() const {
  std::size_t total = 0;
  for (const auto& column : entries_) total += column.size();
  return total;
}

std::size_t SWMatrix::row_index(const Configuration& f) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), f);
  if (it == rows_.end() || !(*it == f)) throw std::out_of_range("configuration not in the product basis");
  return static_cast<std::size_t>(it - rows_.begin());
}

std::vector<double> SWMatrix::to_dense() const {
  const std::size_t d = dimension();
  std::vector<double> out(d * d, 0.0);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [r, value] : entries_[c]) out[r * d + c] = value.to_double();
  }
  return out;
}

SWMatrix assemble(const SystemShape& shape, const AssemblyOptions& options) {
  const std::uint64_t dimension = shape.dimension();
  if (dimension > options.size_cap) throw ResourceError(dimension, options.size_cap);

  auto rows = product_basis(shape);
  auto columns = irreducible_basis(shape);

  // One group per (lambda, y): the columns it feeds, keyed by GT(t).
  struct Group {
    StandardTableau y;
    std::map<GTPattern, std::size_t> column_of;
  };
  std::vector<Group> groups;
  {
    std::map<std::pair<std::vector<int>, std::vector<std::vector<int>>>, std::size_t> index;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto key = std::make_pair(columns[c].lambda.nonzero_parts(), columns[c].y.rows());
      auto [it, inserted] = index.try_emplace(key, groups.size());
      if (inserted) groups.push_back({columns[c].y, {}});
      groups[it->second].column_of.emplace(from_weyl(columns[c].t, shape.n), c);
    }
  }

  std::vector<std::vector<std::pair<std::size_t, RadicalSum>>> by_row(rows.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t r = next++; r < rows.size(); r = next++) {
        const Configuration& f = rows[r];
        const WeightVector wanted = content(f);
        auto& out = by_row[r];
        for (const auto& group : groups) {
          if (options.method == AmplitudeMethod::kPathEnumeration) {
            for (const auto& [pattern, c] : group.column_of) {
              if (!(pattern_weight(pattern) == wanted)) continue;
              const auto& key = columns[c];
              RadicalSum value = amplitude(f, key.lambda, key.t, key.y, {AmplitudeMethod::kPathEnumeration});
              if (!value.is_zero()) out.emplace_back(c, std::move(value));
            }
            continue;
          }
          for (auto& [pattern, value] : final_amplitudes(f, group.y)) {
            auto it = group.column_of.find(pattern);
            if (it != group.column_of.end()) out.emplace_back(it->second, std::move(value));
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = rows.size();
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned workers = worker_count(options.workers, rows.size());
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::vector<SWMatrix::Entry>> entries(columns.size());
  for (std::size_t r = 0; r < by_row.size(); ++r) {
    for (auto& [c, value] : by_row[r]) entries[c].emplace_back(r, std::move(value));
  }
  return SWMatrix(shape, std::move(rows), std::move(columns), std::move(entries));
}

StateVector apply_forward(const SWMatrix& matrix, std::span<const std::complex<double>> state) {
  require_dimension(matrix, state.size());
  StateVector out(matrix.columns().size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    for (const auto& [r, value] : matrix.column(c)) out[c] += value.to_double() * state[r];
  }
  return out;
}

StateVector apply_inverse(const SWMatrix& matrix, std::span<const std::complex<double>> coefficients) {
  require_dimension(matrix, coefficients.size());
  StateVector out(matrix.dimension());
  for (std::size_t c = 0; c < coefficients.size(); ++c) {
    for (const auto& [r, value] : matrix.column(c)) out[r] += value.to_double() * coefficients[c];
  }
  return out;
}

ExactStateVector apply_forward(const SWMatrix& matrix, std::span<const RadicalSum> state) {
  require_dimension(matrix, state.size());
  ExactStateVector out(matrix.columns().size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    for (const auto& [r, value] : matrix.column(c)) out[c] += value * state[r];
  }
  return out;
}

ExactStateVector apply_inverse(const SWMatrix& matrix, std::span<const RadicalSum> coefficients) {
  require_dimension(matrix, coefficients.size());
  ExactStateVector out(matrix.dimension());
  for (std::size_t c = 0; c < coefficients.size(); ++c) {
    for (const auto& [r, value] : matrix.column(c)) out[r] += value * coefficients[c];
  }
  return out;
}

UnitarityReport check_unitarity(const SWMatrix& matrix) {
  UnitarityReport report;
  const RadicalSum one(Rational(1));
  const std::size_t columns = matrix.columns().size();
  for (std::size_t a = 0; a < columns; ++a) {
    for (std::size_t b = a; b < columns; ++b) {
      const RadicalSum dot = sparse_dot(matrix.column(a), matrix.column(b));
      if (a == b) {
        if (!(dot == one)) {
          ++report.diagonal_mismatches;
          report.max_diagonal_deviation = std::max(report.max_diagonal_deviation, std::abs(dot.to_double() - 1.0));
        }
      } else if (!dot.is_zero()) {
        ++report.nonzero_off_diagonal;
        report.max_off_diagonal = std::max(report.max_off_diagonal, std::abs(dot.to_double()));
      }
    }
  }
  report.exact_identity = columns == matrix.dimension() && report.diagonal_mismatches == 0 &&
                          report.nonzero_off_diagonal == 0;
  return report;
}

double unitarity_residual_float(const SWMatrix& matrix) {
  const Dense m = dense_of(matrix);
  return max_abs(m.transpose() * m - Dense::Identity(m.rows(), m.cols()));
}

SelectionReport check_selection_rule(const SWMatrix& matrix) {
  SelectionReport report;
  std::vector<WeightVector> contents;
  for (const auto& f : matrix.rows()) contents.push_back(content(f));
  for (std::size_t c = 0; c < matrix.columns().size(); ++c) {
    const WeightVector w = weight(matrix.columns()[c].t, matrix.shape().n);
    for (const auto& [r, value] : matrix.column(c)) {
      ++report.entries_checked;
      if (!value.is_zero() && !(contents[r] == w)) ++report.violations;
    }
  }
  return report;
}

bool PermutationReport::passed() const {
  return off_block < tolerance && t_dependence < tolerance && orthogonality < tolerance && involution < tolerance;
}

PermutationReport check_permutation_blocks(const SWMatrix& matrix, int k, double tolerance) {
  const int N = matrix.shape().N;
  if (k < 1 || k > N - 1) {
    throw std::out_of_range("transposition index " + std::to_string(k) + " outside 1.." + std::to_string(N - 1));
  }
  PermutationReport report;
  report.transposition = k;
  report.tolerance = tolerance;
  const Dense m = dense_of(matrix);
  const Dense conjugated = conjugated_transposition(matrix, m, k);
  const auto sectors = sector_layout(matrix);

  std::vector<std::size_t> sector_of(matrix.columns().size());
  for (std::size_t s = 0; s < sectors.size(); ++s) {
    for (std::size_t c = 0; c < sectors[s].t_count * sectors[s].y_count; ++c) sector_of[sectors[s].first + c] = s;
  }
  for (Eigen::Index a = 0; a < conjugated.rows(); ++a) {
    for (Eigen::Index b = 0; b < conjugated.cols(); ++b) {
      if (sector_of[a] != sector_of[b]) report.off_block = std::max(report.off_block, std::abs(conjugated(a, b)));
    }
  }

  for (const auto& sector : sectors) {
    const auto y = static_cast<Eigen::Index>(sector.y_count);
    const auto first = static_cast<Eigen::Index>(sector.first);
    const Dense block = conjugated.block(first, first, y, y);
    for (std::size_t t1 = 0; t1 < sector.t_count; ++t1) {
      for (std::size_t t2 = 0; t2 < sector.t_count; ++t2) {
        const Dense sub = conjugated.block(first + static_cast<Eigen::Index>(t1) * y,
                                           first + static_cast<Eigen::Index>(t2) * y, y, y);
        const Dense expected = t1 == t2 ? block : Dense::Zero(y, y);
        report.t_dependence = std::max(report.t_dependence, max_abs(sub - expected));
      }
    }
    const Dense identity = Dense::Identity(y, y);
    report.orthogonality = std::max(report.orthogonality, max_abs(block.transpose() * block - identity));
    report.involution = std::max(report.involution, max_abs(block * block - identity));
    SectorBlock out{sector.lambda, sector.y_count, {}};
    for (Eigen::Index i = 0; i < y; ++i) {
      for (Eigen::Index j = 0; j < y; ++j) out.matrix.push_back(block(i, j));
    }
    report.blocks.push_back(std::move(out));
  }
  return report;
}

CoxeterReport check_coxeter_relations(const SWMatrix& matrix, double tolerance) {
  CoxeterReport report;
  report.tolerance = tolerance;
  const int N = matrix.shape().N;
  const Dense m = dense_of(matrix);
  std::vector<Dense> generators;
  for (int k = 1; k < N; ++k) generators.push_back(conjugated_transposition(matrix, m, k));
  const Dense identity = Dense::Identity(m.rows(), m.cols());
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Dense& a = generators[k];
    report.involution = std::max(report.involution, max_abs(a * a - identity));
    if (k + 1 < generators.size()) {
      const Dense& b = generators[k + 1];
      report.braid = std::max(report.braid, max_abs(a * b * a - b * a * b));
    }
    for (std::size_t l = k + 2; l < generators.size(); ++l) {
      const Dense& b = generators[l];
      report.commuting = std::max(report.commuting, max_abs(a * b - b * a));
    }
  }
  return report;
}

TorusReport check_torus_action(const SWMatrix& matrix, std::span<const double> angles, double tolerance) {
  const int n = matrix.shape().n;
  if (static_cast<int>(angles.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " angles, got " + std::to_string(angles.size()));
  }
  auto phase = [&](const WeightVector& w) {
    double total = 0.0;
    for (int k = 0; k < n; ++k) total += w.counts[k] * angles[k];
    return std::polar(1.0, total);
  };
  const Dense m = dense_of(matrix);
  Eigen::VectorXcd diagonal(m.rows());
  for (std::size_t r = 0; r < matrix.rows().size(); ++r) {
    diagonal(static_cast<Eigen::Index>(r)) = phase(content(matrix.rows()[r]));
  }
  const Eigen::MatrixXcd mc = m.cast<std::complex<double>>();
  Eigen::MatrixXcd conjugated = mc.adjoint() * diagonal.asDiagonal() * mc;
  for (std::size_t c = 0; c < matrix.columns().size(); ++c) {
    const auto i = static_cast<Eigen::Index>(c);
    conjugated(i, i) -= phase(weight(matrix.columns()[c].t, n));
  }
  TorusReport report;
  report.tolerance = tolerance;
  report.max_residual = conjugated.size() == 0 ? 0.0 : conjugated.cwiseAbs().maxCoeff();
  return report;
}

bool CensusReport::passed() const {
  if (total != expected) return false;
  return std::all_of(rows.begin(), rows.end(), [](const CensusRow& row) {
    return !row.enumerated || (row.syt_count == row.dim_symmetric && row.sswt_count == row.dim_unitary);
  });
}

CensusReport census(const SystemShape& shape, std::uint64_t enumeration_limit) {
  CensusReport report;
  report.expected = shape.dimension();
  for (const auto& lambda : enumerate_partitions(shape.N, shape.n)) {
    CensusRow row;
    row.lambda = lambda;
    row.dim_symmetric = dim_symmetric(lambda);
    row.dim_unitary = dim_unitary(lambda, shape.n);
    row.product = row.dim_symmetric * row.dim_unitary;
    if (row.dim_symmetric <= enumeration_limit && row.dim_unitary <= enumeration_limit) {
      row.enumerated = true;
      row.syt_count = enumerate_syt(lambda).size();
      row.sswt_count = enumerate_sswt(lambda, shape.n).size();
    }
    report.total += row.product;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace swt
