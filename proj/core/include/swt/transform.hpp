#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swt/crystallizer.hpp"
#include "swt/radical.hpp"
#include "swt/tableaux.hpp"

namespace swt {

// Column label |lambda t y>.
struct ColumnKey {
  Partition lambda;
  WeylTableau t;
  StandardTableau y;
};

// Thrown when n^N exceeds the configured row cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::uint64_t requested, std::uint64_t cap);
  std::uint64_t cap() const { return cap_; }
  std::uint64_t requested() const { return requested_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultSizeCap = 4096;

// Product basis, ascending lexicographic.
std::vector<Configuration> product_basis(const SystemShape& shape);
// lambda descending lexicographic; within lambda, t in SSWT order; within t, y
// in SYT order.
std::vector<ColumnKey> irreducible_basis(const SystemShape& shape);

// The Schur-Weyl transform <f | lambda t y>, rows = product_basis(shape),
// columns = irreducible_basis(shape). Stored column-sparse: only nonzero
// entries, each column sorted by row.
class SWMatrix {
 public:
  using Entry = std::pair<std::size_t, RadicalSum>;

  SWMatrix(SystemShape shape, std::vector<Configuration> rows, std::vector<ColumnKey> columns,
           std::vector<std::vector<Entry>> entries);

  const SystemShape& shape() const { return shape_; }
  const std::vector<Configuration>& rows() const { return rows_; }
  const std::vector<ColumnKey>& columns() const { return columns_; }
  std::size_t dimension() const { return rows_.size(); }

  // Nonzero entries of one column, ascending row index.
  const std::vector<Entry>& column(std::size_t c) const { return entries_[c]; }
  // Zero when the entry is not stored.
  const RadicalSum& at(std::size_t row, std::size_t col) const;
  std::size_t nonzero_count() const;

  std::size_t row_index(const Configuration& f) const;

  // Dense row-major floating copy.
  std::vector<double> to_dense() const;

 private:
  SystemShape shape_;
  std::vector<Configuration> rows_;
  std::vector<ColumnKey> columns_;
  std::vector<std::vector<Entry>> entries_;
};

struct AssemblyOptions {
  std::uint64_t size_cap = kDefaultSizeCap;
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  // kPathEnumeration evaluates every entry by the literal path sum.
  AmplitudeMethod method = AmplitudeMethod::kLevelAccumulation;
};

// Throws ResourceError when n^N > options.size_cap.
SWMatrix assemble(const SystemShape& shape, const AssemblyOptions& options = {});

using StateVector = std::vector<std::complex<double>>;
using ExactStateVector = std::vector<RadicalSum>;

// Coefficients in the irreducible basis: M^dagger v. Throws
// std::invalid_argument on a dimension mismatch.
StateVector apply_forward(const SWMatrix& matrix, std::span<const std::complex<double>> state);
// Back to the product basis: M w.
StateVector apply_inverse(const SWMatrix& matrix, std::span<const std::complex<double>> coefficients);
ExactStateVector apply_forward(const SWMatrix& matrix, std::span<const RadicalSum> state);
ExactStateVector apply_inverse(const SWMatrix& matrix, std::span<const RadicalSum> coefficients);

struct UnitarityReport {
  bool exact_identity = false;
  std::size_t nonzero_off_diagonal = 0;
  std::size_t diagonal_mismatches = 0;
  double max_off_diagonal = 0.0;
  double max_diagonal_deviation = 0.0;
};

// M^T M in exact radical arithmetic (M is real).
UnitarityReport check_unitarity(const SWMatrix& matrix);
// max |M^T M - I| in double precision.
double unitarity_residual_float(const SWMatrix& matrix);

struct SelectionReport {
  std::size_t entries_checked = 0;
  std::size_t violations = 0;
  bool passed() const { return violations == 0; }
};

// Every stored (nonzero) entry must have content(f) == weight(t).
SelectionReport check_selection_rule(const SWMatrix& matrix);

struct SectorBlock {
  Partition lambda;
  std::size_t dim = 0;            // number of standard tableaux
  std::vector<double> matrix;     // dim x dim, row-major, indices in SYT order
};

struct PermutationReport {
  int transposition = 0;  // swaps node slots k, k+1
  double off_block = 0.0;          // max |C| outside lambda-diagonal blocks
  double t_dependence = 0.0;       // max deviation from identity-on-t (x) B
  double orthogonality = 0.0;      // max |B^T B - I|
  double involution = 0.0;         // max |B B - I|
  std::vector<SectorBlock> blocks;
  double tolerance = 1e-10;

  bool passed() const;
};

// C = M^T P_k M for the swap of node slots k, k+1 (1 <= k <= N-1).
PermutationReport check_permutation_blocks(const SWMatrix& matrix, int k, double tolerance = 1e-10);

struct CoxeterReport {
  double braid = 0.0;        // max |C_k C_{k+1} C_k - C_{k+1} C_k C_{k+1}|
  double involution = 0.0;   // max |C_k^2 - I|
  double commuting = 0.0;    // max |C_k C_l - C_l C_k|, |k - l| >= 2
  double tolerance = 1e-9;
  bool passed() const { return braid < tolerance && involution < tolerance && commuting < tolerance; }
};

CoxeterReport check_coxeter_relations(const SWMatrix& matrix, double tolerance = 1e-9);

struct TorusReport {
  double max_residual = 0.0;
  double tolerance = 1e-10;
  bool passed() const { return max_residual < tolerance; }
};

// M^dagger D(theta) M against diag(exp(i <weight(t), theta>)). Throws if
// angles.size() != n.
TorusReport check_torus_action(const SWMatrix& matrix, std::span<const double> angles, double tolerance = 1e-10);

struct CensusRow {
  Partition lambda;
  std::uint64_t dim_symmetric = 0;  // hook-length formula
  std::uint64_t dim_unitary = 0;    // Weyl dimension formula
  std::uint64_t product = 0;
  bool enumerated = false;
  std::uint64_t syt_count = 0;
  std::uint64_t sswt_count = 0;
};

struct CensusReport {
  std::vector<CensusRow> rows;
  std::uint64_t total = 0;
  std::uint64_t expected = 0;  // n^N
  bool passed() const;
};

// Rows whose formula dimensions exceed enumeration_limit skip the
// enumeration cross-check (enumerated = false).
CensusReport census(const SystemShape& shape, std::uint64_t enumeration_limit = 200000);

}  // namespace swt
