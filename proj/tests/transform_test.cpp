#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "swt/text_format.hpp"
#include "swt/transform.hpp"

namespace swt {
namespace {

Rational q(long num, long den) { return make_rational(num, den); }

RadicalSum single(long radicand, Rational c) {
  RadicalSum::Terms t;
  t.emplace(Integer(radicand), c);
  return RadicalSum::from_terms(std::move(t));
}

std::size_t column_index(const SWMatrix& m, const char* lambda, const char* t, const char* y) {
  for (std::size_t c = 0; c < m.columns().size(); ++c) {
    const auto& key = m.columns()[c];
    if (format_partition(key.lambda) == lambda && format_tableau(key.t) == t && format_tableau(key.y) == y) return c;
  }
  throw std::out_of_range("no such column");
}

TEST(Bases, Orders) {
  const auto rows = product_basis(SystemShape(2, 2));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(format_configuration(rows[0]), "1,1");
  EXPECT_EQ(format_configuration(rows[1]), "1,2");
  EXPECT_EQ(format_configuration(rows[3]), "2,2");

  const auto columns = irreducible_basis(SystemShape(2, 2));
  ASSERT_EQ(columns.size(), 4u);
  EXPECT_EQ(format_partition(columns[0].lambda), "2");
  EXPECT_EQ(format_tableau(columns[0].t), "2,2");
  EXPECT_EQ(format_tableau(columns[2].t), "1,1");
  EXPECT_EQ(format_partition(columns[3].lambda), "1,1");
  EXPECT_EQ(irreducible_basis(SystemShape(3, 4)).size(), 81u);
}

TEST(Assemble, TwoQubits) {
  const SWMatrix m = assemble(SystemShape(2, 2));
  ASSERT_EQ(m.dimension(), 4u);
  EXPECT_EQ(m.nonzero_count(), 6u);
  const RadicalSum half_root2 = single(2, q(1, 2));
  const std::size_t f11 = m.row_index(Configuration({1, 1}, 2));
  const std::size_t f12 = m.row_index(Configuration({1, 2}, 2));
  const std::size_t f21 = m.row_index(Configuration({2, 1}, 2));
  const std::size_t f22 = m.row_index(Configuration({2, 2}, 2));
  EXPECT_EQ(m.at(f11, column_index(m, "2", "1,1", "1,2")), RadicalSum(Rational(1)));
  EXPECT_EQ(m.at(f22, column_index(m, "2", "2,2", "1,2")), RadicalSum(Rational(1)));
  const std::size_t mixed = column_index(m, "2", "1,2", "1,2");
  EXPECT_EQ(m.at(f12, mixed), half_root2);
  EXPECT_EQ(m.at(f21, mixed), half_root2);
  const std::size_t singlet = column_index(m, "1,1", "1/2", "1/2");
  EXPECT_EQ(m.at(f12, singlet), half_root2);
  EXPECT_EQ(m.at(f21, singlet), -half_root2);
  EXPECT_TRUE(m.at(f11, singlet).is_zero());
}

TEST(Assemble, SingleLetterAlphabetIsIdentity) {
  const SWMatrix m = assemble(SystemShape(1, 3));
  ASSERT_EQ(m.dimension(), 1u);
  EXPECT_EQ(m.at(0, 0), RadicalSum(Rational(1)));
}

TEST(Assemble, GoldenEntry) {
  const SWMatrix m = assemble(SystemShape(3, 4));
  ASSERT_EQ(m.dimension(), 81u);
  const std::size_t r = m.row_index(Configuration({1, 3, 2, 1}, 3));
  const std::size_t c = column_index(m, "3,1", "1,1,3/2", "1,2,4/3");
  EXPECT_EQ(m.at(r, c), single(1, q(5, 12)));
}

TEST(Assemble, WorkerCountDoesNotChangeResult) {
  const SWMatrix one = assemble(SystemShape(3, 3), {kDefaultSizeCap, 1});
  const SWMatrix many = assemble(SystemShape(3, 3), {kDefaultSizeCap, 7});
  for (std::size_t c = 0; c < one.columns().size(); ++c) EXPECT_EQ(one.column(c), many.column(c));
}

TEST(Assemble, PathEnumerationAssemblyIsIdentical) {
  const SWMatrix dp = assemble(SystemShape(2, 4));
  const SWMatrix paths = assemble(SystemShape(2, 4), {kDefaultSizeCap, 0, AmplitudeMethod::kPathEnumeration});
  for (std::size_t c = 0; c < dp.columns().size(); ++c) EXPECT_EQ(dp.column(c), paths.column(c));
}

TEST(Assemble, SizeCap) {
  try {
    assemble(SystemShape(2, 13));
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.cap(), 4096u);
    EXPECT_EQ(e.requested(), 8192u);
    EXPECT_NE(std::string(e.what()).find("4096"), std::string::npos);
  }
  EXPECT_THROW(assemble(SystemShape(3, 3), {20}), ResourceError);
}

TEST(Apply, BasisStateOfTwoQubits) {
  const SWMatrix m = assemble(SystemShape(2, 2));
  StateVector v(4);
  v[m.row_index(Configuration({1, 2}, 2))] = 1.0;
  const StateVector w = apply_forward(m, v);
  const double h = std::sqrt(0.5);
  EXPECT_NEAR(std::abs(w[column_index(m, "2", "1,2", "1,2")] - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w[column_index(m, "1,1", "1/2", "1/2")] - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w[column_index(m, "2", "1,1", "1,2")]), 0.0, 1e-15);
}

TEST(Apply, ColumnStatesMapToUnitVectors) {
  const SWMatrix m = assemble(SystemShape(2, 3));
  for (std::size_t c = 0; c < m.dimension(); ++c) {
    StateVector unit(m.dimension());
    unit[c] = 1.0;
    const StateVector state = apply_inverse(m, unit);
    const StateVector back = apply_forward(m, state);
    for (std::size_t i = 0; i < back.size(); ++i) {
      EXPECT_NEAR(std::abs(back[i] - (i == c ? 1.0 : 0.0)), 0.0, 1e-12);
    }
  }
}

TEST(Apply, ZeroMapsToZero) {
  const SWMatrix m = assemble(SystemShape(2, 3));
  const StateVector zero(m.dimension());
  for (const auto& x : apply_forward(m, zero)) EXPECT_EQ(x, std::complex<double>(0.0));
  for (const auto& x : apply_inverse(m, zero)) EXPECT_EQ(x, std::complex<double>(0.0));
}

TEST(Apply, RandomRoundTripsPreserveNorm) {
  const SWMatrix m = assemble(SystemShape(3, 3));
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 100; ++trial) {
    StateVector v(m.dimension());
    for (auto& x : v) x = {normal(rng), normal(rng)};
    const StateVector w = apply_forward(m, v);
    const StateVector back = apply_inverse(m, w);
    double norm_v = 0.0;
    double norm_w = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_NEAR(std::abs(back[i] - v[i]), 0.0, 1e-12);
      norm_v += std::norm(v[i]);
      norm_w += std::norm(w[i]);
    }
    EXPECT_NEAR(norm_v, norm_w, 1e-12 * norm_v);
  }
}

TEST(Apply, ExactRoundTrip) {
  const SWMatrix m = assemble(SystemShape(2, 3));
  std::mt19937 rng(9);
  ExactStateVector v(m.dimension());
  for (auto& x : v) x = RadicalSum(make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4));
  const ExactStateVector w = apply_forward(m, v);
  EXPECT_EQ(apply_inverse(m, w), v);
  RadicalSum norm_v;
  RadicalSum norm_w;
  for (const auto& x : v) norm_v += x * x;
  for (const auto& x : w) norm_w += x * x;
  EXPECT_EQ(norm_v, norm_w);
}

TEST(Apply, DimensionMismatch) {
  const SWMatrix m = assemble(SystemShape(2, 2));
  EXPECT_THROW(apply_forward(m, StateVector(3)), std::invalid_argument);
  EXPECT_THROW(apply_inverse(m, ExactStateVector(5)), std::invalid_argument);
}

TEST(Unitarity, ExactForSmallShapes) {
  for (const auto& [n, N] : std::vector<std::pair<int, int>>{{1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    const UnitarityReport report = check_unitarity(assemble(SystemShape(n, N)));
    EXPECT_TRUE(report.exact_identity) << n << " " << N;
    EXPECT_EQ(report.nonzero_off_diagonal, 0u);
    EXPECT_EQ(report.diagonal_mismatches, 0u);
  }
}

TEST(Unitarity, FloatResidual) {
  EXPECT_LT(unitarity_residual_float(assemble(SystemShape(3, 4))), 1e-12);
}

TEST(SelectionRule, HoldsOnEveryStoredEntry) {
  for (const auto& [n, N] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}}) {
    const SWMatrix m = assemble(SystemShape(n, N));
    const SelectionReport report = check_selection_rule(m);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.entries_checked, m.nonzero_count());
  }
}

TEST(PermutationBlocks, TwoQubitSectors) {
  const PermutationReport report = check_permutation_blocks(assemble(SystemShape(2, 2)), 1);
  EXPECT_TRUE(report.passed());
  ASSERT_EQ(report.blocks.size(), 2u);
  EXPECT_EQ(report.blocks[0].dim, 1u);
  EXPECT_NEAR(report.blocks[0].matrix[0], 1.0, 1e-12);
  EXPECT_NEAR(report.blocks[1].matrix[0], -1.0, 1e-12);
}

TEST(PermutationBlocks, ThreeQubitSectors) {
  const PermutationReport report = check_permutation_blocks(assemble(SystemShape(2, 3)), 1);
  EXPECT_TRUE(report.passed());
  ASSERT_EQ(report.blocks.size(), 2u);
  EXPECT_EQ(report.blocks[0].dim, 1u);
  EXPECT_NEAR(report.blocks[0].matrix[0], 1.0, 1e-12);
  EXPECT_EQ(report.blocks[1].dim, 2u);
  EXPECT_LT(report.orthogonality, 1e-10);
  EXPECT_LT(report.involution, 1e-10);
}

TEST(PermutationBlocks, AllTranspositions) {
  for (const auto& [n, N] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}}) {
    const SWMatrix m = assemble(SystemShape(n, N));
    for (int k = 1; k < N; ++k) {
      const PermutationReport report = check_permutation_blocks(m, k);
      EXPECT_TRUE(report.passed()) << n << " " << N << " k=" << k;
      EXPECT_NEAR(report.blocks.front().matrix[0], 1.0, 1e-12);  // symmetric sector
    }
    EXPECT_TRUE(check_coxeter_relations(m).passed());
  }
  EXPECT_THROW(check_permutation_blocks(assemble(SystemShape(2, 2)), 2), std::out_of_range);
  EXPECT_THROW(check_permutation_blocks(assemble(SystemShape(2, 2)), 0), std::out_of_range);
}

// Exploratory: compare the y-blocks with Young's orthogonal form, where the
// swap of k, k+1 acts with diagonal 1/r and off-diagonal sqrt(1 - 1/r^2),
// r = content(k+1) - content(k). Off-diagonal magnitudes are compared so that
// a per-tableau phase does not matter.
TEST(PermutationBlocks, MatchesYoungOrthogonalFormUpToPhase) {
  const SWMatrix m = assemble(SystemShape(3, 4));
  for (int k = 1; k < 4; ++k) {
    const PermutationReport report = check_permutation_blocks(m, k);
    for (const auto& block : report.blocks) {
      const auto tableaux = enumerate_syt(block.lambda);
      ASSERT_EQ(tableaux.size(), block.dim);
      auto content = [](const StandardTableau& y, int letter) {
        for (std::size_t r = 0; r < y.rows().size(); ++r) {
          for (std::size_t c = 0; c < y.rows()[r].size(); ++c) {
            if (y.rows()[r][c] == letter) return static_cast<int>(c) - static_cast<int>(r);
          }
        }
        return 0;
      };
      for (std::size_t a = 0; a < block.dim; ++a) {
        const double r = content(tableaux[a], k + 1) - content(tableaux[a], k);
        EXPECT_NEAR(block.matrix[a * block.dim + a], 1.0 / r, 1e-12);
        for (std::size_t b = 0; b < block.dim; ++b) {
          if (a == b) continue;
          const bool swapped = content(tableaux[b], k) == content(tableaux[a], k + 1) &&
                               content(tableaux[b], k + 1) == content(tableaux[a], k);
          const double expected = swapped ? std::sqrt(1.0 - 1.0 / (r * r)) : 0.0;
          EXPECT_NEAR(std::abs(block.matrix[a * block.dim + b]), expected, 1e-12);
        }
      }
    }
  }
}

TEST(Torus, ZeroAnglesGiveIdentity) {
  const std::vector<double> zero(3, 0.0);
  EXPECT_TRUE(check_torus_action(assemble(SystemShape(3, 3)), zero).passed());
}

TEST(Torus, RandomAngles) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (const auto& [n, N] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}}) {
    const SWMatrix m = assemble(SystemShape(n, N));
    std::vector<double> theta(n);
    for (auto& x : theta) x = angle(rng);
    EXPECT_TRUE(check_torus_action(m, theta).passed());
  }
  EXPECT_THROW(check_torus_action(assemble(SystemShape(2, 2)), std::vector<double>{0.1}), std::invalid_argument);
}

TEST(Census, ThreeLetterFourSites) {
  const CensusReport report = census(SystemShape(3, 4));
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.total, 81u);
  bool found = false;
  for (const auto& row : report.rows) {
    if (row.lambda == Partition({3, 1})) {
      found = true;
      EXPECT_EQ(row.dim_symmetric, 3u);
      EXPECT_EQ(row.dim_unitary, 15u);
      EXPECT_EQ(row.product, 45u);
      EXPECT_TRUE(row.enumerated);
      EXPECT_EQ(row.syt_count, 3u);
      EXPECT_EQ(row.sswt_count, 15u);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Census, SmallCases) {
  const CensusReport two = census(SystemShape(2, 2));
  ASSERT_EQ(two.rows.size(), 2u);
  EXPECT_EQ(two.rows[0].product, 3u);
  EXPECT_EQ(two.rows[1].product, 1u);
  const CensusReport one = census(SystemShape(1, 5));
  EXPECT_EQ(one.rows.size(), 1u);
  EXPECT_EQ(one.total, 1u);
}

}  // namespace
}  // namespace swt
