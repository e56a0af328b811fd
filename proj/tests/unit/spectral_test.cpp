#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "starspec/error.hpp"
#include "starspec/oracle.hpp"
#include "starspec/separating_function.hpp"
#include "starspec/spectral.hpp"
#include "test_support.hpp"

namespace starspec {
namespace {

StarlikeShape ones(int count) { return StarlikeShape(std::vector<int>(static_cast<std::size_t>(count), 1)); }

TEST(NondegenerateRoots, Star) {
  const auto roots = nondegenerate_roots(ones(4));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0], 4.0, 1e-12);
}

TEST(NondegenerateRoots, TwoSpider) {
  const auto roots = nondegenerate_roots(StarlikeShape({2, 2, 2}));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0], 4.0, 1e-12);
}

TEST(NondegenerateRoots, OneTwoFiveHasGoldenSquare) {
  const auto roots = nondegenerate_roots(StarlikeShape({1, 2, 5}));
  const double tau = (std::sqrt(5.0) + 3) / 2;
  EXPECT_TRUE(std::any_of(roots.begin(), roots.end(),
                          [tau](double t) { return std::abs(t - tau) < 1e-10; }));
  EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
}

TEST(DegenerateEigenvalues, Examples) {
  const auto spider = degenerate_eigenvalues(StarlikeShape({2, 2, 2}));
  ASSERT_EQ(spider.size(), 1u);
  EXPECT_NEAR(spider[0].t, 1.0, 1e-14);
  EXPECT_EQ(spider[0].multiplicity, 2);
  EXPECT_EQ(spider[0].branches, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(spider[0].kind, EigenKind::kDegenerate);

  const auto threes = degenerate_eigenvalues(StarlikeShape({1, 3, 3}));
  ASSERT_EQ(threes.size(), 1u);
  EXPECT_NEAR(threes[0].t, 2.0, 1e-14);
  EXPECT_EQ(threes[0].multiplicity, 1);

  const auto mixed = degenerate_eigenvalues(StarlikeShape({2, 5}));
  ASSERT_EQ(mixed.size(), 1u);
  EXPECT_NEAR(mixed[0].t, 1.0, 1e-14);
  EXPECT_EQ(mixed[0].multiplicity, 1);
  EXPECT_EQ(oracle_spectrum(StarlikeShape({2, 5})).multiplicity_of(1.0, 1e-9), 1);

  EXPECT_TRUE(degenerate_eigenvalues(StarlikeShape({4, 3, 1})).empty());
}

TEST(SpectralIndex, Examples) {
  EXPECT_NEAR(spectral_index(ones(9)), 3.0, 1e-12);
  EXPECT_NEAR(spectral_index(StarlikeShape({1})), 1.0, 1e-12);
  EXPECT_NEAR(spectral_index(ones(3)), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(spectral_index(StarlikeShape({2, 1, 1})), std::sqrt(2 + std::sqrt(2.0)), 1e-12);
  EXPECT_EQ(spectral_index(StarlikeShape{}), 0.0);
}

TEST(SpectralIndex, OneTwoFiveIsTwo) {
  // rho_4(1, 2, 5) = 4, so the largest root of rho_t = t is 4; the golden
  // ratio is the next eigenvalue down.
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const StarlikeShape shape({1, 2, 5});
  EXPECT_NEAR(spectral_index(shape), 2.0, 1e-12);
  const auto spectrum = full_spectrum(shape);
  EXPECT_NEAR(spectrum.entries[1].eigenvalue, phi, 1e-12);
}

TEST(SpectralIndex, ExceedsEveryBranchPole) {
  for (const auto& shape : all_shapes(12)) {
    const double t_max = std::pow(spectral_index(shape), 2);
    for (int n : shape.branches()) {
      for (const auto& pole : branch_pole_set(n)) EXPECT_GT(t_max, pole.t) << shape;
    }
  }
}

TEST(FullSpectrum, Examples) {
  EXPECT_EQ(full_spectrum(ones(4)).entries,
            (std::vector<SpectrumEntry>{{2.0, 1}, {0.0, 3}, {-2.0, 1}}));
  EXPECT_EQ(full_spectrum(StarlikeShape({2, 2, 2})).entries,
            (std::vector<SpectrumEntry>{{2.0, 1}, {1.0, 2}, {0.0, 1}, {-1.0, 2}, {-2.0, 1}}));
  EXPECT_EQ(full_spectrum(StarlikeShape({1})).entries,
            (std::vector<SpectrumEntry>{{1.0, 1}, {-1.0, 1}}));
  EXPECT_EQ(full_spectrum(StarlikeShape{}).entries, (std::vector<SpectrumEntry>{{0.0, 1}}));
}

TEST(FullSpectrum, MatchesOracleOnAllSmallShapes) {
  for (const auto& shape : all_shapes(12)) {
    const auto spectrum = full_spectrum(shape);
    EXPECT_TRUE(spectra_match(spectrum, oracle_spectrum(shape), 1e-8)) << shape;
    EXPECT_TRUE(spectrum_violations(spectrum).empty()) << shape;
  }
}

TEST(FullSpectrum, MatchesDenseSolverOnRandomLargerShapes) {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 80; ++trial) {
    const auto shape = testing::random_shape(rng, 13 + trial % 28);
    const auto dense = testing::dense_eigenvalues(shape);
    std::vector<double> expanded;
    for (const auto& e : full_spectrum(shape).entries) {
      expanded.insert(expanded.end(), static_cast<std::size_t>(e.multiplicity), e.eigenvalue);
    }
    ASSERT_EQ(expanded.size(), dense.size()) << shape;
    for (std::size_t i = 0; i < dense.size(); ++i) EXPECT_NEAR(expanded[i], dense[i], 1e-8) << shape;
  }
}

TEST(FullSpectrum, PathsMatchCosineFormula) {
  for (int p = 2; p <= 30; ++p) {
    const auto spectrum = full_spectrum(StarlikeShape({p - 1}));
    ASSERT_EQ(spectrum.total_multiplicity(), p);
    std::vector<double> expected;
    for (int j = 1; j <= p; ++j) expected.push_back(2 * std::cos(j * std::numbers::pi / (p + 1)));
    std::size_t i = 0;
    for (const auto& e : spectrum.entries) {
      for (int r = 0; r < e.multiplicity; ++r, ++i) EXPECT_NEAR(e.eigenvalue, expected[i], 1e-8);
    }
  }
}

TEST(FullSpectrum, TighterToleranceStillAgrees) {
  const StarlikeShape shape({6, 4, 3, 1});
  EXPECT_TRUE(spectra_match(full_spectrum(shape, 1e-6), full_spectrum(shape, 1e-13), 1e-12));
}

TEST(PrincipalEigenvector, PathOfThree) {
  const auto y = principal_eigenvector(StarlikeShape({1, 1}));
  EXPECT_NEAR(y.root, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(y.branches[0][0], 1.0, 1e-12);
  EXPECT_NEAR(y.branches[1][0], 1.0, 1e-12);
  EXPECT_LE(verify_eigenpair(StarlikeShape({1, 1}), y.index, y.flatten()), 1e-12);
}

TEST(PrincipalEigenvector, StarLeavesAreOne) {
  for (int t = 1; t <= 12; ++t) {
    const auto y = principal_eigenvector(ones(t));
    EXPECT_NEAR(y.root, std::sqrt(static_cast<double>(t)), 1e-12);
    for (const auto& branch : y.branches) EXPECT_NEAR(branch[0], 1.0, 1e-12);
  }
}

TEST(PrincipalEigenvector, MatchesDenseEigenvector) {
  const StarlikeShape shape({2, 1, 1});
  const auto y = principal_eigenvector(shape).flatten();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(testing::dense_adjacency(shape));
  Eigen::VectorXd top = solver.eigenvectors().col(solver.eigenvalues().size() - 1);
  top *= y[0] / top(0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    EXPECT_GT(y[i], 0.0);
    EXPECT_NEAR(y[i], top(static_cast<Eigen::Index>(i)), 1e-10);
  }
}

TEST(PrincipalEigenvector, PositiveWithSmallResidualOnAllSmallShapes) {
  for (const auto& shape : all_shapes(12)) {
    const auto y = principal_eigenvector(shape);
    const auto flat = y.flatten();
    const double largest = *std::max_element(flat.begin(), flat.end());
    EXPECT_TRUE(std::all_of(flat.begin(), flat.end(), [](double c) { return c > 0; })) << shape;
    EXPECT_LE(verify_eigenpair(shape, y.index, flat), 1e-9 * largest) << shape;
  }
}

TEST(VerifyEigenpair, StarVector) {
  const std::vector<double> x{2, 1, 1, 1, 1};
  EXPECT_EQ(verify_eigenpair(ones(4), 2.0, x), 0.0);
  EXPECT_EQ(verify_eigenpair(ones(4), 0.0, std::vector<double>(5, 0.0)), 0.0);
}

TEST(VerifyEigenpair, DimensionMismatch) {
  try {
    verify_eigenpair(ones(4), 2.0, std::vector<double>{1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDimensionMismatch);
  }
}

TEST(DegenerateEigenvector, SpiderConstruction) {
  const StarlikeShape shape({2, 2, 2});
  const auto x = degenerate_eigenvector(shape, 1.0, 1, 2);
  EXPECT_LE(verify_eigenpair(shape, 1.0, x), 1e-12);
  EXPECT_EQ(x[0], 0.0);
  EXPECT_NE(x[1], 0.0);
}

TEST(DegenerateEigenvector, EveryReportedPairOnSmallShapes) {
  int constructions = 0;
  for (const auto& shape : all_shapes(12)) {
    for (const auto& e : degenerate_eigenvalues(shape)) {
      for (std::size_t a = 0; a < e.branches.size(); ++a) {
        for (std::size_t b = a + 1; b < e.branches.size(); ++b) {
          const auto x = degenerate_eigenvector(shape, e.t, e.branches[a], e.branches[b]);
          EXPECT_LE(verify_eigenpair(shape, e.lambda(), x), 1e-9) << shape;
          ++constructions;
        }
      }
    }
  }
  EXPECT_GT(constructions, 100);
}

TEST(RootAccounting, IndexIsSimpleAndPositivePartFits) {
  for (const auto& shape : all_shapes(12)) {
    const auto positive = positive_eigenvalues(shape);
    ASSERT_FALSE(positive.empty());
    EXPECT_EQ(positive.front().kind, EigenKind::kNonDegenerate);
    EXPECT_EQ(positive.front().multiplicity, 1);
    int count = 0;
    for (const auto& e : positive) count += e.multiplicity;
    EXPECT_LE(2 * count, shape.vertex_count());
  }
}

}  // namespace
}  // namespace starspec
