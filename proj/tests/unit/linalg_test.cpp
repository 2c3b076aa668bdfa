// Copyright 2026 The Quatcomp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "quatcomp/error.hpp"
#include "quatcomp/linalg.hpp"
#include "test_support.hpp"

namespace quatcomp {
namespace {

using testing::adjoint_spectrum;
using testing::max_abs_diff;
using testing::random_low_rank;
using testing::random_matrix;
using testing::Rng;

double unitarity_error(const QuaternionMatrix& u) {
  const auto g = matmul(conj_transpose(u), u);
  return frobenius_norm(g - QuaternionMatrix::identity(g.rows()));
}

TEST(ComplexAdjoint, RealMatrixIsBlockDiagonal) {
  QuaternionMatrix a(2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = Quaternion(1.0 + i + 2.0 * j);
  const Eigen::MatrixXcd c = to_complex_adjoint(a).matrix;
  ASSERT_EQ(c.rows(), 4);
  ASSERT_EQ(c.cols(), 6);
  EXPECT_EQ(c.topRightCorner(2, 3).norm(), 0.0);
  EXPECT_EQ(c.bottomLeftCorner(2, 3).norm(), 0.0);
  EXPECT_EQ(c.topLeftCorner(2, 3), c.bottomRightCorner(2, 3));
  EXPECT_EQ(c(1, 2), std::complex<double>(6.0, 0.0));
}

TEST(ComplexAdjoint, ConjTransposeCommutesExactly) {
  Rng rng(21);
  const auto a = random_matrix(4, 5, rng);
  const Eigen::MatrixXcd lhs = to_complex_adjoint(conj_transpose(a)).matrix;
  const Eigen::MatrixXcd rhs = to_complex_adjoint(a).matrix.adjoint();
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(from_complex_adjoint(to_complex_adjoint(a)), a);
}

TEST(Qsvd, Identity) {
  const auto r = qsvd(QuaternionMatrix::identity(4));
  for (double s : r.sigma) EXPECT_NEAR(s, 1.0, 1e-14);
  EXPECT_LE(unitarity_error(r.u), 1e-12);
  EXPECT_LE(unitarity_error(r.v), 1e-12);
}

TEST(Qsvd, DiagonalExample) {
  QuaternionMatrix a(2, 2);
  a(0, 0) = {1, 1, 0, 0};
  a(1, 1) = {0, 0, 2, 0};
  const auto r = qsvd(a);
  ASSERT_EQ(r.sigma.size(), 2u);
  EXPECT_NEAR(r.sigma[0], 2.0, 1e-14);
  EXPECT_NEAR(r.sigma[1], std::sqrt(2.0), 1e-14);
  const auto adj = adjoint_spectrum(a);
  EXPECT_NEAR(adj[0], 2.0, 1e-14);
  EXPECT_NEAR(adj[2], std::sqrt(2.0), 1e-14);
}

class QsvdShapes : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(QsvdShapes, ReconstructsWithUnitaryFactors) {
  const auto [m, n] = GetParam();
  Rng rng(100 + 7 * m + n);
  const auto a = random_matrix(m, n, rng);
  for (SvdMode mode : {SvdMode::kFull, SvdMode::kThin}) {
    const auto r = qsvd(a, mode);
    const std::size_t k = std::min(m, n);
    ASSERT_EQ(r.sigma.size(), k);
    EXPECT_TRUE(std::is_sorted(r.sigma.rbegin(), r.sigma.rend()));
    EXPECT_GE(r.sigma.back(), 0.0);
    EXPECT_LE(frobenius_norm(reconstruct(r.u, r.sigma, r.v) - a),
              1e-12 * frobenius_norm(a));
    if (mode == SvdMode::kFull) {
      EXPECT_EQ(r.u.cols(), static_cast<std::size_t>(m));
      EXPECT_EQ(r.v.cols(), static_cast<std::size_t>(n));
    } else {
      EXPECT_EQ(r.u.cols(), k);
      EXPECT_EQ(r.v.cols(), k);
    }
    EXPECT_LE(unitarity_error(r.u), 1e-10);
    EXPECT_LE(unitarity_error(r.v), 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, QsvdShapes,
                         ::testing::Values(std::pair{1, 1}, std::pair{1, 6},
                                           std::pair{6, 1}, std::pair{5, 5},
                                           std::pair{9, 4}, std::pair{4, 9},
                                           std::pair{30, 20}));

TEST(Qsvd, AdjointSpectrumComesInPairs) {
  Rng rng(22);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_matrix(7, 5, rng);
    const auto sigma = singular_values(a);
    const auto adj = adjoint_spectrum(a);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      EXPECT_NEAR(adj[2 * i], adj[2 * i + 1], 1e-10);
      EXPECT_NEAR(adj[2 * i], sigma[i], 1e-10);
    }
  }
}

TEST(Qsvd, RankDeficientKeepsUnitaryFactors) {
  Rng rng(23);
  const auto a = random_low_rank(12, 9, 3, rng);
  const auto r = qsvd(a);
  EXPECT_LE(unitarity_error(r.u), 1e-10);
  EXPECT_LE(unitarity_error(r.v), 1e-10);
  EXPECT_LE(frobenius_norm(reconstruct(r.u, r.sigma, r.v) - a),
            1e-12 * frobenius_norm(a));
  EXPECT_EQ(qrank(a), 3u);
}

TEST(Qsvd, ZeroRowsAndColumnsKeepSmallSingularValuesAccurate) {
  Rng rng(24);
  std::vector<double> scale(12, 1.0);
  scale[7] = 1e-7;
  for (std::size_t c = 8; c < 12; ++c) scale[c] = 0.0;
  const auto q = qsvd(random_matrix(13, 12, rng), SvdMode::kThin);
  auto a = q.u.scale_cols(scale);
  for (std::size_t c = 0; c < 12; ++c) a(4, c) = Quaternion{};
  const auto expect = adjoint_spectrum(a);
  for (const SvdMode mode : {SvdMode::kFull, SvdMode::kThin}) {
    const auto r = qsvd(a, mode);
    for (std::size_t i = 0; i < r.sigma.size(); ++i) {
      EXPECT_NEAR(r.sigma[i], expect[2 * i], 1e-14);
    }
    EXPECT_LE(unitarity_error(r.u), 1e-12);
    EXPECT_LE(unitarity_error(r.v), 1e-12);
    EXPECT_LE(frobenius_norm(reconstruct(r.u, r.sigma, r.v) - a), 1e-13);
  }
  const auto s = singular_values(a);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(s[i], expect[2 * i], 1e-14);

  const auto z = qsvd(QuaternionMatrix(4, 3));
  EXPECT_EQ(z.sigma, std::vector<double>(3, 0.0));
  EXPECT_EQ(z.u, QuaternionMatrix::identity(4));
}

TEST(Qsvd, NonFiniteThrows) {
  QuaternionMatrix a(2, 2);
  a(0, 1).a2 = INFINITY;
  EXPECT_THROW(qsvd(a), NumericalError);
  EXPECT_THROW(spectral_map(a, [](double s) { return s; }), NumericalError);
}

TEST(SpectralMap, MatchesSvdPath) {
  Rng rng(24);
  const auto f = [](double s) { return s > 1.5 ? std::sqrt(s) : 0.0; };
  for (auto [m, n] : {std::pair{1, 1}, std::pair{1, 5}, std::pair{5, 1},
                      std::pair{6, 4}, std::pair{4, 6}, std::pair{25, 18}}) {
    const auto a = random_matrix(m, n, rng);
    const auto r = qsvd(a, SvdMode::kThin);
    std::vector<double> w(r.sigma.size());
    std::transform(r.sigma.begin(), r.sigma.end(), w.begin(), f);
    const auto expect = reconstruct(r.u, w, r.v);
    const auto got = spectral_map(a, f);
    EXPECT_LE(max_abs_diff(got, expect), 1e-11 * (1.0 + frobenius_norm(expect)))
        << m << "x" << n;
  }
}

TEST(SpectralMap, IdentityMapReturnsInput) {
  Rng rng(25);
  const auto a = random_low_rank(15, 11, 4, rng);
  const auto b = spectral_map(a, [](double s) { return s; });
  EXPECT_LE(frobenius_norm(a - b), 1e-12 * frobenius_norm(a));
  const auto z = spectral_map(a, [](double) { return 0.0; });
  EXPECT_EQ(z, QuaternionMatrix(15, 11));
}

TEST(Qrank, Examples) {
  EXPECT_EQ(qrank(QuaternionMatrix(4, 3)), 0u);
  EXPECT_EQ(qrank(QuaternionMatrix::identity(5)), 5u);
  Rng rng(26);
  const auto u = random_matrix(6, 1, rng);
  const auto v = random_matrix(4, 1, rng);
  EXPECT_EQ(qrank(matmul(u, conj_transpose(v))), 1u);
  EXPECT_THROW(qrank(u, -1.0), DomainError);
}

TEST(QuatNorm, Examples) {
  const LogNormParams params{1.0, 0.1};
  EXPECT_NEAR(quat_norm(QuaternionMatrix(3, 5), LogNorm{params}),
              3.0 * std::log(0.1), 1e-14);
  EXPECT_NEAR(quat_norm(QuaternionMatrix(3, 5), LogNorm{{0.5, 0.2}}),
              3.0 * std::log(0.2), 1e-14);

  QuaternionMatrix a(2, 2);
  a(0, 0) = {1, 1, 0, 0};
  a(1, 1) = {0, 0, 2, 0};
  EXPECT_NEAR(quat_norm(a, LogNorm{params}), 1.1568, 5e-5);
  EXPECT_NEAR(quat_norm(a, LogNorm{params}),
              std::log(2.1) + std::log(std::sqrt(2.0) + 0.1), 1e-13);
  EXPECT_NEAR(quat_norm(a, NuclearNorm{}), 2.0 + std::sqrt(2.0), 1e-13);
  EXPECT_NEAR(quat_norm(a, TruncatedLogNorm{1, params}),
              std::log(std::sqrt(2.0) + 0.1), 1e-13);
}

TEST(QuatNorm, TruncatedKeepsSmallestTerms) {
  Rng rng(27);
  const auto a = random_matrix(6, 4, rng);
  const auto sigma = singular_values(a);
  const LogNormParams params{0.5, 0.3};
  EXPECT_NEAR(quat_norm(a, TruncatedLogNorm{3, params}),
              std::log(std::sqrt(sigma[3]) + 0.3), 1e-12);
  double full = 0.0;
  for (double s : sigma) full += std::log(std::sqrt(s) + 0.3);
  EXPECT_NEAR(quat_norm(a, LogNorm{params}), full, 1e-12);
}

TEST(QuatNorm, InvalidParameters) {
  const QuaternionMatrix a = QuaternionMatrix::identity(3);
  EXPECT_THROW(quat_norm(a, LogNorm{{1.0, 0.0}}), DomainError);
  EXPECT_THROW(quat_norm(a, LogNorm{{-0.5, 0.1}}), DomainError);
  EXPECT_THROW(quat_norm(a, LogNorm{{1.5, 0.1}}), DomainError);
  EXPECT_THROW(quat_norm(a, TruncatedLogNorm{3, {}}), DomainError);
}

}  // namespace
}  // namespace quatcomp
