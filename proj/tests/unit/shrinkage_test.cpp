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

#include <cmath>

#include "quatcomp/error.hpp"
#include "quatcomp/linalg.hpp"
#include "quatcomp/shrinkage.hpp"
#include "test_support.hpp"

namespace quatcomp {
namespace {

using testing::grid_lsvt;
using testing::random_matrix;
using testing::Rng;

TEST(LsvtScalar, Examples) {
  for (double x : {0.0, 0.5, 3.0, 17.0}) {
    for (double eps : {0.01, 0.1, 1.0}) {
      EXPECT_DOUBLE_EQ(lsvt_scalar(x, {0.0, eps}), x);
    }
  }
  EXPECT_EQ(lsvt_scalar(0.5, {1.0, 0.1}), 0.0);
  const double root = 0.5 * (2.9 + std::sqrt(5.61));
  EXPECT_NEAR(lsvt_scalar(3.0, {1.0, 0.1}), root, 1e-14);
  EXPECT_NEAR(lsvt_scalar(3.0, {1.0, 0.1}), 2.63427, 1e-5);
  EXPECT_NEAR(lsvt_objective(root, 3.0, {1.0, 0.1}), 1.073, 1e-3);
  EXPECT_NEAR(lsvt_objective(0.0, 3.0, {1.0, 0.1}), 2.197, 1e-3);
}

TEST(LsvtScalar, AgreesWithGridOracle) {
  Rng rng(31);
  std::uniform_real_distribution<double> ux(0.0, 10.0), ul(0.0, 5.0),
      ue(1e-6, 1.0);
  for (int t = 0; t < 200; ++t) {
    const double x = ux(rng);
    const ShrinkParams p{ul(rng), ue(rng)};
    EXPECT_NEAR(lsvt_scalar(x, p), grid_lsvt(x, p), 1e-4)
        << "x=" << x << " lambda=" << p.lambda << " eps=" << p.epsilon;
  }
}

TEST(LsvtScalar, ShrinksIntoRange) {
  Rng rng(32);
  std::uniform_real_distribution<double> ux(0.0, 50.0), ul(0.0, 20.0),
      ue(1e-3, 2.0);
  for (int t = 0; t < 5000; ++t) {
    const double x = ux(rng);
    const double a = lsvt_scalar(x, {ul(rng), ue(rng)});
    EXPECT_GE(a, 0.0);
    EXPECT_LE(a, x);
  }
}

TEST(LsvtScalar, NonIncreasingInLambda) {
  for (double eps : {0.05, 0.1, 0.7}) {
    for (double x = 0.0; x <= 10.0; x += 0.25) {
      double prev = x;
      for (double lambda = 0.0; lambda <= 8.0; lambda += 0.05) {
        const double a = lsvt_scalar(x, {lambda, eps});
        EXPECT_LE(a, prev) << x << " " << lambda << " " << eps;
        prev = a;
      }
    }
  }
}

TEST(LsvtScalar, InvalidInput) {
  EXPECT_THROW(lsvt_scalar(1.0, {-1.0, 0.1}), DomainError);
  EXPECT_THROW(lsvt_scalar(1.0, {1.0, 0.0}), DomainError);
  EXPECT_THROW(lsvt_scalar(-1.0, {1.0, 0.1}), DomainError);
}

TEST(Qlsvt, ZeroAndIdentityCases) {
  EXPECT_EQ(qlsvt(QuaternionMatrix(4, 3), {2.0, 0.1}), QuaternionMatrix(4, 3));
  Rng rng(33);
  const auto y = random_matrix(7, 5, rng);
  const auto once = qlsvt(y, {0.0, 0.1});
  EXPECT_LE(frobenius_norm(once - y), 1e-12 * frobenius_norm(y));
  const auto twice = qlsvt(once, {0.0, 0.1});
  EXPECT_LE(frobenius_norm(twice - y), 1e-8);
}

TEST(Qlsvt, ShrinksEverySingularValue) {
  Rng rng(34);
  const auto y = random_matrix(9, 6, rng, 2.0);
  const ShrinkParams p{3.0, 0.1};
  const auto sy = singular_values(y);
  const auto sx = singular_values(qlsvt(y, p));
  for (std::size_t i = 0; i < sy.size(); ++i)
    EXPECT_NEAR(sx[i], lsvt_scalar(sy[i], p), 1e-10);
}

double matrix_objective(const QuaternionMatrix& x, const QuaternionMatrix& y,
                        const ShrinkParams& p) {
  const double fit = 0.5 * frobenius_norm_squared(y - x);
  return fit + p.lambda * quat_norm(x, LogNorm{{1.0, p.epsilon}});
}

TEST(Qlsvt, BeatsPerturbedCandidates) {
  Rng rng(35);
  const auto y = random_matrix(8, 6, rng);
  const ShrinkParams p{1.5, 0.1};
  const auto x = qlsvt(y, p);
  const double best = matrix_objective(x, y, p);
  const auto svd = qsvd(y, SvdMode::kThin);
  std::normal_distribution<double> noise(0.0, 0.3);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> s(svd.sigma.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      s[i] = std::max(0.0, lsvt_scalar(svd.sigma[i], p) + noise(rng));
    const auto candidate = reconstruct(svd.u, s, svd.v);
    EXPECT_LE(best, matrix_objective(candidate, y, p) + 1e-9);
  }
}

}  // namespace
}  // namespace quatcomp
