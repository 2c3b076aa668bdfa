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

#ifndef QUATCOMP_SHRINKAGE_HPP_
#define QUATCOMP_SHRINKAGE_HPP_

#include "quatcomp/quaternion_matrix.hpp"

namespace quatcomp {

/// Weight and offset of the penalty lambda * log(a + epsilon).
struct ShrinkParams {
  double lambda = 0.0;
  double epsilon = 0.1;
};

/// Minimizer over a >= 0 of h(a) = (a - x)^2 / 2 + lambda * log(a + epsilon).
///
/// With D = (x - epsilon)^2 - 4 (lambda - x epsilon), the stationary points
/// are the roots of a^2 - (x - epsilon) a + lambda - x epsilon. If D <= 0 the
/// function is increasing and the answer is 0. Otherwise the answer is
/// whichever of {0, (x - epsilon + sqrt(D)) / 2} has the smaller h; a tie
/// keeps the nonzero root and a negative root is discarded. The result lies
/// in [0, x].
///
/// Throws DomainError for x < 0, lambda < 0 or epsilon <= 0.
double lsvt_scalar(double x, const ShrinkParams& params);

/// The objective h(a) minimized by lsvt_scalar.
double lsvt_objective(double a, double x, const ShrinkParams& params);

/// Logarithmic singular value thresholding: U diag(lsvt_scalar(sigma)) V^H
/// where Y = U diag(sigma) V^H. Solves
///   argmin_X 0.5 ||Y - X||_F^2 + lambda * sum_i log(sigma_i(X) + epsilon).
QuaternionMatrix qlsvt(const QuaternionMatrix& y, const ShrinkParams& params);

}  // namespace quatcomp

#endif  // QUATCOMP_SHRINKAGE_HPP_
