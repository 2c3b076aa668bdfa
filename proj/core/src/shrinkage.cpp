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

#include "quatcomp/shrinkage.hpp"

#include <algorithm>
#include <cmath>

#include "quatcomp/error.hpp"
#include "quatcomp/linalg.hpp"

namespace quatcomp {

namespace {

void check_params(const ShrinkParams& params) {
  if (!(params.lambda >= 0.0)) throw DomainError("lsvt: lambda must be >= 0");
  if (!(params.epsilon > 0.0)) throw DomainError("lsvt: epsilon must be > 0");
}

double shrink(double x, double lambda, double eps) {
  if (lambda == 0.0) return x;
  const double delta = (x - eps) * (x - eps) - 4.0 * (lambda - x * eps);
  if (delta <= 0.0) return 0.0;
  const double root = 0.5 * (x - eps + std::sqrt(delta));
  if (root <= 0.0) return 0.0;
  const ShrinkParams p{lambda, eps};
  if (lsvt_objective(root, x, p) <= lsvt_objective(0.0, x, p)) {
    return std::min(root, x);
  }
  return 0.0;
}

}  // namespace

double lsvt_objective(double a, double x, const ShrinkParams& params) {
  return 0.5 * (a - x) * (a - x) + params.lambda * std::log(a + params.epsilon);
}

double lsvt_scalar(double x, const ShrinkParams& params) {
  check_params(params);
  if (!(x >= 0.0)) throw DomainError("lsvt: input must be >= 0");
  return shrink(x, params.lambda, params.epsilon);
}

QuaternionMatrix qlsvt(const QuaternionMatrix& y, const ShrinkParams& params) {
  check_params(params);
  return spectral_map(y, [&](double s) {
    return shrink(s, params.lambda, params.epsilon);
  });
}

}  // namespace quatcomp
