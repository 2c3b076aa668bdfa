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

#include "quatcomp/problem.hpp"

#include <utility>

namespace quatcomp {

CompletionProblem::CompletionProblem(const QuaternionMatrix& data,
                                     MaskMatrix mask)
    : observed_(hadamard_mask(mask, data)), mask_(std::move(mask)) {}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kConverged:
      return "converged";
    case SolveStatus::kMaxIterations:
      return "max_iter";
    case SolveStatus::kEmptyMask:
      return "empty_mask";
  }
  return "unknown";
}

double observed_residual(const CompletionProblem& problem,
                         const QuaternionMatrix& x) {
  return frobenius_norm(hadamard_mask(problem.mask(), x - problem.observed()));
}

}  // namespace quatcomp
