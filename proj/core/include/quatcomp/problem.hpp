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

#ifndef QUATCOMP_PROBLEM_HPP_
#define QUATCOMP_PROBLEM_HPP_

#include <string_view>

#include "quatcomp/quaternion_matrix.hpp"

namespace quatcomp {

/// Partially observed matrix. `observed` is zero wherever `mask` is 0.
class CompletionProblem {
 public:
  /// Zero-fills `data` outside the mask. Throws DimensionError on mismatch.
  CompletionProblem(const QuaternionMatrix& data, MaskMatrix mask);

  const QuaternionMatrix& observed() const { return observed_; }
  const MaskMatrix& mask() const { return mask_; }
  std::size_t rows() const { return observed_.rows(); }
  std::size_t cols() const { return observed_.cols(); }

 private:
  QuaternionMatrix observed_;
  MaskMatrix mask_;
};

enum class SolveStatus {
  kConverged,
  kMaxIterations,
  kEmptyMask,  // Nothing observed; the zero matrix is returned.
};

std::string_view to_string(SolveStatus status);

/// ||W (.) (X - M)||_F, the misfit on observed entries.
double observed_residual(const CompletionProblem& problem,
                         const QuaternionMatrix& x);

}  // namespace quatcomp

#endif  // QUATCOMP_PROBLEM_HPP_
