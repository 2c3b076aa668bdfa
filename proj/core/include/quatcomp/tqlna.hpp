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

// Two-step completion with the truncated logarithmic norm. The outer loop
// fixes the r leading singular directions (C, D) of the current estimate;
// the inner ADMM then solves
//
//   min_X lambda ||X||_L - Re tr(C X D^H)   s.t.  P_Omega(X) = P_Omega(M)
//
// through the split X = H.

#ifndef QUATCOMP_TQLNA_HPP_
#define QUATCOMP_TQLNA_HPP_

#include <cstddef>
#include <functional>

#include "quatcomp/problem.hpp"
#include "quatcomp/quaternion_matrix.hpp"

namespace quatcomp {

struct TqlnaConfig {
  std::size_t r = 1;          // number of leading singular values left free
  double lambda = 1e4;        // log-norm weight, in squared data units
  double epsilon = 0.1;
  double rho = 1.5;           // penalty growth factor
  double beta0 = 0.003;
  double beta_max = 1e7;
  double inner_tol = 1e-3;    // relative to ||M||_F
  double outer_tol = 1e-3;    // relative to ||M||_F
  std::size_t inner_max = 500;
  std::size_t outer_max = 3;

  /// Throws DomainError when a field is out of range for an M x N problem.
  void validate(std::size_t rows, std::size_t cols) const;
};

/// Rows of C (r x M) and D (r x N) are orthonormal: C C^H = D D^H = I_r.
struct TruncationPair {
  QuaternionMatrix c;
  QuaternionMatrix d;
};

/// C = U[:, :r]^H and D = V[:, :r]^H from the QSVD of X, so that
/// tr(C X D^H) = sigma_1 + ... + sigma_r.
/// Throws DomainError for r > min(M, N).
TruncationPair truncation_pair(const QuaternionMatrix& x, std::size_t r);

struct AdmmState {
  QuaternionMatrix x;  // primal iterate
  QuaternionMatrix h;  // split variable, equal to M on observed entries
  QuaternionMatrix y;  // multiplier
  double beta = 0.0;   // penalty used by the step that produced this state
  std::size_t tau = 0;
};

using AdmmObserver = std::function<void(const AdmmState&)>;

struct AdmmResult {
  QuaternionMatrix x;
  QuaternionMatrix h;
  QuaternionMatrix y;
  std::size_t iterations = 0;
  double beta = 0.0;  // penalty for the next step
  bool converged = false;
};

/// Inner ADMM, started from H = Y = X = x_init and beta = beta0. Each step:
///   X <- qlsvt(H - Y / beta, lambda / beta, epsilon)
///   H <- X + (C^H D + Y) / beta, then H := M on observed entries
///   Y <- Y + beta (X - H)
///   beta <- min(rho beta, beta_max)
/// until both ||X_{t+1} - X_t||_F and ||X_{t+1} - H_{t+1}||_F are at most
/// inner_tol ||M||_F, or inner_max steps.
///
/// Throws NumericalError (naming the step) if an iterate becomes non-finite.
AdmmResult admm_inner(const CompletionProblem& problem,
                      const TruncationPair& pair, const TqlnaConfig& config,
                      const QuaternionMatrix& x_init,
                      const AdmmObserver& observer = {});

struct TqlnaOuterInfo {
  std::size_t outer = 0;
  TruncationPair pair;
  QuaternionMatrix x_before;
  const AdmmResult* inner = nullptr;
};

using TqlnaObserver = std::function<void(const TqlnaOuterInfo&)>;

struct TqlnaResult {
  QuaternionMatrix x;
  std::size_t outer_iterations = 0;
  std::size_t inner_iterations = 0;  // summed over outer iterations
  SolveStatus status = SolveStatus::kMaxIterations;
};

/// Outer loop from X_1 = M: recompute the truncation pair, warm-start the
/// inner ADMM from the current X, stop when
/// ||X_{k+1} - X_k||_F <= outer_tol ||M||_F or after outer_max rounds.
TqlnaResult solve_tqlna(const CompletionProblem& problem,
                        const TqlnaConfig& config,
                        const TqlnaObserver& outer_observer = {},
                        const AdmmObserver& inner_observer = {});

}  // namespace quatcomp

#endif  // QUATCOMP_TQLNA_HPP_
