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

// Factorized completion with a logarithmic-norm penalty on both factors:
//
//   min_{U,V} (lambda/2) (||U||_L + ||V||_L) + ||W (.) (U V^H - M)||_F^2
//
// solved by alternating accelerated proximal-gradient (FISTA) steps whose
// proximal map is the logarithmic singular value thresholding operator.

#ifndef QUATCOMP_QLNF_HPP_
#define QUATCOMP_QLNF_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>

#include "quatcomp/problem.hpp"
#include "quatcomp/quaternion_matrix.hpp"

namespace quatcomp {

struct QlnfConfig {
  std::size_t d = 10;          // factor width
  double lambda = 1.25e-5;
  double epsilon = 0.1;        // log-norm offset
  double mu_min = 0.005;       // floor of the step-size constant
  double tol = 1e-3;           // mean relative factor change
  std::size_t max_iter = 200;
  std::uint64_t seed = 0;      // recorded only; the solver draws no randoms

  /// Throws DomainError when a field is out of range for an M x N problem.
  void validate(std::size_t rows, std::size_t cols) const;
};

struct QlnfState {
  QuaternionMatrix u_prev, u_cur;  // M x d
  QuaternionMatrix v_prev, v_cur;  // N x d
  double t_prev = 1.0;
  double t_cur = 1.0;
  std::size_t iter = 0;

  /// Extrapolation weight (t_prev - 1) / t_cur of the current step.
  double omega() const { return (t_prev - 1.0) / t_cur; }
};

struct Momentum {
  double t = 1.0;
  double omega = 0.0;
};

/// t = (1 + sqrt(1 + 4 t_prev^2)) / 2, omega = (t_prev - 1) / t.
/// Throws DomainError for t_prev < 1.
Momentum fista_momentum(double t_prev);

struct FactorPair {
  QuaternionMatrix u;
  QuaternionMatrix v;
};

/// Balanced rank-d split of the observation: U = U_d S_d^{1/2},
/// V = V_d S_d^{1/2}, so U V^H is its best rank-d approximation.
FactorPair init_factors(const CompletionProblem& problem, std::size_t d);

/// One proximal-gradient step on U with V fixed at state.v_cur:
///   U^ = U + omega (U - U_prev)
///   G  = U^ - (1/mu) (W (.) (U^ V^H - M)) V,   mu = max(||V||_F^2, mu_min)
///   U+ = qlsvt(G, lambda / (2 mu), epsilon)
QuaternionMatrix update_factor_u(const QlnfState& state,
                                 const CompletionProblem& problem,
                                 const QlnfConfig& config);

/// Mirror of update_factor_u for V with U fixed at state.u_cur (already
/// advanced to the new iterate):
///   G = V^ - (1/mu) (W (.) (U V^^H - M))^H U,  mu = max(||U||_F^2, mu_min)
QuaternionMatrix update_factor_v(const QlnfState& state,
                                 const CompletionProblem& problem,
                                 const QlnfConfig& config);

struct QlnfResult {
  QuaternionMatrix x;  // U V^H
  FactorPair factors;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::kMaxIterations;
  double initial_residual = 0.0;  // observed misfit at the initial factors
  double final_residual = 0.0;
};

using QlnfObserver = std::function<void(const QlnfState&)>;

/// Runs the alternating FISTA iteration until the mean relative change of
/// the two factors drops to config.tol or max_iter is reached.
///
/// Throws DomainError for an invalid config and NumericalError (naming the
/// iteration) if an iterate becomes non-finite.
QlnfResult solve_qlnf(const CompletionProblem& problem,
                      const QlnfConfig& config,
                      const QlnfObserver& observer = {});

}  // namespace quatcomp

#endif  // QUATCOMP_QLNF_HPP_
