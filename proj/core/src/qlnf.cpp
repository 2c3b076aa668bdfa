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

#include "quatcomp/qlnf.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "quatcomp/error.hpp"
#include "quatcomp/linalg.hpp"
#include "quatcomp/shrinkage.hpp"

namespace quatcomp {

namespace {

QuaternionMatrix extrapolate(const QuaternionMatrix& cur,
                             const QuaternionMatrix& prev, double omega) {
  if (omega == 0.0) return cur;
  return cur + omega * (cur - prev);
}

double relative_change(const QuaternionMatrix& next,
                       const QuaternionMatrix& cur) {
  const double diff = frobenius_norm(next - cur);
  const double base = frobenius_norm(cur);
  return base > 0.0 ? diff / base : diff;
}

void require_finite(const QuaternionMatrix& m, const char* what,
                    std::size_t iter) {
  if (!all_finite(m)) {
    throw NumericalError(std::string("solve_qlnf: non-finite ") + what +
                         " at iteration " + std::to_string(iter));
  }
}

}  // namespace

void QlnfConfig::validate(std::size_t rows, std::size_t cols) const {
  if (d < 1 || d > std::min(rows, cols)) {
    throw DomainError("qlnf: d = " + std::to_string(d) +
                      " must lie in [1, min(M, N) = " +
                      std::to_string(std::min(rows, cols)) + "]");
  }
  if (!(lambda > 0.0)) throw DomainError("qlnf: lambda must be > 0");
  if (!(epsilon > 0.0)) throw DomainError("qlnf: epsilon must be > 0");
  if (!(mu_min > 0.0)) throw DomainError("qlnf: mu_min must be > 0");
  if (!(tol > 0.0)) throw DomainError("qlnf: tol must be > 0");
}

Momentum fista_momentum(double t_prev) {
  if (!(t_prev >= 1.0)) throw DomainError("fista_momentum: t_prev must be >= 1");
  const double t = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_prev * t_prev));
  return {t, (t_prev - 1.0) / t};
}

FactorPair init_factors(const CompletionProblem& problem, std::size_t d) {
  const std::size_t k = std::min(problem.rows(), problem.cols());
  if (d < 1 || d > k) {
    throw DomainError("init_factors: d = " + std::to_string(d) +
                      " out of range [1, " + std::to_string(k) + "]");
  }
  const QsvdResult svd = qsvd(problem.observed(), SvdMode::kThin);
  std::vector<double> root(d);
  for (std::size_t i = 0; i < d; ++i) root[i] = std::sqrt(svd.sigma[i]);
  return {svd.u.left_cols(d).scale_cols(root),
          svd.v.left_cols(d).scale_cols(root)};
}

QuaternionMatrix update_factor_u(const QlnfState& state,
                                 const CompletionProblem& problem,
                                 const QlnfConfig& config) {
  const QuaternionMatrix& v = state.v_cur;
  const double mu = std::max(frobenius_norm_squared(v), config.mu_min);
  const QuaternionMatrix u_hat =
      extrapolate(state.u_cur, state.u_prev, state.omega());
  const QuaternionMatrix residual = hadamard_mask(
      problem.mask(), matmul(u_hat, conj_transpose(v)) - problem.observed());
  const QuaternionMatrix step = u_hat - (1.0 / mu) * matmul(residual, v);
  return qlsvt(step, {config.lambda / (2.0 * mu), config.epsilon});
}

QuaternionMatrix update_factor_v(const QlnfState& state,
                                 const CompletionProblem& problem,
                                 const QlnfConfig& config) {
  const QuaternionMatrix& u = state.u_cur;
  const double mu = std::max(frobenius_norm_squared(u), config.mu_min);
  const QuaternionMatrix v_hat =
      extrapolate(state.v_cur, state.v_prev, state.omega());
  const QuaternionMatrix residual = hadamard_mask(
      problem.mask(), matmul(u, conj_transpose(v_hat)) - problem.observed());
  const QuaternionMatrix step =
      v_hat - (1.0 / mu) * matmul(conj_transpose(residual), u);
  return qlsvt(step, {config.lambda / (2.0 * mu), config.epsilon});
}

QlnfResult solve_qlnf(const CompletionProblem& problem,
                      const QlnfConfig& config, const QlnfObserver& observer) {
  config.validate(problem.rows(), problem.cols());
  QlnfResult result;
  if (problem.mask().observed_count() == 0) {
    result.x = QuaternionMatrix(problem.rows(), problem.cols());
    result.factors = {QuaternionMatrix(problem.rows(), config.d),
                      QuaternionMatrix(problem.cols(), config.d)};
    result.status = SolveStatus::kEmptyMask;
    return result;
  }

  FactorPair init = init_factors(problem, config.d);
  QlnfState state;
  state.u_prev = init.u;
  state.u_cur = std::move(init.u);
  state.v_prev = init.v;
  state.v_cur = std::move(init.v);
  result.initial_residual = observed_residual(
      problem, matmul(state.u_cur, conj_transpose(state.v_cur)));

  while (state.iter < config.max_iter) {
    const Momentum m = fista_momentum(state.t_cur);
    state.t_prev = state.t_cur;
    state.t_cur = m.t;

    QuaternionMatrix u_next = update_factor_u(state, problem, config);
    require_finite(u_next, "U", state.iter + 1);
    const double du = relative_change(u_next, state.u_cur);
    state.u_prev = std::exchange(state.u_cur, std::move(u_next));

    QuaternionMatrix v_next = update_factor_v(state, problem, config);
    require_finite(v_next, "V", state.iter + 1);
    const double dv = relative_change(v_next, state.v_cur);
    state.v_prev = std::exchange(state.v_cur, std::move(v_next));

    ++state.iter;
    if (observer) observer(state);
    if (0.5 * (du + dv) <= config.tol) {
      result.status = SolveStatus::kConverged;
      break;
    }
  }

  result.iterations = state.iter;
  result.x = matmul(state.u_cur, conj_transpose(state.v_cur));
  result.final_residual = observed_residual(problem, result.x);
  result.factors = {std::move(state.u_cur), std::move(state.v_cur)};
  return result;
}

}  // namespace quatcomp
