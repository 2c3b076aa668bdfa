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

#include "quatcomp/tqlna.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "quatcomp/error.hpp"
#include "quatcomp/linalg.hpp"
#include "quatcomp/shrinkage.hpp"

namespace quatcomp {

void TqlnaConfig::validate(std::size_t rows, std::size_t cols) const {
  if (r > std::min(rows, cols)) {
    throw DomainError("tqlna: r = " + std::to_string(r) +
                      " exceeds min(M, N) = " +
                      std::to_string(std::min(rows, cols)));
  }
  if (!(lambda >= 0.0)) throw DomainError("tqlna: lambda must be >= 0");
  if (!(epsilon > 0.0)) throw DomainError("tqlna: epsilon must be > 0");
  if (!(rho > 1.0)) throw DomainError("tqlna: rho must be > 1");
  if (!(beta0 > 0.0 && beta0 <= beta_max)) {
    throw DomainError("tqlna: need 0 < beta0 <= beta_max");
  }
  if (!(inner_tol > 0.0 && outer_tol > 0.0)) {
    throw DomainError("tqlna: tolerances must be > 0");
  }
}

TruncationPair truncation_pair(const QuaternionMatrix& x, std::size_t r) {
  if (r > std::min(x.rows(), x.cols())) {
    throw DomainError("truncation_pair: r = " + std::to_string(r) +
                      " exceeds min(M, N)");
  }
  if (r == 0) return {QuaternionMatrix(0, x.rows()), QuaternionMatrix(0, x.cols())};
  const QsvdResult svd = qsvd(x, SvdMode::kThin);
  return {conj_transpose(svd.u.left_cols(r)), conj_transpose(svd.v.left_cols(r))};
}

AdmmResult admm_inner(const CompletionProblem& problem,
                      const TruncationPair& pair, const TqlnaConfig& config,
                      const QuaternionMatrix& x_init,
                      const AdmmObserver& observer) {
  const MaskMatrix& mask = problem.mask();
  const QuaternionMatrix& m = problem.observed();
  if (x_init.rows() != m.rows() || x_init.cols() != m.cols() ||
      pair.c.cols() != m.rows() || pair.d.cols() != m.cols() ||
      pair.c.rows() != pair.d.rows()) {
    throw DimensionError("admm_inner: problem, truncation pair and start "
                         "point have inconsistent shapes");
  }
  const QuaternionMatrix cd = matmul(conj_transpose(pair.c), pair.d);
  const double stop = config.inner_tol * frobenius_norm(m);

  AdmmState s{x_init, x_init, x_init, config.beta0, 0};
  AdmmResult out;
  while (s.tau < config.inner_max) {
    const double beta = s.beta;
    QuaternionMatrix x_next = qlsvt(s.h - (1.0 / beta) * s.y,
                                    {config.lambda / beta, config.epsilon});

    QuaternionMatrix h = x_next + (1.0 / beta) * (cd + s.y);
    for (std::size_t i = 0; i < h.rows(); ++i) {
      for (std::size_t j = 0; j < h.cols(); ++j) {
        if (mask.observed(i, j)) h(i, j) = m(i, j);
      }
    }
    s.y += beta * (x_next - h);
    s.h = std::move(h);

    const double change = frobenius_norm(x_next - s.x);
    const double primal = frobenius_norm(x_next - s.h);
    s.x = std::move(x_next);
    ++s.tau;
    if (!all_finite(s.x) || !all_finite(s.y)) {
      throw NumericalError("admm_inner: non-finite iterate at step " +
                           std::to_string(s.tau));
    }
    if (observer) observer(s);
    s.beta = std::min(config.rho * beta, config.beta_max);
    if (change <= stop && primal <= stop) {
      out.converged = true;
      break;
    }
  }
  out.iterations = s.tau;
  out.beta = s.beta;
  out.x = std::move(s.x);
  out.h = std::move(s.h);
  out.y = std::move(s.y);
  return out;
}

TqlnaResult solve_tqlna(const CompletionProblem& problem,
                        const TqlnaConfig& config,
                        const TqlnaObserver& outer_observer,
                        const AdmmObserver& inner_observer) {
  config.validate(problem.rows(), problem.cols());
  TqlnaResult result;
  if (problem.mask().observed_count() == 0) {
    result.x = QuaternionMatrix(problem.rows(), problem.cols());
    result.status = SolveStatus::kEmptyMask;
    return result;
  }
  const double scale = frobenius_norm(problem.observed());
  QuaternionMatrix x = problem.observed();
  while (result.outer_iterations < config.outer_max) {
    TruncationPair pair = truncation_pair(x, config.r);
    const AdmmResult inner = admm_inner(problem, pair, config, x, inner_observer);
    ++result.outer_iterations;
    result.inner_iterations += inner.iterations;
    const double change = frobenius_norm(inner.x - x);
    if (outer_observer) {
      outer_observer({result.outer_iterations, std::move(pair), x, &inner});
    }
    x = inner.x;
    if (change <= config.outer_tol * scale) {
      result.status = SolveStatus::kConverged;
      break;
    }
  }
  result.x = std::move(x);
  return result;
}

}  // namespace quatcomp
