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

// Quaternion SVD through the complex adjoint embedding, spectral maps, and
// the rank and singular-value norms.

#ifndef QUATCOMP_LINALG_HPP_
#define QUATCOMP_LINALG_HPP_

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "quatcomp/quaternion_matrix.hpp"

namespace quatcomp {

/// The 2M x 2N complex matrix [[A_p, A_q], [-conj(A_q), conj(A_p)]].
///
/// The map A -> A_c is an injective ring homomorphism: (AB)_c = A_c B_c and
/// (A^H)_c = (A_c)^H. Every singular value of A_c appears twice.
struct ComplexAdjoint {
  Eigen::MatrixXcd matrix;
};

ComplexAdjoint to_complex_adjoint(const QuaternionMatrix& a);

/// Inverse of to_complex_adjoint. Reads only the top block row; the bottom
/// row is assumed to carry the mirrored structure.
QuaternionMatrix from_complex_adjoint(const ComplexAdjoint& ac);

enum class SvdMode {
  kFull,  // U is M x M, V is N x N.
  kThin,  // U is M x k, V is N x k with k = min(M, N).
};

/// A = U diag(sigma) V^H with unitary (or semi-unitary, thin mode) U and V.
/// sigma has length min(M, N), sorted descending and nonnegative.
struct QsvdResult {
  QuaternionMatrix u;
  QuaternionMatrix v;
  std::vector<double> sigma;
};

/// Quaternion SVD. Computes the SVD of the complex adjoint and extracts every
/// other singular triplet. Singular subspaces that are degenerate (equal
/// singular values, including the null space) are re-orthonormalized in the
/// quaternion sense so that U and V stay unitary.
///
/// Throws NumericalError if the complex SVD fails or the input is not finite.
QsvdResult qsvd(const QuaternionMatrix& a, SvdMode mode = SvdMode::kFull);

/// Singular values only (cheaper than qsvd). Descending, length min(M, N).
std::vector<double> singular_values(const QuaternionMatrix& a);

/// U[:, :k] diag(sigma[:k]) V[:, :k]^H, skipping zero weights.
QuaternionMatrix reconstruct(const QuaternionMatrix& u,
                             std::span<const double> sigma,
                             const QuaternionMatrix& v);

/// U diag(f(sigma)) V^H for the thin SVD A = U diag(sigma) V^H.
///
/// Works directly on the quaternion matrix: Householder reflections reduce A
/// to a real bidiagonal matrix, whose SVD is taken in real arithmetic, and the
/// reflections are then applied to the weighted singular vectors. Only
/// columns with f(sigma) != 0 are formed, so strongly thresholding maps are
/// cheaper. f(0) must be 0.
///
/// Throws NumericalError if the input is not finite or the SVD fails.
QuaternionMatrix spectral_map(const QuaternionMatrix& a,
                              const std::function<double(double)>& f);

inline constexpr double kDefaultRankTol = 1e-10;

/// Number of singular values strictly above tol * sigma_max.
/// Throws DomainError for tol < 0.
std::size_t qrank(const QuaternionMatrix& a, double tol = kDefaultRankTol);

/// Parameters of the logarithmic norm sum_i log(sigma_i^p + epsilon).
struct LogNormParams {
  double p = 1.0;
  double epsilon = 0.1;
};

struct NuclearNorm {};
struct LogNorm {
  LogNormParams params;
};
/// Logarithmic norm over all but the r largest singular values.
struct TruncatedLogNorm {
  std::size_t r = 1;
  LogNormParams params;
};

using NormKind = std::variant<NuclearNorm, LogNorm, TruncatedLogNorm>;

/// Evaluates a singular-value norm. Singular values below 1e-14 sigma_max are
/// treated as exact zeros.
///
/// Throws DomainError for invalid p, epsilon, or r >= min(M, N).
double quat_norm(const QuaternionMatrix& a, const NormKind& kind);

/// Same as quat_norm but on a precomputed descending spectrum.
double spectrum_norm(std::span<const double> sigma, const NormKind& kind);

}  // namespace quatcomp

#endif  // QUATCOMP_LINALG_HPP_
