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

#include "quatcomp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "quatcomp/error.hpp"

namespace quatcomp {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// Singular values closer than this (relative to sigma_max) share a subspace.
constexpr double kClusterRelTol = 1e-10;
// Singular values at or below this (relative to sigma_max) form the null space.
constexpr double kNullRelTol = 1e-13;
// Singular values below this (relative) are exact zeros for norm evaluation.
constexpr double kNormClampRelTol = 1e-14;

// A complex column w = [x; y] of the adjoint's singular basis represents the
// quaternion vector x - conj(y) j. Its partner [conj(y); -conj(x)] represents
// the same vector right-multiplied by j, so the two span one quaternion
// direction.
VectorXcd partner(const VectorXcd& w) {
  const Index n = w.size() / 2;
  VectorXcd out(w.size());
  out.head(n) = w.tail(n).conjugate();
  out.tail(n) = -w.head(n).conjugate();
  return out;
}

// Orthonormal complex basis closed under `partner`; its span is a quaternion
// subspace.
class QuaternionBasis {
 public:
  explicit QuaternionBasis(Index length) : length_(length) {}

  void add_direction(const VectorXcd& unit) {
    vectors_.push_back(unit);
    vectors_.push_back(partner(unit));
  }

  void project_out(VectorXcd& w) const {
    for (const auto& b : vectors_) w -= b * b.dot(w);
  }

  Index length() const { return length_; }

 private:
  Index length_;
  std::vector<VectorXcd> vectors_;
};

// Picks `count` quaternion-orthonormal directions from the span of
// `candidates` (complex columns), pivoting on the largest residual so
// degenerate subspaces yield a well-conditioned basis.
std::vector<VectorXcd> pivoted_directions(const MatrixXcd& candidates,
                                          Index count, QuaternionBasis& basis) {
  std::vector<VectorXcd> residuals;
  residuals.reserve(static_cast<std::size_t>(candidates.cols()));
  for (Index c = 0; c < candidates.cols(); ++c) {
    VectorXcd w = candidates.col(c);
    basis.project_out(w);
    residuals.push_back(std::move(w));
  }
  std::vector<VectorXcd> picked;
  std::vector<bool> used(residuals.size(), false);
  for (Index n = 0; n < count; ++n) {
    std::size_t best = residuals.size();
    double best_norm = -1.0;
    for (std::size_t c = 0; c < residuals.size(); ++c) {
      if (used[c]) continue;
      const double nrm = residuals[c].norm();
      if (nrm > best_norm) {
        best_norm = nrm;
        best = c;
      }
    }
    if (best == residuals.size() || best_norm < 1e-6) {
      throw NumericalError("qsvd: singular subspace lost rank during extraction");
    }
    used[best] = true;
    VectorXcd unit = residuals[best] / best_norm;
    const VectorXcd twin = partner(unit);
    basis.add_direction(unit);
    for (std::size_t c = 0; c < residuals.size(); ++c) {
      if (used[c]) continue;
      residuals[c] -= unit * unit.dot(residuals[c]);
      residuals[c] -= twin * twin.dot(residuals[c]);
    }
    picked.push_back(std::move(unit));
  }
  return picked;
}

// Writes the quaternion vector represented by complex column w into column
// `col` of the Cayley-Dickson pair (p, q).
void store_direction(const VectorXcd& w, Index col, MatrixXcd& p,
                     MatrixXcd& q) {
  const Index n = w.size() / 2;
  p.col(col) = w.head(n);
  q.col(col) = -w.tail(n).conjugate();
}

// Rows and columns of `a` holding at least one nonzero entry.
struct Support {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

Support nonzero_support(const QuaternionMatrix& a) {
  std::vector<bool> row_used(a.rows(), false);
  std::vector<bool> col_used(a.cols(), false);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) != Quaternion{}) row_used[r] = col_used[c] = true;
    }
  }
  Support s;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (row_used[r]) s.rows.push_back(r);
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (col_used[c]) s.cols.push_back(c);
  }
  return s;
}

QuaternionMatrix compact(const QuaternionMatrix& a, const Support& s) {
  QuaternionMatrix out(s.rows.size(), s.cols.size());
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    for (std::size_t c = 0; c < s.cols.size(); ++c) {
      out(r, c) = a(s.rows[r], s.cols[c]);
    }
  }
  return out;
}

// Places `basis` on the rows listed in `kept` and completes it with unit
// vectors on the remaining rows.
QuaternionMatrix embed_basis(const QuaternionMatrix& basis,
                             const std::vector<std::size_t>& kept,
                             std::size_t length) {
  QuaternionMatrix out(length, length);
  std::vector<bool> used(length, false);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    used[kept[r]] = true;
    for (std::size_t c = 0; c < basis.cols(); ++c) out(kept[r], c) = basis(r, c);
  }
  std::size_t col = basis.cols();
  for (std::size_t r = 0; r < length; ++r) {
    if (!used[r]) out(r, col++) = Quaternion{1.0, 0.0, 0.0, 0.0};
  }
  return out;
}

}  // namespace

ComplexAdjoint to_complex_adjoint(const QuaternionMatrix& a) {
  const CayleyDickson cd = to_cayley_dickson(a);
  const Index m = cd.p.rows();
  const Index n = cd.p.cols();
  ComplexAdjoint out{MatrixXcd(2 * m, 2 * n)};
  out.matrix.topLeftCorner(m, n) = cd.p;
  out.matrix.topRightCorner(m, n) = cd.q;
  out.matrix.bottomLeftCorner(m, n) = -cd.q.conjugate();
  out.matrix.bottomRightCorner(m, n) = cd.p.conjugate();
  return out;
}

QuaternionMatrix from_complex_adjoint(const ComplexAdjoint& ac) {
  if (ac.matrix.rows() % 2 != 0 || ac.matrix.cols() % 2 != 0) {
    throw DimensionError("from_complex_adjoint: odd embedding dimensions");
  }
  const Index m = ac.matrix.rows() / 2;
  const Index n = ac.matrix.cols() / 2;
  return from_cayley_dickson(ac.matrix.topLeftCorner(m, n),
                             ac.matrix.topRightCorner(m, n));
}

QsvdResult qsvd(const QuaternionMatrix& a, SvdMode mode) {
  if (!all_finite(a)) throw NumericalError("qsvd: input has NaN or Inf entries");
  const Index m = static_cast<Index>(a.rows());
  const Index n = static_cast<Index>(a.cols());
  const Index k = std::min(m, n);
  const bool full = mode == SvdMode::kFull;
  const Index qu = full ? m : k;
  const Index qv = full ? n : k;

  QsvdResult result;
  if (m == 0 || n == 0) {
    result.u = full ? QuaternionMatrix::identity(a.rows()) : QuaternionMatrix(a.rows(), 0);
    result.v = full ? QuaternionMatrix::identity(a.cols()) : QuaternionMatrix(a.cols(), 0);
    return result;
  }

  const Support support = nonzero_support(a);
  if (support.rows.size() < a.rows() || support.cols.size() < a.cols()) {
    result.sigma.assign(static_cast<std::size_t>(k), 0.0);
    if (support.rows.empty()) {
      result.u = QuaternionMatrix::identity(a.rows()).left_cols(static_cast<std::size_t>(qu));
      result.v = QuaternionMatrix::identity(a.cols()).left_cols(static_cast<std::size_t>(qv));
      return result;
    }
    const QsvdResult inner = qsvd(compact(a, support), SvdMode::kFull);
    std::copy(inner.sigma.begin(), inner.sigma.end(), result.sigma.begin());
    result.u = embed_basis(inner.u, support.rows, a.rows())
                   .left_cols(static_cast<std::size_t>(qu));
    result.v = embed_basis(inner.v, support.cols, a.cols())
                   .left_cols(static_cast<std::size_t>(qv));
    return result;
  }

  const ComplexAdjoint ac = to_complex_adjoint(a);
  const unsigned int options =
      full ? (Eigen::ComputeFullU | Eigen::ComputeFullV)
           : (Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::BDCSVD<MatrixXcd> svd(ac.matrix, options);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("qsvd: complex SVD of the " + std::to_string(2 * m) +
                         "x" + std::to_string(2 * n) +
                         " adjoint did not converge");
  }
  const Eigen::VectorXd& s = svd.singularValues();
  const MatrixXcd& uc = svd.matrixU();
  const MatrixXcd& vc = svd.matrixV();

  result.sigma.resize(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) result.sigma[static_cast<std::size_t>(i)] = s(2 * i);
  const double smax = result.sigma.front();
  const double null_tol = kNullRelTol * smax;
  const double cluster_tol = kClusterRelTol * smax;
  auto sigma_at = [&](Index i) {
    return i < k ? result.sigma[static_cast<std::size_t>(i)] : 0.0;
  };

  MatrixXcd up(m, qu), uq(m, qu), vp(n, qv), vq(n, qv);
  QuaternionBasis ubasis(2 * m);
  QuaternionBasis vbasis(2 * n);

  Index i = 0;
  while (i < k && sigma_at(i) > null_tol) {
    Index end = i + 1;
    while (end < k && sigma_at(end) > null_tol &&
           sigma_at(i) - sigma_at(end) <= cluster_tol) {
      ++end;
    }
    if (end == i + 1) {
      // Simple singular value: the odd-column pair is already consistent.
      const VectorXcd wu = uc.col(2 * i);
      const VectorXcd wv = vc.col(2 * i);
      store_direction(wu, i, up, uq);
      store_direction(wv, i, vp, vq);
      ubasis.add_direction(wu);
      vbasis.add_direction(wv);
    } else {
      // Degenerate cluster: orthonormalize U, then pair V through A^H u / s.
      const MatrixXcd cand = uc.middleCols(2 * i, 2 * (end - i));
      const auto dirs = pivoted_directions(cand, end - i, ubasis);
      for (Index c = 0; c < end - i; ++c) {
        const VectorXcd& wu = dirs[static_cast<std::size_t>(c)];
        VectorXcd wv = ac.matrix.adjoint() * wu / sigma_at(i + c);
        store_direction(wu, i + c, up, uq);
        store_direction(wv, i + c, vp, vq);
        vbasis.add_direction(wv / wv.norm());
      }
    }
    i = end;
  }

  // Null space (and any trailing columns of the full factors): the pairing
  // between U and V is immaterial, each side is completed independently.
  if (i < qu) {
    const MatrixXcd cand = uc.middleCols(2 * i, uc.cols() - 2 * i);
    const auto dirs = pivoted_directions(cand, qu - i, ubasis);
    for (Index c = 0; c < qu - i; ++c) {
      store_direction(dirs[static_cast<std::size_t>(c)], i + c, up, uq);
    }
  }
  if (i < qv) {
    const MatrixXcd cand = vc.middleCols(2 * i, vc.cols() - 2 * i);
    const auto dirs = pivoted_directions(cand, qv - i, vbasis);
    for (Index c = 0; c < qv - i; ++c) {
      store_direction(dirs[static_cast<std::size_t>(c)], i + c, vp, vq);
    }
  }

  result.u = from_cayley_dickson(up, uq);
  result.v = from_cayley_dickson(vp, vq);
  return result;
}

std::vector<double> singular_values(const QuaternionMatrix& a) {
  if (!all_finite(a)) {
    throw NumericalError("singular_values: input has NaN or Inf entries");
  }
  const std::size_t k = std::min(a.rows(), a.cols());
  if (k == 0) return {};
  const Support support = nonzero_support(a);
  if (support.rows.size() < a.rows() || support.cols.size() < a.cols()) {
    std::vector<double> sigma(k, 0.0);
    if (!support.rows.empty()) {
      const auto inner = singular_values(compact(a, support));
      std::copy(inner.begin(), inner.end(), sigma.begin());
    }
    return sigma;
  }
  const ComplexAdjoint ac = to_complex_adjoint(a);
  Eigen::BDCSVD<MatrixXcd> svd(ac.matrix);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("singular_values: complex SVD did not converge");
  }
  std::vector<double> sigma(k);
  for (std::size_t i = 0; i < k; ++i) {
    sigma[i] = svd.singularValues()(static_cast<Index>(2 * i));
  }
  return sigma;
}

QuaternionMatrix reconstruct(const QuaternionMatrix& u,
                             std::span<const double> sigma,
                             const QuaternionMatrix& v) {
  if (sigma.size() > u.cols() || sigma.size() > v.cols()) {
    throw DimensionError("reconstruct: more weights than factor columns");
  }
  std::size_t active = sigma.size();
  while (active > 0 && sigma[active - 1] == 0.0) --active;
  if (active == 0) return QuaternionMatrix(u.rows(), v.rows());
  const QuaternionMatrix left = u.left_cols(active).scale_cols(sigma.first(active));
  return matmul(left, conj_transpose(v.left_cols(active)));
}

std::size_t qrank(const QuaternionMatrix& a, double tol) {
  if (!(tol >= 0.0)) throw DomainError("qrank: tolerance must be nonnegative");
  const auto sigma = singular_values(a);
  if (sigma.empty() || sigma.front() == 0.0) return 0;
  const double cut = tol * sigma.front();
  return static_cast<std::size_t>(
      std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > cut; }));
}

namespace {

void check_log_params(const LogNormParams& params) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw DomainError("log norm: p must lie in [0, 1]");
  }
  if (!(params.epsilon > 0.0)) {
    throw DomainError("log norm: epsilon must be positive");
  }
}

double log_sum(std::span<const double> sigma, std::size_t from,
               const LogNormParams& params, double clamp) {
  double total = 0.0;
  for (std::size_t i = from; i < sigma.size(); ++i) {
    const double s = sigma[i] < clamp ? 0.0 : sigma[i];
    total += std::log(std::pow(s, params.p) + params.epsilon);
  }
  return total;
}

}  // namespace

double spectrum_norm(std::span<const double> sigma, const NormKind& kind) {
  const double clamp = sigma.empty() ? 0.0 : kNormClampRelTol * sigma.front();
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, NuclearNorm>) {
          double total = 0.0;
          for (double s : sigma) total += s < clamp ? 0.0 : s;
          return total;
        } else if constexpr (std::is_same_v<K, LogNorm>) {
          check_log_params(k.params);
          return log_sum(sigma, 0, k.params, clamp);
        } else {
          check_log_params(k.params);
          if (k.r >= sigma.size()) {
            throw DomainError("truncated log norm: r = " + std::to_string(k.r) +
                              " must be below min(M, N) = " +
                              std::to_string(sigma.size()));
          }
          return log_sum(sigma, k.r, k.params, clamp);
        }
      },
      kind);
}

double quat_norm(const QuaternionMatrix& a, const NormKind& kind) {
  return spectrum_norm(singular_values(a), kind);
}

}  // namespace quatcomp
