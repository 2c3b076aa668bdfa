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

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/SVD>

#include "quatcomp/error.hpp"
#include "quatcomp/linalg.hpp"

// Quaternions are held as Cayley-Dickson pairs (p, q) with x = p + q j, and a
// quaternion matrix as one complex matrix whose column 2j is P_j and column
// 2j + 1 is Q_j. Products follow (a b)_p = a_p b_p - a_q conj(b_q) and
// (a b)_q = a_p b_q + a_q conj(b_p).

namespace quatcomp {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Complex = std::complex<double>;

struct Pair {
  Complex p;
  Complex q;
};

Pair mul(Pair a, Pair b) {
  return {a.p * b.p - a.q * std::conj(b.q), a.p * b.q + a.q * std::conj(b.p)};
}

Pair conj(Pair a) { return {std::conj(a.p), -a.q}; }

double modulus(Pair a) { return std::sqrt(std::norm(a.p) + std::norm(a.q)); }

// I - beta w w^H. A zero beta is the identity.
struct Reflector {
  VectorXcd wp;
  VectorXcd wq;
  double beta = 0.0;
};

// Builds the reflector mapping x to -s |x| e_1 with s = x_1 / |x_1| and
// returns -s |x|.
Pair make_reflector(VectorXcd xp, VectorXcd xq, Reflector& h) {
  const double norm = std::sqrt(xp.squaredNorm() + xq.squaredNorm());
  h.wp = std::move(xp);
  h.wq = std::move(xq);
  if (norm == 0.0) {
    h.beta = 0.0;
    return {0.0, 0.0};
  }
  const double head = modulus({h.wp(0), h.wq(0)});
  Pair s{1.0, 0.0};
  if (head > 0.0) s = {h.wp(0) / head, h.wq(0) / head};
  h.wp(0) += s.p * norm;
  h.wq(0) += s.q * norm;
  h.beta = 1.0 / (norm * norm + norm * head);
  return {-s.p * norm, -s.q * norm};
}

// X <- H X on rows [r0, r0 + len(w)) and quaternion columns [c0, c1).
void apply_left(const Reflector& h, MatrixXcd& x, Index r0, Index c0, Index c1) {
  if (h.beta == 0.0) return;
  const Index len = h.wp.size();
  for (Index j = c0; j < c1; ++j) {
    auto p = x.col(2 * j).segment(r0, len);
    auto q = x.col(2 * j + 1).segment(r0, len);
    const Complex zp = h.beta * (h.wp.dot(p) + std::conj(h.wq.dot(q)));
    const Complex zq = h.beta * (h.wp.dot(q) - std::conj(h.wq.dot(p)));
    p -= h.wp * zp - h.wq * std::conj(zq);
    q -= h.wp * zq + h.wq * std::conj(zp);
  }
}

// X <- X H on rows [r0, r1) and quaternion columns [c0, c0 + len(w)).
void apply_right(const Reflector& h, MatrixXcd& x, Index r0, Index r1, Index c0) {
  if (h.beta == 0.0 || r1 <= r0) return;
  const Index len = h.wp.size();
  const Index rows = r1 - r0;
  VectorXcd yp = VectorXcd::Zero(rows);
  VectorXcd yq = VectorXcd::Zero(rows);
  for (Index j = 0; j < len; ++j) {
    const auto p = x.col(2 * (c0 + j)).segment(r0, rows);
    const auto q = x.col(2 * (c0 + j) + 1).segment(r0, rows);
    yp += p * h.wp(j) - q * std::conj(h.wq(j));
    yq += p * h.wq(j) + q * std::conj(h.wp(j));
  }
  yp *= h.beta;
  yq *= h.beta;
  for (Index j = 0; j < len; ++j) {
    auto p = x.col(2 * (c0 + j)).segment(r0, rows);
    auto q = x.col(2 * (c0 + j) + 1).segment(r0, rows);
    p -= yp * std::conj(h.wp(j)) + yq * std::conj(h.wq(j));
    q -= yq * h.wp(j) - yp * h.wq(j);
  }
}

// Tall case (rows >= cols).
QuaternionMatrix spectral_map_tall(const QuaternionMatrix& a,
                                   const std::function<double(double)>& f) {
  const auto m = static_cast<Index>(a.rows());
  const auto n = static_cast<Index>(a.cols());
  MatrixXcd x(m, 2 * n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Quaternion& e = a(i, j);
      x(i, 2 * j) = {e.a0, e.a1};
      x(i, 2 * j + 1) = {e.a2, e.a3};
    }
  }

  std::vector<Reflector> left(n);
  std::vector<Reflector> right(n > 1 ? n - 1 : 0);
  std::vector<Pair> diag(n);
  std::vector<Pair> super(n, Pair{0.0, 0.0});
  for (Index k = 0; k < n; ++k) {
    diag[k] = make_reflector(x.col(2 * k).tail(m - k), x.col(2 * k + 1).tail(m - k),
                             left[k]);
    apply_left(left[k], x, k, k + 1, n);
    if (k + 1 < n) {
      // The row is reflected through its conjugate transpose.
      const Index len = n - k - 1;
      VectorXcd xp(len);
      VectorXcd xq(len);
      for (Index j = 0; j < len; ++j) {
        xp(j) = std::conj(x(k, 2 * (k + 1 + j)));
        xq(j) = -x(k, 2 * (k + 1 + j) + 1);
      }
      super[k] = conj(make_reflector(std::move(xp), std::move(xq), right[k]));
      apply_right(right[k], x, k + 1, m, k + 1);
    }
  }

  // Unit scalings u, v with conj(u_k) B_kk v_k and conj(u_k) B_k,k+1 v_k+1
  // real and nonnegative.
  std::vector<Pair> u(n);
  std::vector<Pair> v(n, Pair{1.0, 0.0});
  MatrixXd real = MatrixXd::Zero(n, n);
  for (Index k = 0; k < n; ++k) {
    const Pair g = mul(diag[k], v[k]);
    const double gn = modulus(g);
    u[k] = gn > 0.0 ? Pair{g.p / gn, g.q / gn} : Pair{1.0, 0.0};
    real(k, k) = gn;
    if (k + 1 < n) {
      const Pair h = mul(conj(u[k]), super[k]);
      const double hn = modulus(h);
      v[k + 1] = hn > 0.0 ? Pair{std::conj(h.p) / hn, -h.q / hn} : Pair{1.0, 0.0};
      real(k, k + 1) = hn;
    }
  }

  Eigen::BDCSVD<MatrixXd> svd(real, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("spectral_map: bidiagonal SVD did not converge");
  }
  const Eigen::VectorXd& sigma = svd.singularValues();
  Eigen::VectorXd weights(n);
  Index kept = 0;
  for (Index i = 0; i < n; ++i) {
    weights(i) = f(sigma(i));
    if (weights(i) != 0.0) kept = i + 1;
  }
  if (kept == 0) return QuaternionMatrix(a.rows(), a.cols());

  const MatrixXd us = svd.matrixU().leftCols(kept) * weights.head(kept).asDiagonal();
  const MatrixXd vs = svd.matrixV().leftCols(kept);
  MatrixXcd lf = MatrixXcd::Zero(m, 2 * kept);
  MatrixXcd rf(n, 2 * kept);
  for (Index j = 0; j < kept; ++j) {
    for (Index i = 0; i < n; ++i) {
      lf(i, 2 * j) = u[i].p * us(i, j);
      lf(i, 2 * j + 1) = u[i].q * us(i, j);
      rf(i, 2 * j) = v[i].p * vs(i, j);
      rf(i, 2 * j + 1) = v[i].q * vs(i, j);
    }
  }
  for (Index k = n - 1; k >= 0; --k) apply_left(left[k], lf, k, 0, kept);
  for (Index k = n - 2; k >= 0; --k) apply_left(right[k], rf, k + 1, 0, kept);

  // X = L R^H with L = Lp + Lq j and R^H = conj(Rp)^T - Rq^T j.
  MatrixXcd lp(m, kept), lq(m, kept), rp(n, kept), rq(n, kept);
  for (Index j = 0; j < kept; ++j) {
    lp.col(j) = lf.col(2 * j);
    lq.col(j) = lf.col(2 * j + 1);
    rp.col(j) = rf.col(2 * j);
    rq.col(j) = rf.col(2 * j + 1);
  }
  MatrixXcd xp = lp * rp.adjoint();
  xp.noalias() += lq * rq.adjoint();
  MatrixXcd xq = lq * rp.transpose();
  xq.noalias() -= lp * rq.transpose();
  return from_cayley_dickson(xp, xq);
}

}  // namespace

QuaternionMatrix spectral_map(const QuaternionMatrix& a,
                              const std::function<double(double)>& f) {
  if (!all_finite(a)) throw NumericalError("spectral_map: input is not finite");
  if (a.size() == 0) return a;
  if (a.rows() >= a.cols()) return spectral_map_tall(a, f);
  return conj_transpose(spectral_map_tall(conj_transpose(a), f));
}

}  // namespace quatcomp
