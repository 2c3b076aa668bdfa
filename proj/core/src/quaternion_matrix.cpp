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

#include "quatcomp/quaternion_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "quatcomp/error.hpp"

namespace quatcomp {

namespace {

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_shape(const char* op, std::size_t r1, std::size_t c1,
                        std::size_t r2, std::size_t c2) {
  if (r1 != r2 || c1 != c2) {
    throw DimensionError(std::string(op) + ": shape mismatch " + shape(r1, c1) +
                         " vs " + shape(r2, c2));
  }
}

}  // namespace

QuaternionMatrix::QuaternionMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QuaternionMatrix::QuaternionMatrix(std::size_t rows, std::size_t cols,
                                   std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("QuaternionMatrix: " + std::to_string(entries_.size()) +
                         " entries for shape " + shape(rows, cols));
  }
}

QuaternionMatrix QuaternionMatrix::identity(std::size_t n) {
  QuaternionMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion(1.0);
  return m;
}

QuaternionMatrix QuaternionMatrix::left_cols(std::size_t count) const {
  if (count > cols_) {
    throw DimensionError("left_cols: requested " + std::to_string(count) +
                         " of " + std::to_string(cols_) + " columns");
  }
  QuaternionMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                count,
                out.entries_.begin() + static_cast<std::ptrdiff_t>(r * count));
  }
  return out;
}

QuaternionMatrix QuaternionMatrix::scale_cols(
    std::span<const double> weights) const {
  if (weights.size() != cols_) {
    throw DimensionError("scale_cols: " + std::to_string(weights.size()) +
                         " weights for " + std::to_string(cols_) + " columns");
  }
  QuaternionMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) *= weights[c];
  }
  return out;
}

QuaternionMatrix& QuaternionMatrix::operator+=(const QuaternionMatrix& other) {
  require_same_shape("operator+", rows_, cols_, other.rows_, other.cols_);
  for (std::size_t n = 0; n < entries_.size(); ++n) entries_[n] += other.entries_[n];
  return *this;
}

QuaternionMatrix& QuaternionMatrix::operator-=(const QuaternionMatrix& other) {
  require_same_shape("operator-", rows_, cols_, other.rows_, other.cols_);
  for (std::size_t n = 0; n < entries_.size(); ++n) entries_[n] -= other.entries_[n];
  return *this;
}

QuaternionMatrix& QuaternionMatrix::operator*=(double s) {
  for (auto& q : entries_) q *= s;
  return *this;
}

QuaternionMatrix operator+(QuaternionMatrix a, const QuaternionMatrix& b) {
  return a += b;
}
QuaternionMatrix operator-(QuaternionMatrix a, const QuaternionMatrix& b) {
  return a -= b;
}
QuaternionMatrix operator*(double s, QuaternionMatrix a) { return a *= s; }
QuaternionMatrix operator*(QuaternionMatrix a, double s) { return a *= s; }

MaskMatrix::MaskMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

MaskMatrix::MaskMatrix(std::size_t rows, std::size_t cols,
                       std::vector<std::uint8_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("MaskMatrix: " + std::to_string(entries_.size()) +
                         " entries for shape " + shape(rows, cols));
  }
  for (auto v : entries_) {
    if (v > 1) throw DomainError("MaskMatrix: entries must be 0 or 1");
  }
}

MaskMatrix MaskMatrix::ones(std::size_t rows, std::size_t cols) {
  return MaskMatrix(rows, cols, std::vector<std::uint8_t>(rows * cols, 1));
}

std::size_t MaskMatrix::observed_count() const {
  return static_cast<std::size_t>(
      std::count(entries_.begin(), entries_.end(), std::uint8_t{1}));
}

double MaskMatrix::sampling_rate() const {
  if (entries_.empty()) return 0.0;
  return static_cast<double>(observed_count()) /
         static_cast<double>(entries_.size());
}

CayleyDickson to_cayley_dickson(const QuaternionMatrix& a) {
  const auto m = static_cast<Eigen::Index>(a.rows());
  const auto n = static_cast<Eigen::Index>(a.cols());
  CayleyDickson cd{Eigen::MatrixXcd(m, n), Eigen::MatrixXcd(m, n)};
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Quaternion& q = a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      cd.p(r, c) = {q.a0, q.a1};
      cd.q(r, c) = {q.a2, q.a3};
    }
  }
  return cd;
}

QuaternionMatrix from_cayley_dickson(const Eigen::MatrixXcd& p,
                                     const Eigen::MatrixXcd& q) {
  require_same_shape("from_cayley_dickson", static_cast<std::size_t>(p.rows()),
                     static_cast<std::size_t>(p.cols()),
                     static_cast<std::size_t>(q.rows()),
                     static_cast<std::size_t>(q.cols()));
  QuaternionMatrix out(static_cast<std::size_t>(p.rows()),
                       static_cast<std::size_t>(p.cols()));
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    for (Eigen::Index c = 0; c < p.cols(); ++c) {
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = {
          p(r, c).real(), p(r, c).imag(), q(r, c).real(), q(r, c).imag()};
    }
  }
  return out;
}

// (Ap + Aq j)(Bp + Bq j) = (Ap Bp - Aq conj(Bq)) + (Ap Bq + Aq conj(Bp)) j,
// using j z = conj(z) j for complex z.
QuaternionMatrix matmul(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions differ, " +
                         shape(a.rows(), a.cols()) + " * " +
                         shape(b.rows(), b.cols()));
  }
  if (a.rows() == 0 || b.cols() == 0) return QuaternionMatrix(a.rows(), b.cols());
  const CayleyDickson ca = to_cayley_dickson(a);
  const CayleyDickson cb = to_cayley_dickson(b);
  Eigen::MatrixXcd p = ca.p * cb.p;
  p.noalias() -= ca.q * cb.q.conjugate();
  Eigen::MatrixXcd q = ca.p * cb.q;
  q.noalias() += ca.q * cb.p.conjugate();
  return from_cayley_dickson(p, q);
}

QuaternionMatrix conj_transpose(const QuaternionMatrix& a) {
  QuaternionMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = qconj(a(r, c));
  }
  return out;
}

QuaternionMatrix hadamard_mask(const MaskMatrix& w, const QuaternionMatrix& a) {
  require_same_shape("hadamard_mask", w.rows(), w.cols(), a.rows(), a.cols());
  QuaternionMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (w.observed(r, c)) out(r, c) = a(r, c);
    }
  }
  return out;
}

double frobenius_norm_squared(const QuaternionMatrix& a) {
  double sum = 0.0;
  for (const auto& q : a.entries()) sum += qnorm2(q);
  return sum;
}

double frobenius_norm(const QuaternionMatrix& a) {
  return std::sqrt(frobenius_norm_squared(a));
}

bool all_finite(const QuaternionMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const Quaternion& q) {
                       return std::isfinite(q.a0) && std::isfinite(q.a1) &&
                              std::isfinite(q.a2) && std::isfinite(q.a3);
                     });
}

}  // namespace quatcomp
