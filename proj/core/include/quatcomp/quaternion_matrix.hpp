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

#ifndef QUATCOMP_QUATERNION_MATRIX_HPP_
#define QUATCOMP_QUATERNION_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "quatcomp/quaternion.hpp"

namespace quatcomp {

/// Dense M x N quaternion matrix stored row-major.
class QuaternionMatrix {
 public:
  QuaternionMatrix() = default;
  QuaternionMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionError unless entries.size() == rows * cols.
  QuaternionMatrix(std::size_t rows, std::size_t cols,
                   std::vector<Quaternion> entries);

  static QuaternionMatrix zeros(std::size_t rows, std::size_t cols) {
    return QuaternionMatrix(rows, cols);
  }
  static QuaternionMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const Quaternion& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Quaternion& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }

  std::span<const Quaternion> entries() const { return entries_; }
  std::span<Quaternion> entries() { return entries_; }

  /// First `count` columns as a new matrix.
  QuaternionMatrix left_cols(std::size_t count) const;

  /// Right-multiplies column c by the real weight weights[c].
  QuaternionMatrix scale_cols(std::span<const double> weights) const;

  QuaternionMatrix& operator+=(const QuaternionMatrix& other);
  QuaternionMatrix& operator-=(const QuaternionMatrix& other);
  QuaternionMatrix& operator*=(double s);

  friend bool operator==(const QuaternionMatrix&,
                         const QuaternionMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> entries_;
};

QuaternionMatrix operator+(QuaternionMatrix a, const QuaternionMatrix& b);
QuaternionMatrix operator-(QuaternionMatrix a, const QuaternionMatrix& b);
QuaternionMatrix operator*(double s, QuaternionMatrix a);
QuaternionMatrix operator*(QuaternionMatrix a, double s);

/// Binary observation mask W; 1 marks an observed entry.
class MaskMatrix {
 public:
  MaskMatrix() = default;
  /// All-zero mask.
  MaskMatrix(std::size_t rows, std::size_t cols);
  /// Throws DomainError if any entry is not 0 or 1, DimensionError on size.
  MaskMatrix(std::size_t rows, std::size_t cols,
             std::vector<std::uint8_t> entries);

  static MaskMatrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool observed(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c] != 0;
  }
  void set(std::size_t r, std::size_t c, bool value) {
    entries_[r * cols_ + c] = value ? 1 : 0;
  }
  std::span<const std::uint8_t> entries() const { return entries_; }

  std::size_t observed_count() const;
  double sampling_rate() const;

  friend bool operator==(const MaskMatrix&, const MaskMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> entries_;
};

/// C = A B with C_ij = sum_k A_ik B_kj (Hamilton products, order preserved).
/// Throws DimensionError when A.cols() != B.rows().
QuaternionMatrix matmul(const QuaternionMatrix& a, const QuaternionMatrix& b);

/// (A^H)_ij = conj(A_ji).
QuaternionMatrix conj_transpose(const QuaternionMatrix& a);

/// Zeroes the entries of A where W is 0.
QuaternionMatrix hadamard_mask(const MaskMatrix& w, const QuaternionMatrix& a);

double frobenius_norm(const QuaternionMatrix& a);
double frobenius_norm_squared(const QuaternionMatrix& a);

/// True when no component of any entry is NaN or infinite.
bool all_finite(const QuaternionMatrix& a);

/// Cayley-Dickson split A = A_p + A_q j with A_p = A0 + A1 i, A_q = A2 + A3 i.
struct CayleyDickson {
  Eigen::MatrixXcd p;
  Eigen::MatrixXcd q;
};

CayleyDickson to_cayley_dickson(const QuaternionMatrix& a);
QuaternionMatrix from_cayley_dickson(const Eigen::MatrixXcd& p,
                                     const Eigen::MatrixXcd& q);

}  // namespace quatcomp

#endif  // QUATCOMP_QUATERNION_MATRIX_HPP_
