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

#ifndef QUATCOMP_QUATERNION_HPP_
#define QUATCOMP_QUATERNION_HPP_

#include <cmath>
#include <ostream>

namespace quatcomp {

/// A real quaternion a0 + a1 i + a2 j + a3 k in double precision.
///
/// Multiplication is the Hamilton product and is not commutative:
/// i*j = k but j*i = -k.
struct Quaternion {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w, double x, double y, double z)
      : a0(w), a1(x), a2(y), a3(z) {}
  constexpr explicit Quaternion(double real) : a0(real) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr bool is_pure() const { return a0 == 0.0; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    a0 += o.a0;
    a1 += o.a1;
    a2 += o.a2;
    a3 += o.a3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    a0 -= o.a0;
    a1 -= o.a1;
    a2 -= o.a2;
    a3 -= o.a3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    a0 *= s;
    a1 *= s;
    a2 *= s;
    a3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&,
                                   const Quaternion&) = default;
};

/// Hamilton product.
constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
          a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
          a.a0 * b.a2 - a.a1 * b.a3 + a.a2 * b.a0 + a.a3 * b.a1,
          a.a0 * b.a3 + a.a1 * b.a2 - a.a2 * b.a1 + a.a3 * b.a0};
}

constexpr Quaternion qconj(const Quaternion& a) {
  return {a.a0, -a.a1, -a.a2, -a.a3};
}

constexpr double qnorm2(const Quaternion& a) {
  return a.a0 * a.a0 + a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3;
}

inline double qmod(const Quaternion& a) { return std::sqrt(qnorm2(a)); }

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) {
  return a += b;
}
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) {
  return a -= b;
}
constexpr Quaternion operator-(const Quaternion& a) {
  return {-a.a0, -a.a1, -a.a2, -a.a3};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return qmul(a, b);
}
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << q.a0 << (q.a1 < 0 ? "" : "+") << q.a1 << "i"
            << (q.a2 < 0 ? "" : "+") << q.a2 << "j" << (q.a3 < 0 ? "" : "+")
            << q.a3 << "k";
}

}  // namespace quatcomp

#endif  // QUATCOMP_QUATERNION_HPP_
