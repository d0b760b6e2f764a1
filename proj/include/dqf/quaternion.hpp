#pragma once

#include <cmath>

namespace dqf {

// Quaternion over the reals, stored scalar-first (w, x, y, z).
// Plain value type; all operations are pure and allocation-free.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {w - o.w, x - o.x, y - o.y, z - o.z};
  }
  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  constexpr Quaternion operator*(double s) const {
    return {w * s, x * s, y * s, z * s};
  }

  // Hamilton product; i^2 = j^2 = k^2 = ijk = -1.
  constexpr Quaternion operator*(const Quaternion& q) const {
    return {w * q.w - x * q.x - y * q.y - z * q.z,
            w * q.x + x * q.w + y * q.z - z * q.y,
            w * q.y - x * q.z + y * q.w + z * q.x,
            w * q.z + x * q.y - y * q.x + z * q.w};
  }

  constexpr Quaternion conjugate() const { return {w, -x, -y, -z}; }

  constexpr double norm_squared() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_squared()); }

  // Largest absolute component, used for componentwise comparisons.
  double max_abs() const {
    double m = std::fabs(w);
    m = std::max(m, std::fabs(x));
    m = std::max(m, std::fabs(y));
    m = std::max(m, std::fabs(z));
    return m;
  }

  constexpr bool is_zero() const {
    return w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0;
  }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

// Euclidean inner product of the coefficient 4-vectors.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

// Dual number a + b*eps with eps != 0 and eps^2 = 0.
// Ordered lexicographically: standard part first, then dual part.
struct DualNumber {
  double std = 0.0;
  double dual = 0.0;

  constexpr DualNumber() = default;
  constexpr DualNumber(double s, double d) : std(s), dual(d) {}

  constexpr DualNumber operator+(const DualNumber& o) const {
    return {std + o.std, dual + o.dual};
  }
  constexpr DualNumber operator-(const DualNumber& o) const {
    return {std - o.std, dual - o.dual};
  }
  constexpr DualNumber operator*(const DualNumber& o) const {
    return {std * o.std, std * o.dual + dual * o.std};
  }

  friend constexpr bool operator<(const DualNumber& a, const DualNumber& b) {
    if (a.std != b.std) return a.std < b.std;
    return a.dual < b.dual;
  }
  friend constexpr bool operator>(const DualNumber& a, const DualNumber& b) { return b < a; }
  friend constexpr bool operator<=(const DualNumber& a, const DualNumber& b) { return !(b < a); }
  friend constexpr bool operator>=(const DualNumber& a, const DualNumber& b) { return !(a < b); }
  friend constexpr bool operator==(const DualNumber& a, const DualNumber& b) {
    return a.std == b.std && a.dual == b.dual;
  }
};

// Dual quaternion q_s + q_d*eps: a pair of quaternions under dual-number
// multiplication rules.
struct DualQuaternion {
  Quaternion std;
  Quaternion dual;

  constexpr DualQuaternion() = default;
  constexpr DualQuaternion(const Quaternion& s, const Quaternion& d)
      : std(s), dual(d) {}

  static constexpr DualQuaternion one() {
    return {Quaternion::identity(), Quaternion()};
  }

  constexpr DualQuaternion operator+(const DualQuaternion& o) const {
    return {std + o.std, dual + o.dual};
  }
  constexpr DualQuaternion operator-(const DualQuaternion& o) const {
    return {std - o.std, dual - o.dual};
  }
  constexpr DualQuaternion operator-() const { return {-std, -dual}; }

  constexpr DualQuaternion& operator+=(const DualQuaternion& o) {
    std += o.std;
    dual += o.dual;
    return *this;
  }

  constexpr DualQuaternion operator*(double s) const {
    return {std * s, dual * s};
  }

  // (a_s + a_d eps)(b_s + b_d eps) = a_s b_s + (a_s b_d + a_d b_s) eps.
  constexpr DualQuaternion operator*(const DualQuaternion& o) const {
    return {std * o.std, std * o.dual + dual * o.std};
  }

  constexpr DualQuaternion conjugate() const {
    return {std.conjugate(), dual.conjugate()};
  }

  constexpr bool is_zero() const { return std.is_zero() && dual.is_zero(); }

  double max_abs() const { return std::max(std.max_abs(), dual.max_abs()); }
};

constexpr DualQuaternion operator*(double s, const DualQuaternion& q) { return q * s; }

}  // namespace dqf
