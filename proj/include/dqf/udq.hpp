#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "dqf/errors.hpp"
#include "dqf/quaternion.hpp"

namespace dqf {

// Membership tolerance for the unit dual quaternion manifold. Sized for
// double-precision accumulation over ~1e3 iterations.
inline constexpr double kUnitTol = 1e-9;

// Magnitudes below this count as zero in degenerate branch tests; iterates
// approach but never hit exact zeros, so bitwise tests would be wrong.
inline constexpr double kDegenerateTol = 1e-12;

// |q_s| = 1 and q_s^* q_d + q_d^* q_s = 0, both within tol (componentwise).
bool is_unit(const DualQuaternion& q, double tol = kUnitTol);

class UnitDualQuaternion;
UnitDualQuaternion make_pose(const Quaternion& attitude,
                             const std::array<double, 3>& position);
UnitDualQuaternion project_udq(const DualQuaternion& x);
UnitDualQuaternion random_udq(std::mt19937_64& rng);

// A dual quaternion restricted to the unit manifold; encodes one rigid-body
// pose. Closed under multiplication and conjugation. Construct through
// checked() (validating) or through make_pose / project_udq / random_udq.
class UnitDualQuaternion {
 public:
  UnitDualQuaternion() : value_(DualQuaternion::one()) {}

  // Throws NonUnitError when q is not unit within tol.
  static UnitDualQuaternion checked(const DualQuaternion& q, double tol = kUnitTol);

  const DualQuaternion& value() const { return value_; }
  const Quaternion& std_part() const { return value_.std; }
  const Quaternion& dual_part() const { return value_.dual; }

  UnitDualQuaternion conjugate() const {
    return UnitDualQuaternion(value_.conjugate(), Trusted{});
  }
  UnitDualQuaternion operator*(const UnitDualQuaternion& o) const {
    return UnitDualQuaternion(value_ * o.value_, Trusted{});
  }

 private:
  struct Trusted {};
  UnitDualQuaternion(const DualQuaternion& q, Trusted) : value_(q) {}

  DualQuaternion value_;

  friend UnitDualQuaternion make_pose(const Quaternion&,
                                      const std::array<double, 3>&);
  friend UnitDualQuaternion project_udq(const DualQuaternion&);
  friend UnitDualQuaternion random_udq(std::mt19937_64&);
};

// Rotation + world-frame translation view of a pose.
struct Pose {
  Quaternion attitude;              // unit
  std::array<double, 3> position{};  // world frame
};

// q_hat = q_s + 1/2 p^w q_s eps with p^w the pure quaternion [0, position].
// Throws NonUnitError when |attitude| deviates from 1 beyond kUnitTol.
UnitDualQuaternion make_pose(const Quaternion& attitude,
                             const std::array<double, 3>& position);

// Inverse of make_pose: attitude = q_s, position from p^w = 2 q_d q_s^*.
Pose pose_parts(const UnitDualQuaternion& q);

// Elementwise projection onto the unit dual quaternion set. Total on all
// dual quaternions; inputs with vanishing standard part map to the
// pure-dual direction x_d/|x_d| eps, and zero maps to 1.
UnitDualQuaternion project_udq(const DualQuaternion& x);

// Uniformly random rotation (normalized 4-D Gaussian) composed with a
// standard Gaussian translation. Deterministic for a given engine state.
UnitDualQuaternion random_udq(std::mt19937_64& rng);
UnitDualQuaternion random_udq(std::uint64_t seed);

// 2-norm of a dual quaternion vector as a dual number:
//   ||x_d|| eps                                  if x_s = 0,
//   ||x_s|| + Re(x_s^* x_d + x_d^* x_s)/||x_s|| eps  otherwise.
// The dual numerator is real analytically; debug builds assert that its
// imaginary residue is negligible.
DualNumber dq_vec_norm(std::span<const DualQuaternion> v);

// sqrt(||v_s||^2 + ||v_d||^2) with each part read as a 4n real vector.
double norm_2R(std::span<const DualQuaternion> v);
double norm_2R(const DualQuaternion& q);

// Strips the unit wrapper from a pose vector.
std::vector<DualQuaternion> to_values(std::span<const UnitDualQuaternion> v);

}  // namespace dqf
