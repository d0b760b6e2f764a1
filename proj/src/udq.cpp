#include "dqf/udq.hpp"

#include <cassert>
#include <cmath>

namespace dqf {

bool is_unit(const DualQuaternion& q, double tol) {
  if (std::fabs(q.std.norm() - 1.0) > tol) return false;
  const Quaternion ortho =
      q.std.conjugate() * q.dual + q.dual.conjugate() * q.std;
  return ortho.max_abs() <= tol;
}

UnitDualQuaternion UnitDualQuaternion::checked(const DualQuaternion& q, double tol) {
  if (!is_unit(q, tol)) {
    throw NonUnitError("UnitDualQuaternion: value is not on the unit manifold");
  }
  return UnitDualQuaternion(q, Trusted{});
}

UnitDualQuaternion make_pose(const Quaternion& attitude,
                             const std::array<double, 3>& position) {
  if (std::fabs(attitude.norm() - 1.0) > kUnitTol) {
    throw NonUnitError("make_pose: attitude quaternion is not unit");
  }
  const Quaternion pw{0.0, position[0], position[1], position[2]};
  return UnitDualQuaternion({attitude, (pw * attitude) * 0.5},
                            UnitDualQuaternion::Trusted{});
}

Pose pose_parts(const UnitDualQuaternion& q) {
  const Quaternion pw = (q.dual_part() * q.std_part().conjugate()) * 2.0;
  assert(std::fabs(pw.w) <= 1e-9);  // scalar part vanishes for unit input
  return Pose{q.std_part(), {pw.x, pw.y, pw.z}};
}

UnitDualQuaternion project_udq(const DualQuaternion& x) {
  const double ns = x.std.norm();
  if (ns > kDegenerateTol) {
    // s^* d + d^* s is the real scalar 2<s,d>.
    const double sd = 2.0 * dot(x.std, x.dual);
    const Quaternion s = x.std * (1.0 / ns);
    const Quaternion d = x.dual * (1.0 / ns) - x.std * (sd / (2.0 * ns * ns * ns));
    return UnitDualQuaternion({s, d}, UnitDualQuaternion::Trusted{});
  }
  const double nd = x.dual.norm();
  if (nd > kDegenerateTol) {
    return UnitDualQuaternion({Quaternion(), x.dual * (1.0 / nd)},
                              UnitDualQuaternion::Trusted{});
  }
  return UnitDualQuaternion();
}

UnitDualQuaternion random_udq(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Quaternion q;
  double n = 0.0;
  do {
    q = Quaternion{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    n = q.norm();
  } while (n < 1e-6);
  const std::array<double, 3> p{gauss(rng), gauss(rng), gauss(rng)};
  return make_pose(q * (1.0 / n), p);
}

UnitDualQuaternion random_udq(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_udq(rng);
}

DualNumber dq_vec_norm(std::span<const DualQuaternion> v) {
  double ss = 0.0;
  double dd = 0.0;
  for (const DualQuaternion& q : v) {
    ss += q.std.norm_squared();
    dd += q.dual.norm_squared();
  }
  const double ns = std::sqrt(ss);
  if (ns <= kDegenerateTol) {
    return {0.0, std::sqrt(dd)};
  }
  Quaternion num;
  for (const DualQuaternion& q : v) {
    num += q.std.conjugate() * q.dual + q.dual.conjugate() * q.std;
  }
#ifndef NDEBUG
  const double imag =
      std::max(std::fabs(num.x), std::max(std::fabs(num.y), std::fabs(num.z)));
  assert(imag < 1e-10 * std::max(1.0, ns * std::sqrt(dd)));
#endif
  return {ns, num.w / ns};
}

double norm_2R(std::span<const DualQuaternion> v) {
  double acc = 0.0;
  for (const DualQuaternion& q : v) {
    acc += q.std.norm_squared() + q.dual.norm_squared();
  }
  return std::sqrt(acc);
}

double norm_2R(const DualQuaternion& q) {
  return std::sqrt(q.std.norm_squared() + q.dual.norm_squared());
}

std::vector<DualQuaternion> to_values(std::span<const UnitDualQuaternion> v) {
  std::vector<DualQuaternion> out;
  out.reserve(v.size());
  for (const UnitDualQuaternion& q : v) out.push_back(q.value());
  return out;
}

}  // namespace dqf
