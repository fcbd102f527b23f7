#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <vector>

namespace halo {

using Pose = Eigen::Isometry3d;
using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

inline Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

/// Rodrigues exponential: axis-angle vector to rotation matrix.
inline Eigen::Matrix3d exp_so3(const Eigen::Vector3d& phi) {
  const double angle = phi.norm();
  if (angle < 1e-12) {
    return Eigen::Matrix3d::Identity() + skew(phi);
  }
  return Eigen::AngleAxisd(angle, phi / angle).toRotationMatrix();
}

/// Rotation-matrix logarithm: rotation to axis-angle vector.
inline Eigen::Vector3d log_so3(const Eigen::Matrix3d& r) {
  const Eigen::AngleAxisd aa(r);
  return aa.angle() * aa.axis();
}

/// Inverse of the right Jacobian of the SO(3) exponential at phi.
inline Eigen::Matrix3d right_jacobian_inv_so3(const Eigen::Vector3d& phi) {
  const double angle = phi.norm();
  const Eigen::Matrix3d w = skew(phi);
  if (angle < 1e-6) {
    return Eigen::Matrix3d::Identity() + 0.5 * w + w * w / 12.0;
  }
  const double c = 1.0 / (angle * angle) -
                   (1.0 + std::cos(angle)) / (2.0 * angle * std::sin(angle));
  return Eigen::Matrix3d::Identity() + 0.5 * w + c * w * w;
}

/// Absolute rotation angle in radians between two rotations.
inline double rotation_angle(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
  return std::abs(Eigen::AngleAxisd(a.transpose() * b).angle());
}

inline double rotation_angle(const Eigen::Matrix3d& r) {
  return std::abs(Eigen::AngleAxisd(r).angle());
}

inline Pose make_pose(const Eigen::Matrix3d& r, const Eigen::Vector3d& t) {
  Pose p = Pose::Identity();
  p.linear() = r;
  p.translation() = t;
  return p;
}

/// Projects a near-rotation onto SO(3) through quaternion normalization.
inline Eigen::Matrix3d orthonormalized(const Eigen::Matrix3d& r) {
  return Eigen::Quaterniond(r).normalized().toRotationMatrix();
}

inline bool is_rotation(const Eigen::Matrix3d& r, double tol = 1e-6) {
  return (r.transpose() * r - Eigen::Matrix3d::Identity()).norm() < tol &&
         r.determinant() > 0.0;
}

/// Mean of a set of rigid transforms: arithmetic translation mean and a
/// sign-aligned normalized quaternion mean. Adequate for the small spreads
/// seen when fusing redundant frame-to-frame estimates.
inline Pose average_poses(const std::vector<Pose>& poses) {
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
  Eigen::Vector4d q = Eigen::Vector4d::Zero();
  const Eigen::Quaterniond q0(poses.front().linear());
  for (const Pose& p : poses) {
    t += p.translation();
    Eigen::Quaterniond qi(p.linear());
    if (qi.coeffs().dot(q0.coeffs()) < 0.0) qi.coeffs() = -qi.coeffs();
    q += qi.coeffs();
  }
  t /= static_cast<double>(poses.size());
  Eigen::Quaterniond qm;
  qm.coeffs() = q.normalized();
  return make_pose(qm.toRotationMatrix(), t);
}

/// Axis-aligned rectangle in world meters.
struct Rect {
  Eigen::Vector2d min = Eigen::Vector2d::Zero();
  Eigen::Vector2d max = Eigen::Vector2d::Zero();

  double width() const { return max.x() - min.x(); }
  double height() const { return max.y() - min.y(); }
  Eigen::Vector2d center() const { return 0.5 * (min + max); }
  bool contains(const Eigen::Vector2d& p) const {
    return p.x() >= min.x() && p.x() <= max.x() && p.y() >= min.y() &&
           p.y() <= max.y();
  }
};

}  // namespace halo
