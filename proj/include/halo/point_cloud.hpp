#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <string>

namespace halo {

/// Dense point cloud with an optional per-point scalar color channel.
/// The scalar stands in for RGB when weighting ICP correspondences.
struct PointCloud {
  Eigen::Matrix3Xd points;
  Eigen::VectorXd color;  // size 0 (no color) or points.cols()

  int size() const { return static_cast<int>(points.cols()); }
  bool empty() const { return points.cols() == 0; }
  bool has_color() const { return color.size() == points.cols() && size() > 0; }
};

PointCloud transformed(const PointCloud& cloud, const Eigen::Isometry3d& pose);

void append(PointCloud& cloud, const PointCloud& other);

/// Deterministic stride subsample down to at most max_points.
PointCloud uniform_subsample(const PointCloud& cloud, int max_points);

PointCloud slice(const PointCloud& cloud, int begin, int end);

/// ASCII PLY with x/y/z and, when present, a scalar "intensity" property.
void write_ply(const std::string& path, const PointCloud& cloud);

}  // namespace halo
