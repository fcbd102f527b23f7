#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "halo/point_cloud.hpp"

namespace halo {

struct IcpConfig {
  int max_iter = 30;
  double max_corr_dist = 2.0;   // m, Euclidean correspondence gate
  double color_weight = 0.25;   // weight of squared color difference, m^2 units
  double translation_eps = 1e-7;
  double rotation_eps = 1e-7;
  int max_points = 2000;        // per-cloud deterministic subsample cap
};

struct IcpResult {
  Eigen::Isometry3d transform = Eigen::Isometry3d::Identity();  // target <- source
  double rmse = 0.0;     // inlier RMSE after the final iteration, m
  double fitness = 0.0;  // fraction of source points with a correspondence
  int iterations = 0;
};

/// Point-to-point ICP with color-augmented correspondence search: nearest
/// neighbors are found in (x, y, z, sqrt(color_weight)*color) space and gated
/// by Euclidean distance. Alignment per iteration is the closed-form rigid
/// fit of the matched pairs.
IcpResult icp_align(const PointCloud& source, const PointCloud& target,
                    const Eigen::Isometry3d& init, const IcpConfig& config);

/// Closed-form rigid fit mapping src columns onto dst columns (Kabsch).
Eigen::Isometry3d rigid_fit(const Eigen::Matrix3Xd& src,
                            const Eigen::Matrix3Xd& dst);

}  // namespace halo
