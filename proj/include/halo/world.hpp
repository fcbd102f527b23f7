#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "halo/geometry.hpp"
#include "halo/heightfield.hpp"
#include "halo/point_cloud.hpp"
#include "halo/random.hpp"

namespace halo {

/// Pinhole camera, nadir-mounted (optical axis straight down).
struct CameraModel {
  double fx = 32.0, fy = 32.0;
  double cx = 32.0, cy = 24.0;
  int width = 64, height = 48;

  /// Camera-frame ray through pixel (u, v), normalized to unit z so that the
  /// ray parameter equals depth along the optical axis.
  Eigen::Vector3d pixel_ray(double u, double v) const {
    return {(u - cx) / fx, (v - cy) / fy, 1.0};
  }

  /// Smaller half-extent of the ground footprint at the given height above
  /// ground; a point closer than this to the ground track is guaranteed seen.
  double footprint_half_width(double height_agl) const {
    const double hx = std::min(cx, width - 1 - cx) / fx;
    const double hy = std::min(cy, height - 1 - cy) / fy;
    return height_agl * std::min(hx, hy);
  }

  void validate() const;
};

/// Rotation of a straight-down camera: x stays east, optical z points down.
inline Eigen::Matrix3d nadir_rotation() {
  Eigen::Matrix3d r;
  r << 1, 0, 0, 0, -1, 0, 0, 0, -1;
  return r;
}

inline Pose nadir_pose(const Eigen::Vector3d& position) {
  return make_pose(nadir_rotation(), position);
}

struct NoiseSpec {
  double gps_sigma = 0.0;            // m, isotropic
  double depth_sigma_rel = 0.0;      // relative per-pixel depth noise
  double submap_scale_sigma = 0.0;   // lognormal sigma of the per-submap scale
  double submap_scale_median = 1.0;  // median of the per-submap scale draw
  double rel_rot_sigma = 0.0;        // rad, per-axis frame rotation noise
  double rel_trans_sigma_rel = 0.0;  // relative frame translation noise
  std::uint64_t seed = 0;

  void validate() const;
};

constexpr double kNoReturn = -1.0;

/// One nadir capture: noisy depth plus per-pixel semantic features.
struct SensorFrame {
  long id = 0;
  double time = 0.0;
  Pose true_pose = Pose::Identity();  // world <- camera
  Eigen::MatrixXd depth;              // (height, width); kNoReturn marks a miss
  Eigen::MatrixXi classes;            // (height, width); -1 where no return
  Eigen::MatrixXd features;           // d x (height*width), column-major pixels

  int pixel_index(int u, int v, int width) const { return v * width + u; }
};

/// Ground-truth environment: terrain, per-cell classes, a class feature
/// dictionary, and named goal sets.
struct SemanticWorld {
  Heightfield terrain;
  Eigen::MatrixXi labels;      // aligned with terrain.elevation
  Eigen::MatrixXd dictionary;  // d x num_classes, unit columns
  std::map<std::string, std::vector<Eigen::Vector2d>> goals;  // world meters

  int feature_dim() const { return static_cast<int>(dictionary.rows()); }
  int num_classes() const { return static_cast<int>(dictionary.cols()); }
  int class_at(int ix, int iy) const { return labels(ix, iy); }

  void validate() const;
};

/// Scalar stand-in for RGB: a stable value in [0,1) per class id.
inline double class_color(int class_id) {
  const double x = (class_id + 1) * 0.61803398874989484;
  return x - std::floor(x);
}

/// Batch output of the feed-forward reconstruction emulator. Poses and
/// clouds live in a local frame whose axes match the world but whose
/// translations carry an unknown scale.
struct SubmapPrediction {
  std::vector<long> frame_ids;     // batch order: overlap frames then new
  std::vector<Pose> frame_poses_local;
  std::vector<PointCloud> clouds_local;
  std::vector<long> overlap_ids;   // subset of frame_ids shared with previous batch
  std::vector<Pose> loop_poses_local;  // aligned with loop_anchors argument

  int size() const { return static_cast<int>(frame_ids.size()); }
  void validate() const;
};

/// Renders a nadir frame by ray-casting every pixel against the terrain.
/// Depth is range along the optical axis with relative Gaussian noise;
/// features come from the class dictionary at the hit cell.
SensorFrame render_frame(const SemanticWorld& world, const Pose& pose,
                         const CameraModel& camera, const NoiseSpec& noise,
                         Rng& rng);

/// Position-only GPS fix: truth plus isotropic Gaussian noise.
Eigen::Vector3d sample_gps(const Eigen::Vector3d& true_position,
                           const NoiseSpec& noise, Rng& rng);

/// Back-projects a frame's valid pixels into the camera frame, coloring each
/// point by its class scalar. `stride` subsamples pixels in both directions.
PointCloud back_project(const SensorFrame& frame, const CameraModel& camera,
                        int stride = 1);

/// Emulates the feed-forward 3D reconstruction front end over one batch:
/// draws a per-submap lognormal scale, divides all translations by it,
/// perturbs frame rotations/translations, and back-projects the (already
/// noisy) depth into the local frame at the same scale. `loop_anchors` are
/// true anchor poses of loop-closure candidates folded into the batch.
SubmapPrediction emulate_f3dr(const std::vector<SensorFrame>& frames,
                              const std::vector<SensorFrame>& overlap,
                              const CameraModel& camera, const NoiseSpec& noise,
                              Rng& rng, int cloud_stride = 1,
                              const std::vector<Pose>& loop_anchors = {});

}  // namespace halo
