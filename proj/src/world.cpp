#include "halo/world.hpp"

#include <cmath>

#include "halo/errors.hpp"

namespace halo {

void CameraModel::validate() const {
  if (fx <= 0.0 || fy <= 0.0) throw BadConfig("focal lengths must be > 0");
  if (width < 1 || height < 1) throw BadConfig("image size must be >= 1x1");
  if (cx < 0.0 || cx >= width || cy < 0.0 || cy >= height) {
    throw BadConfig("principal point must lie inside the image");
  }
}

void NoiseSpec::validate() const {
  if (gps_sigma < 0.0 || depth_sigma_rel < 0.0 || submap_scale_sigma < 0.0 ||
      rel_rot_sigma < 0.0 || rel_trans_sigma_rel < 0.0) {
    throw BadConfig("noise sigmas must be >= 0");
  }
  if (submap_scale_median <= 0.0) throw BadConfig("scale median must be > 0");
}

void SemanticWorld::validate() const {
  terrain.validate();
  if (labels.rows() != terrain.elevation.rows() ||
      labels.cols() != terrain.elevation.cols()) {
    throw BadConfig("labels must match terrain shape");
  }
  if (feature_dim() < 2) throw BadConfig("feature dimension must be >= 2");
  for (int c = 0; c < num_classes(); ++c) {
    if (std::abs(dictionary.col(c).norm() - 1.0) > 1e-9) {
      throw BadConfig("dictionary vectors must be unit norm");
    }
  }
  if (labels.size() > 0 &&
      (labels.minCoeff() < 0 || labels.maxCoeff() >= num_classes())) {
    throw BadConfig("labels reference classes outside the dictionary");
  }
  for (const auto& [task, cells] : goals) {
    for (const Eigen::Vector2d& g : cells) {
      if (!terrain.contains(g)) {
        throw BadConfig("goal for task '" + task + "' outside terrain bounds");
      }
    }
  }
}

void SubmapPrediction::validate() const {
  if (size() < 2) throw TooFewFrames("submap needs at least 2 frames");
  if (frame_poses_local.size() != frame_ids.size() ||
      clouds_local.size() != frame_ids.size()) {
    throw BadConfig("submap prediction arrays must be index-aligned");
  }
}

SensorFrame render_frame(const SemanticWorld& world, const Pose& pose,
                         const CameraModel& camera, const NoiseSpec& noise,
                         Rng& rng) {
  camera.validate();
  if (!is_rotation(pose.linear())) {
    throw BadConfig("render_frame: pose rotation is not orthonormal");
  }
  const Eigen::Vector3d origin = pose.translation();
  const Eigen::Vector2d o_xy = origin.head<2>();
  if (world.terrain.contains(o_xy)) {
    const Eigen::Vector2i c = world.terrain.cell_at(o_xy);
    if (origin.z() <= world.terrain.elevation(c.x(), c.y())) {
      throw PoseBelowTerrain("camera at or below terrain elevation");
    }
  }

  SensorFrame frame;
  frame.true_pose = pose;
  frame.depth.setConstant(camera.height, camera.width, kNoReturn);
  frame.classes.setConstant(camera.height, camera.width, -1);
  frame.features.setZero(world.feature_dim(), camera.height * camera.width);

  for (int v = 0; v < camera.height; ++v) {
    for (int u = 0; u < camera.width; ++u) {
      const Eigen::Vector3d dir = pose.linear() * camera.pixel_ray(u, v);
      const RayHit hit = raycast(world.terrain, origin, dir);
      if (!hit.valid) continue;  // left the terrain: no return
      if (hit.t <= 1e-9) {
        throw PoseBelowTerrain("footprint sample at or above camera height");
      }
      double depth = hit.t;
      if (noise.depth_sigma_rel > 0.0) {
        depth *= 1.0 + rng.normal(0.0, noise.depth_sigma_rel);
      }
      frame.depth(v, u) = depth;
      const int cls = world.class_at(hit.cell.x(), hit.cell.y());
      frame.classes(v, u) = cls;
      frame.features.col(frame.pixel_index(u, v, camera.width)) =
          world.dictionary.col(cls);
    }
  }
  return frame;
}

Eigen::Vector3d sample_gps(const Eigen::Vector3d& true_position,
                           const NoiseSpec& noise, Rng& rng) {
  if (!true_position.allFinite()) throw BadConfig("gps input must be finite");
  if (noise.gps_sigma == 0.0) return true_position;
  return true_position + rng.normal3(noise.gps_sigma);
}

PointCloud back_project(const SensorFrame& frame, const CameraModel& camera,
                        int stride) {
  stride = std::max(stride, 1);
  std::vector<Eigen::Vector3d> pts;
  std::vector<double> colors;
  pts.reserve(frame.depth.size() / (stride * stride) + 1);
  for (int v = 0; v < frame.depth.rows(); v += stride) {
    for (int u = 0; u < frame.depth.cols(); u += stride) {
      const double d = frame.depth(v, u);
      if (d == kNoReturn) continue;
      pts.push_back(d * camera.pixel_ray(u, v));
      colors.push_back(class_color(frame.classes(v, u)));
    }
  }
  PointCloud cloud;
  cloud.points.resize(3, static_cast<int>(pts.size()));
  cloud.color.resize(static_cast<int>(pts.size()));
  for (int i = 0; i < cloud.size(); ++i) {
    cloud.points.col(i) = pts[i];
    cloud.color[i] = colors[i];
  }
  return cloud;
}

SubmapPrediction emulate_f3dr(const std::vector<SensorFrame>& frames,
                              const std::vector<SensorFrame>& overlap,
                              const CameraModel& camera, const NoiseSpec& noise,
                              Rng& rng, int cloud_stride,
                              const std::vector<Pose>& loop_anchors) {
  if (frames.size() + overlap.size() < 2) {
    throw TooFewFrames("emulate_f3dr needs at least 2 frames");
  }
  std::vector<const SensorFrame*> batch;
  for (const SensorFrame& f : overlap) batch.push_back(&f);
  for (const SensorFrame& f : frames) batch.push_back(&f);

  const double s_true =
      rng.lognormal_median(noise.submap_scale_median, noise.submap_scale_sigma);
  const Eigen::Vector3d anchor = batch.front()->true_pose.translation();

  SubmapPrediction pred;
  pred.frame_ids.reserve(batch.size());
  for (const SensorFrame* f : batch) {
    Eigen::Matrix3d r = f->true_pose.linear();
    if (noise.rel_rot_sigma > 0.0) {
      r = r * exp_so3(rng.normal3(noise.rel_rot_sigma));
    }
    Eigen::Vector3d t = (f->true_pose.translation() - anchor) / s_true;
    if (noise.rel_trans_sigma_rel > 0.0) {
      t += t.norm() * rng.normal3(noise.rel_trans_sigma_rel);
    }
    pred.frame_ids.push_back(f->id);
    pred.frame_poses_local.push_back(make_pose(r, t));

    PointCloud cloud = back_project(*f, camera, cloud_stride);
    cloud.points /= s_true;
    pred.clouds_local.push_back(
        transformed(cloud, pred.frame_poses_local.back()));
  }
  for (const SensorFrame& f : overlap) pred.overlap_ids.push_back(f.id);

  for (const Pose& true_anchor : loop_anchors) {
    Eigen::Matrix3d r = true_anchor.linear();
    if (noise.rel_rot_sigma > 0.0) {
      r = r * exp_so3(rng.normal3(noise.rel_rot_sigma));
    }
    Eigen::Vector3d t = (true_anchor.translation() - anchor) / s_true;
    if (noise.rel_trans_sigma_rel > 0.0) {
      t += t.norm() * rng.normal3(noise.rel_trans_sigma_rel);
    }
    pred.loop_poses_local.push_back(make_pose(r, t));
  }
  pred.validate();
  return pred;
}

}  // namespace halo
