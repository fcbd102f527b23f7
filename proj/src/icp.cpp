#include "halo/icp.hpp"

#include <cmath>
#include <vector>

#include "halo/errors.hpp"
#include "halo/geometry.hpp"
#include "halo/kdtree.hpp"

namespace halo {

Eigen::Isometry3d rigid_fit(const Eigen::Matrix3Xd& src,
                            const Eigen::Matrix3Xd& dst) {
  const Eigen::Vector3d cs = src.rowwise().mean();
  const Eigen::Vector3d cd = dst.rowwise().mean();
  const Eigen::Matrix3d h =
      (src.colwise() - cs) * (dst.colwise() - cd).transpose();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU |
                                               Eigen::ComputeFullV);
  Eigen::Matrix3d r = svd.matrixV() * svd.matrixU().transpose();
  if (r.determinant() < 0.0) {
    Eigen::Matrix3d v = svd.matrixV();
    v.col(2) *= -1.0;
    r = v * svd.matrixU().transpose();
  }
  return make_pose(r, cd - r * cs);
}

IcpResult icp_align(const PointCloud& source, const PointCloud& target,
                    const Eigen::Isometry3d& init, const IcpConfig& config) {
  if (source.size() < 10 || target.size() < 10) {
    throw EmptyCloud("icp_align needs at least 10 points per cloud");
  }
  const PointCloud src = uniform_subsample(source, config.max_points);
  const PointCloud tgt = uniform_subsample(target, config.max_points);

  const bool use_color =
      config.color_weight > 0.0 && src.has_color() && tgt.has_color();
  const double cw = std::sqrt(std::max(config.color_weight, 0.0));

  KdTree4 tree4;
  KdTree3 tree3;
  if (use_color) {
    Eigen::Matrix4Xd aug(4, tgt.size());
    aug.topRows<3>() = tgt.points;
    aug.row(3) = cw * tgt.color.transpose();
    tree4 = KdTree4(aug);
  } else {
    tree3 = KdTree3(tgt.points);
  }

  const double gate2 = config.max_corr_dist * config.max_corr_dist;
  IcpResult result;
  result.transform = init;

  std::vector<int> src_idx, tgt_idx;
  src_idx.reserve(src.size());
  tgt_idx.reserve(src.size());

  auto correspond = [&](const Eigen::Isometry3d& t) {
    src_idx.clear();
    tgt_idx.clear();
    double sq_sum = 0.0;
    for (int i = 0; i < src.size(); ++i) {
      const Eigen::Vector3d p = t * src.points.col(i);
      int j = -1;
      if (use_color) {
        Eigen::Vector4d q;
        q << p, cw * src.color[i];
        j = tree4.nearest(q).first;
      } else {
        j = tree3.nearest(p).first;
      }
      if (j < 0) continue;
      const double d2 = (tgt.points.col(j) - p).squaredNorm();
      if (d2 > gate2) continue;
      src_idx.push_back(i);
      tgt_idx.push_back(j);
      sq_sum += d2;
    }
    return sq_sum;
  };

  double sq_sum = correspond(result.transform);
  if (src_idx.empty()) {
    throw NoCorrespondences("no correspondences within max_corr_dist at init");
  }

  for (int iter = 0; iter < config.max_iter; ++iter) {
    result.iterations = iter + 1;
    Eigen::Matrix3Xd a(3, src_idx.size()), b(3, src_idx.size());
    for (size_t k = 0; k < src_idx.size(); ++k) {
      a.col(k) = result.transform * src.points.col(src_idx[k]);
      b.col(k) = tgt.points.col(tgt_idx[k]);
    }
    const Eigen::Isometry3d delta = rigid_fit(a, b);
    result.transform = delta * result.transform;
    result.transform.linear() = orthonormalized(result.transform.linear());
    sq_sum = correspond(result.transform);
    if (src_idx.empty()) break;  // diverged out of the gate
    if (delta.translation().norm() < config.translation_eps &&
        rotation_angle(delta.linear()) < config.rotation_eps) {
      break;
    }
  }

  if (!src_idx.empty()) {
    result.fitness =
        static_cast<double>(src_idx.size()) / static_cast<double>(src.size());
    result.rmse = std::sqrt(sq_sum / static_cast<double>(src_idx.size()));
  }
  return result;
}

}  // namespace halo
