#pragma once

#include <Eigen/Dense>
#include <string>

#include "halo/point_cloud.hpp"

namespace halo {

/// 2.5D terrain: per-cell constant elevation on a regular grid.
struct Heightfield {
  double resolution = 1.0;                          // meters per cell
  Eigen::Vector2d origin = Eigen::Vector2d::Zero();  // world xy of cell (0,0) corner
  Eigen::MatrixXd elevation;                        // (nx, ny) meters

  int nx() const { return static_cast<int>(elevation.rows()); }
  int ny() const { return static_cast<int>(elevation.cols()); }

  bool in_bounds(int ix, int iy) const {
    return ix >= 0 && iy >= 0 && ix < nx() && iy < ny();
  }

  Eigen::Vector2i cell_at(const Eigen::Vector2d& xy) const {
    return {static_cast<int>(std::floor((xy.x() - origin.x()) / resolution)),
            static_cast<int>(std::floor((xy.y() - origin.y()) / resolution))};
  }

  Eigen::Vector2d cell_center(int ix, int iy) const {
    return origin + resolution * Eigen::Vector2d(ix + 0.5, iy + 0.5);
  }

  bool contains(const Eigen::Vector2d& xy) const {
    const Eigen::Vector2i c = cell_at(xy);
    return in_bounds(c.x(), c.y());
  }

  /// Validates invariants (finite elevations, positive resolution).
  void validate() const;
};

struct RayHit {
  bool valid = false;
  double t = 0.0;              // ray parameter at the hit (units of |dir|)
  Eigen::Vector3d point = Eigen::Vector3d::Zero();
  Eigen::Vector2i cell = Eigen::Vector2i::Zero();
};

/// Casts origin + t*dir against the terrain by stepping at half-cell
/// granularity in the horizontal plane, then intersecting the top plane of
/// the first cell found below the ray. Rays leaving the grid miss.
RayHit raycast(const Heightfield& terrain, const Eigen::Vector3d& origin,
               const Eigen::Vector3d& dir);

/// One point per cell, at the cell center and its elevation.
PointCloud surface_cloud(const Heightfield& terrain);

void write_matrix_txt(const std::string& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix_txt(const std::string& path);

}  // namespace halo
