#include "halo/heightfield.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "halo/errors.hpp"

namespace halo {

void Heightfield::validate() const {
  if (resolution <= 0.0) throw BadConfig("heightfield resolution must be > 0");
  if (nx() < 1 || ny() < 1) throw BadConfig("heightfield must be at least 1x1");
  if (!elevation.allFinite()) throw BadConfig("heightfield elevations must be finite");
}

namespace {

// Clips t to the interval where origin + t*dir stays inside [lo, hi] on one axis.
bool clip_axis(double o, double d, double lo, double hi, double& t0, double& t1) {
  if (std::abs(d) < 1e-15) return o >= lo && o <= hi;
  double ta = (lo - o) / d;
  double tb = (hi - o) / d;
  if (ta > tb) std::swap(ta, tb);
  t0 = std::max(t0, ta);
  t1 = std::min(t1, tb);
  return t0 <= t1;
}

}  // namespace

RayHit raycast(const Heightfield& terrain, const Eigen::Vector3d& origin,
               const Eigen::Vector3d& dir) {
  RayHit hit;
  const Eigen::Vector2d o_xy = origin.head<2>();
  const Eigen::Vector2d d_xy = dir.head<2>();
  const Eigen::Vector2d lo = terrain.origin;
  const Eigen::Vector2d hi =
      terrain.origin +
      terrain.resolution * Eigen::Vector2d(terrain.nx(), terrain.ny());
  const double h_speed = d_xy.norm();

  auto cell_clamped = [&](const Eigen::Vector2d& xy) {
    Eigen::Vector2i c = terrain.cell_at(xy);
    c.x() = std::clamp(c.x(), 0, terrain.nx() - 1);
    c.y() = std::clamp(c.y(), 0, terrain.ny() - 1);
    return c;
  };

  auto make_hit = [&](double t, const Eigen::Vector2i& cell) {
    hit.valid = true;
    hit.t = t;
    hit.point = origin + t * dir;
    hit.cell = cell;
    return hit;
  };

  if (h_speed < 1e-12) {
    // Vertical ray: single candidate cell.
    if (!terrain.contains(o_xy)) return hit;
    const Eigen::Vector2i cell = terrain.cell_at(o_xy);
    const double e = terrain.elevation(cell.x(), cell.y());
    if (origin.z() <= e) return make_hit(0.0, cell);
    if (dir.z() >= 0.0) return hit;
    return make_hit((e - origin.z()) / dir.z(), cell);
  }

  double t0 = 0.0;
  double t1 = std::numeric_limits<double>::infinity();
  if (!clip_axis(o_xy.x(), d_xy.x(), lo.x(), hi.x(), t0, t1)) return hit;
  if (!clip_axis(o_xy.y(), d_xy.y(), lo.y(), hi.y(), t0, t1)) return hit;
  if (!std::isfinite(t1)) t1 = t0;  // dir parallel to both axes is excluded above

  const double dt = 0.5 * terrain.resolution / h_speed;

  auto below = [&](double t, Eigen::Vector2i& cell, double& e) {
    const Eigen::Vector2d xy = o_xy + t * d_xy;
    cell = cell_clamped(xy);
    e = terrain.elevation(cell.x(), cell.y());
    return origin.z() + t * dir.z() <= e;
  };

  Eigen::Vector2i cell;
  double e = 0.0;
  if (below(t0, cell, e)) {
    return make_hit(t0, cell);  // enters the grid at or under the surface
  }
  double t_prev = t0;
  for (double t = t0 + dt; t_prev < t1; t = std::min(t + dt, t1 + 0.5 * dt)) {
    const double tc = std::min(t, t1);
    if (below(tc, cell, e)) {
      double t_star = tc;
      if (std::abs(dir.z()) > 1e-15) {
        t_star = std::clamp((e - origin.z()) / dir.z(), t_prev, tc);
      }
      const Eigen::Vector2d xy = o_xy + t_star * d_xy;
      return make_hit(t_star, terrain.contains(xy) ? terrain.cell_at(xy) : cell);
    }
    if (tc >= t1) break;
    t_prev = tc;
  }
  return hit;
}

PointCloud surface_cloud(const Heightfield& terrain) {
  PointCloud cloud;
  cloud.points.resize(3, terrain.nx() * terrain.ny());
  int k = 0;
  for (int iy = 0; iy < terrain.ny(); ++iy) {
    for (int ix = 0; ix < terrain.nx(); ++ix, ++k) {
      const Eigen::Vector2d c = terrain.cell_center(ix, iy);
      cloud.points.col(k) << c.x(), c.y(), terrain.elevation(ix, iy);
    }
  }
  return cloud;
}

void write_matrix_txt(const std::string& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path);
  out << m.rows() << " " << m.cols() << "\n";
  out.precision(17);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out << m(r, c) << (c + 1 == m.cols() ? "" : " ");
    }
    out << "\n";
  }
}

Eigen::MatrixXd read_matrix_txt(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Eigen::Index rows = 0, cols = 0;
  in >> rows >> cols;
  if (!in || rows < 1 || cols < 1) throw IoError("bad matrix header in " + path);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!(in >> m(r, c))) throw IoError("truncated matrix in " + path);
    }
  }
  return m;
}

}  // namespace halo
