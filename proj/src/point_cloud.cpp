#include "halo/point_cloud.hpp"

#include <fstream>

#include "halo/errors.hpp"

namespace halo {

PointCloud transformed(const PointCloud& cloud, const Eigen::Isometry3d& pose) {
  PointCloud out;
  out.points = (pose.linear() * cloud.points).colwise() + pose.translation();
  out.color = cloud.color;
  return out;
}

void append(PointCloud& cloud, const PointCloud& other) {
  if (other.empty()) return;
  const int n = cloud.size();
  const int m = other.size();
  cloud.points.conservativeResize(3, n + m);
  cloud.points.rightCols(m) = other.points;
  if (n == 0) {
    cloud.color = other.color;
    return;
  }
  if (cloud.color.size() == n && other.has_color()) {
    cloud.color.conservativeResize(n + m);
    cloud.color.tail(m) = other.color;
  } else {
    cloud.color.resize(0);  // mixed colored/uncolored input drops the channel
  }
}

PointCloud uniform_subsample(const PointCloud& cloud, int max_points) {
  const int n = cloud.size();
  if (max_points <= 0 || n <= max_points) return cloud;
  const int stride = (n + max_points - 1) / max_points;
  const int m = (n + stride - 1) / stride;
  PointCloud out;
  out.points.resize(3, m);
  if (cloud.has_color()) out.color.resize(m);
  int k = 0;
  for (int i = 0; i < n; i += stride, ++k) {
    out.points.col(k) = cloud.points.col(i);
    if (cloud.has_color()) out.color[k] = cloud.color[i];
  }
  return out;
}

PointCloud slice(const PointCloud& cloud, int begin, int end) {
  PointCloud out;
  out.points = cloud.points.middleCols(begin, end - begin);
  if (cloud.has_color()) out.color = cloud.color.segment(begin, end - begin);
  return out;
}

void write_ply(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path);
  out << "ply\nformat ascii 1.0\n";
  out << "element vertex " << cloud.size() << "\n";
  out << "property float x\nproperty float y\nproperty float z\n";
  if (cloud.has_color()) out << "property float intensity\n";
  out << "end_header\n";
  out.precision(7);
  for (int i = 0; i < cloud.size(); ++i) {
    out << cloud.points(0, i) << " " << cloud.points(1, i) << " "
        << cloud.points(2, i);
    if (cloud.has_color()) out << " " << cloud.color[i];
    out << "\n";
  }
}

}  // namespace halo
