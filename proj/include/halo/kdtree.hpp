#pragma once

#include <Eigen/Core>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

namespace halo {

/// Static kd-tree over fixed-dimension points. Build is O(n log n) via
/// median splits on the widest axis; queries return the index of the nearest
/// stored point together with the squared distance.
template <int Dim>
class KdTree {
 public:
  using Point = Eigen::Matrix<double, Dim, 1>;
  using Points = Eigen::Matrix<double, Dim, Eigen::Dynamic>;

  KdTree() = default;

  explicit KdTree(Points points) : points_(std::move(points)) {
    const int n = static_cast<int>(points_.cols());
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    if (n > 0) {
      nodes_.reserve(2 * n / kLeafSize + 4);
      root_ = build(0, n);
    }
  }

  int size() const { return static_cast<int>(points_.cols()); }

  /// Index and squared distance of the nearest point; {-1, inf} when empty.
  std::pair<int, double> nearest(const Point& query) const {
    int best = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    if (root_ >= 0) search(root_, query, best, best_d2);
    return {best, best_d2};
  }

 private:
  static constexpr int kLeafSize = 16;

  struct Node {
    int axis = -1;  // -1 marks a leaf
    double split = 0.0;
    int left = -1, right = -1;
    int begin = 0, end = 0;
  };

  int build(int begin, int end) {
    const int node_index = static_cast<int>(nodes_.size());
    nodes_.push_back({});
    if (end - begin <= kLeafSize) {
      nodes_[node_index] = Node{-1, 0.0, -1, -1, begin, end};
      return node_index;
    }
    Point lo = Point::Constant(std::numeric_limits<double>::infinity());
    Point hi = Point::Constant(-std::numeric_limits<double>::infinity());
    for (int i = begin; i < end; ++i) {
      lo = lo.cwiseMin(points_.col(order_[i]));
      hi = hi.cwiseMax(points_.col(order_[i]));
    }
    int axis = 0;
    (hi - lo).maxCoeff(&axis);
    const int mid = (begin + end) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid,
                     order_.begin() + end, [&](int a, int b) {
                       const double pa = points_(axis, a);
                       const double pb = points_(axis, b);
                       return pa < pb || (pa == pb && a < b);
                     });
    const double split = points_(axis, order_[mid]);
    const int left = build(begin, mid);
    const int right = build(mid, end);
    nodes_[node_index] = Node{axis, split, left, right, begin, end};
    return node_index;
  }

  void search(int node_index, const Point& query, int& best,
              double& best_d2) const {
    const Node& node = nodes_[node_index];
    if (node.axis < 0) {
      for (int i = node.begin; i < node.end; ++i) {
        const int idx = order_[i];
        const double d2 = (points_.col(idx) - query).squaredNorm();
        if (d2 < best_d2 || (d2 == best_d2 && idx < best)) {
          best_d2 = d2;
          best = idx;
        }
      }
      return;
    }
    const double dx = query[node.axis] - node.split;
    const int near = dx < 0.0 ? node.left : node.right;
    const int far = dx < 0.0 ? node.right : node.left;
    search(near, query, best, best_d2);
    if (dx * dx <= best_d2) search(far, query, best, best_d2);
  }

  Points points_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

using KdTree3 = KdTree<3>;
using KdTree4 = KdTree<4>;

}  // namespace halo
