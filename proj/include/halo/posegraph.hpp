#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "halo/geometry.hpp"
#include "halo/icp.hpp"
#include "halo/point_cloud.hpp"
#include "halo/world.hpp"

namespace halo {

enum class FactorKind { kGpsPrior, kF3drRel, kIcpRel, kLoopRel };

const char* to_string(FactorKind kind);

/// One measurement in the graph: a position prior on a single node or a
/// relative rigid transform between two nodes. Information is stored as the
/// diagonal of the weight matrix, ordered [rotation(3); translation(3)];
/// priors use only the translation block.
struct Factor {
  FactorKind kind = FactorKind::kGpsPrior;
  int a = -1;
  int b = -1;
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Pose relative = Pose::Identity();  // pose of b expressed in a's frame
  Vector6d info = Vector6d::Ones();

  bool is_relative() const { return kind != FactorKind::kGpsPrior; }
};

/// Submap anchor: the rigid transform mapping submap-local coordinates to
/// world, plus the scaled local payload (frame poses and cloud).
struct PoseNode {
  int id = 0;
  Pose pose = Pose::Identity();
  int frame_count = 0;
  std::vector<long> frame_ids;
  std::vector<Pose> frame_poses;   // local, translations at metric scale
  PointCloud cloud;                // local, metric scale
  std::vector<int> cloud_offsets;  // per-frame slice starts, size frame_count+1
};

struct PoseGraphConfig {
  double scale_blend = 0.3;     // weight of each new scale estimate
  double motion_floor = 1e-8;   // min sum of squared prediction displacements
  double gps_sigma = 0.5;       // m, sets the prior information diagonal
  double f3dr_rot_info = 1e4;   // 1/rad^2
  double f3dr_trans_info = 25.0;
  double icp_rot_info = 1e4;
  double icp_trans_info = 100.0;  // ICP trusted 4x F3DR in translation
  double loop_rot_info = 1e4;
  double loop_trans_info = 25.0;
  double huber_delta = 1.0;       // on the whitened loop residual norm
  double loop_radius = 30.0;      // m
  int min_loop_gap = 8;           // submap indices
  double icp_fitness_floor = 0.3;
  IcpConfig icp;
};

struct PoseGraph {
  PoseGraphConfig config;
  std::vector<PoseNode> nodes;
  std::vector<Factor> factors;
  double scale = 1.0;
  bool scale_initialized = false;
  std::vector<std::string> warnings;
};

struct OptimizeReport {
  double initial_cost = 0.0;
  double final_cost = 0.0;
  int iterations = 0;
  bool converged = true;
};

/// Least-squares fit of ||dg|| = s * ||dp|| over paired displacements:
/// s = sum(||dg||*||dp||) / sum(||dp||^2). Throws DegenerateMotion when the
/// prediction displacements carry no usable motion.
double estimate_scale(const std::vector<Eigen::Vector3d>& pred_deltas,
                      const std::vector<Eigen::Vector3d>& gps_deltas,
                      double motion_floor = 1e-8);

/// Folds one submap prediction into the graph: updates the running scale,
/// rescales poses and clouds, chains the new node off the previous one
/// through the shared overlap frames, and adds GPS prior / relative / ICP
/// factors. Passing an empty gps vector selects GPS-denied mode (no priors,
/// submap-to-submap relative scale). Returns the new node id.
int add_submap(PoseGraph& graph, const SubmapPrediction& pred,
               const std::vector<Eigen::Vector3d>& gps);

/// Nodes within loop_radius of the query position whose index lags the
/// newest node by at least min_loop_gap, ordered by ascending distance.
std::vector<int> detect_loop_candidates(const PoseGraph& graph,
                                        const Eigen::Vector3d& current_position);

/// Adds a loop-closure relative-pose factor (robustified during optimize).
void add_loop_factor(PoseGraph& graph, int from, int to, const Pose& measurement);

/// Damped Gauss-Newton over node poses with a Huber loss on loop factors.
/// Only cost-decreasing steps are accepted, so final_cost <= initial_cost.
OptimizeReport optimize(PoseGraph& graph, int max_iter);

/// Total robustified cost at the current node poses.
double graph_cost(const PoseGraph& graph);

/// All submap clouds transformed through their node poses.
PointCloud export_world_cloud(const PoseGraph& graph);

/// Line-oriented text serialization of nodes, factors and scale (payload
/// clouds are not round-tripped; use PLY export for those).
void save_graph(const std::string& path, const PoseGraph& graph);
void load_graph(const std::string& path, PoseGraph& graph);

}  // namespace halo
