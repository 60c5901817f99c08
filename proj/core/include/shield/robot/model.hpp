#pragma once

#include <Eigen/Dense>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shield/geometry/types.hpp"

namespace shield::robot {

using geo::Capsule;
using geo::Mat3;
using geo::Vec3;
using JointVector = Eigen::VectorXd;
using Transform = Eigen::Isometry3d;

/// Worst-case contact shape of a link per the energy-threshold table.
enum class GeometryClass { blunt, wedge, edge, sheet };

GeometryClass geometryClassFromString(const std::string& s);
std::string toString(GeometryClass g);

struct JointSpec {
  Vec3 axis{Vec3::UnitZ()};    // rotation axis in the joint frame
  Transform originOffset{Transform::Identity()}; // fixed transform to parent frame
  double qdotMax{0.0};
  double qddotMax{0.0};
  double qdddotMax{0.0};
};

struct LinkSpec {
  double mass{0.0};
  Mat3 inertiaTensor{Mat3::Zero()}; // about COM, link frame
  Vec3 comOffset{Vec3::Zero()};
  Capsule capsule; // link frame; p1 should sit at the joint origin
  GeometryClass worstCaseGeometry{GeometryClass::blunt};
};

/// Conformance-checked bounds on the kinematic state estimation errors.
struct ErrorBounds {
  double wVMax{0.0};
  double wOmegaMax{0.0};
  double wAMax{0.0};
  double wOmegaDotMax{0.0};
};

/// Per-link cumulative bounds on angular velocity, acceleration, and jerk
/// derived from the joint limits, plus the lever-arm lengths used by the
/// interval velocity bound.
struct AngularBounds {
  std::vector<double> omegaBar;
  std::vector<double> omegaDotBar;
  std::vector<double> omegaDdotBar;
  std::vector<double> interJointLength; // |joint_{j+1} - joint_j| in the parent chain
  std::vector<double> anchorReach;      // farthest capsule point from the joint origin
};

struct RobotModel {
  std::string name;
  std::vector<JointSpec> joints;
  std::vector<LinkSpec> links;
  std::set<std::pair<int, int>> topologyExclusions; // unordered link-index pairs
  ErrorBounds errorBounds;
  std::vector<double> trackingError; // per-link occupancy inflation, meters

  int dof() const { return static_cast<int>(joints.size()); }
  bool isExcludedPair(int i, int l) const {
    return topologyExclusions.count({std::min(i, l), std::max(i, l)}) > 0;
  }

  static RobotModel loadFromYamlFile(const std::string& path);
};

struct FrameState {
  Transform pose;      // link frame in world
  Capsule worldCapsule;
};

std::vector<FrameState> forwardKinematics(const RobotModel& model, const JointVector& q);

/// 6xN geometric Jacobian of a world-frame point attached to linkIndex.
/// Rows 0-2 position, rows 3-5 orientation; columns beyond linkIndex are zero.
Eigen::MatrixXd linkJacobian(const RobotModel& model, const JointVector& q, int linkIndex,
                             const Vec3& point);

Eigen::MatrixXd inertiaMatrix(const RobotModel& model, const JointVector& q);

/// Kinetic energy relevant to a contact at linkIndex: the prefix quadratic
/// form of B(q), exactly independent of distal joint velocities.
double effectiveEnergy(const RobotModel& model, const JointVector& q, const JointVector& qdot,
                       int linkIndex);
double effectiveEnergyFromInertia(const Eigen::MatrixXd& inertia, const JointVector& qdot,
                                  int linkIndex);

AngularBounds angularBounds(const RobotModel& model);

struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Perceived inertia at contactPoint along a unit direction,
/// (u^T Lambda_v^{-1} u)^{-1}. Throws SingularityError when the direction is
/// unreachable (value below the 1e-8 cutoff).
double reflectedMass(const RobotModel& model, const JointVector& q, int linkIndex,
                     const Vec3& contactPoint, const Vec3& direction);

/// Linear/angular velocity and acceleration of every link frame origin for a
/// given joint state, via the standard outward recursion.
struct LinkKinematics {
  Vec3 originVel, originAcc;
  Vec3 omega, omegaDot;
  Transform pose;
};
std::vector<LinkKinematics> linkKinematics(const RobotModel& model, const JointVector& q,
                                           const JointVector& qdot, const JointVector& qddot);

} // namespace shield::robot
