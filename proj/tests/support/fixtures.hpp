#pragma once

// Shared in-code models and helpers for the test and benchmark targets.

#include <random>

#include "shield/human/body.hpp"
#include "shield/robot/model.hpp"
#include "shield/traj/path.hpp"

namespace shield::fixtures {

using geo::Capsule;
using geo::Mat3;
using geo::Vec3;
using robot::GeometryClass;
using robot::JointSpec;
using robot::JointVector;
using robot::LinkSpec;
using robot::RobotModel;
using robot::Transform;

inline JointSpec makeJoint(const Vec3& axis, const Vec3& offset, double vMax, double aMax,
                           double jMax) {
  JointSpec j;
  j.axis = axis.normalized();
  j.originOffset = Transform::Identity();
  j.originOffset.translation() = offset;
  j.qdotMax = vMax;
  j.qddotMax = aMax;
  j.qdddotMax = jMax;
  return j;
}

inline LinkSpec makeLink(double mass, const Vec3& tip, double radius,
                         GeometryClass geom = GeometryClass::blunt) {
  LinkSpec l;
  l.mass = mass;
  l.comOffset = 0.5 * tip;
  const double d = std::max(tip.norm(), 0.05);
  l.inertiaTensor = (mass * d * d / 12.0 + 1e-3) * Mat3::Identity();
  l.capsule = Capsule(Vec3::Zero(), tip, radius);
  l.worstCaseGeometry = geom;
  return l;
}

/// Small planar-ish arm used for fuzzing and bound oracles.
inline RobotModel make3Link() {
  RobotModel m;
  m.name = "test3";
  m.joints = {
      makeJoint(Vec3::UnitZ(), Vec3(0, 0, 0.1), 2.0, 5.0, 50.0),
      makeJoint(Vec3::UnitY(), Vec3(0, 0, 0.30), 2.0, 5.0, 50.0),
      makeJoint(Vec3::UnitY(), Vec3(0, 0, 0.25), 3.0, 8.0, 80.0),
  };
  m.links = {
      makeLink(4.0, Vec3(0, 0, 0.30), 0.06),
      makeLink(3.0, Vec3(0, 0, 0.25), 0.05),
      makeLink(2.0, Vec3(0, 0, 0.20), 0.045),
  };
  m.topologyExclusions = {{0, 1}, {1, 2}};
  m.errorBounds = {1e-3, 1e-3, 1e-2, 1e-2};
  m.trackingError = {1e-3, 1e-3, 1e-3};
  return m;
}

/// Desk-scale 6-DoF arm with a sharp (edge) end effector.
inline RobotModel make6Dof() {
  RobotModel m;
  m.name = "test6";
  m.joints = {
      makeJoint(Vec3::UnitZ(), Vec3(0, 0, 0.10), 1.5, 5.0, 100.0),
      makeJoint(Vec3::UnitY(), Vec3(0, 0, 0.20), 1.5, 5.0, 100.0),
      makeJoint(Vec3::UnitY(), Vec3(0, 0, 0.35), 2.0, 6.0, 120.0),
      makeJoint(Vec3::UnitZ(), Vec3(0, 0, 0.31), 2.5, 8.0, 160.0),
      makeJoint(Vec3::UnitY(), Vec3(0, 0, 0.08), 2.5, 8.0, 160.0),
      makeJoint(Vec3::UnitZ(), Vec3(0, 0, 0.07), 3.0, 10.0, 200.0),
  };
  m.links = {
      makeLink(8.0, Vec3(0, 0, 0.20), 0.07),
      makeLink(7.0, Vec3(0, 0, 0.35), 0.06),
      makeLink(4.0, Vec3(0, 0, 0.31), 0.05),
      makeLink(2.0, Vec3(0, 0, 0.08), 0.045),
      makeLink(1.5, Vec3(0, 0, 0.07), 0.04),
      makeLink(1.0, Vec3(0, 0, 0.12), 0.035, GeometryClass::edge),
  };
  m.topologyExclusions = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}, {2, 4}, {2, 5}, {0, 2}};
  m.errorBounds = {1e-3, 1e-3, 1e-2, 1e-2};
  m.trackingError = std::vector<double>(6, 2e-3);
  return m;
}

inline human::BodyPart makePart(const std::string& id, human::BodyKind kind, double diameter,
                                const Capsule& c, int humanId = 0, double tMeas = 0.0) {
  human::BodyPart p;
  p.id = id;
  p.kind = kind;
  p.diameter = diameter;
  p.humanId = humanId;
  p.measuredCapsule = c;
  p.measurementTime = tMeas;
  return p;
}

inline traj::JointPath randomPath(const RobotModel& model, std::mt19937& rng, int waypoints = 4,
                                  double span = 1.2, double duration = 4.0) {
  std::uniform_real_distribution<double> u(-span, span);
  std::vector<double> times;
  std::vector<JointVector> q;
  for (int k = 0; k < waypoints; ++k) {
    times.push_back(duration * k / (waypoints - 1));
    JointVector w(model.dof());
    for (int j = 0; j < model.dof(); ++j) w[j] = u(rng);
    q.push_back(w);
  }
  return traj::JointPath(times, q);
}

/// Random path whose derived scalar limits are feasible (steep random splines
/// can exhaust the joint acceleration budget; those draws are rejected).
inline traj::JointPath randomFeasiblePath(const RobotModel& model, std::mt19937& rng,
                                          traj::ScalarLimits* limits = nullptr,
                                          int waypoints = 4, double span = 1.2,
                                          double duration = 4.0) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    traj::JointPath path = randomPath(model, rng, waypoints, span, duration);
    try {
      const traj::ScalarLimits lim = path.deriveScalarLimits(model);
      // near-degenerate paths can yield feasible but absurdly small budgets
      // whose braking maneuvers run for minutes; skip those draws too
      if (lim.vMax / lim.aMax + 2.0 * lim.aMax / lim.jMax > 30.0) continue;
      if (limits) *limits = lim;
      return path;
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  throw std::runtime_error("no feasible random path found");
}

inline JointVector randomVector(int n, std::mt19937& rng, double span) {
  std::uniform_real_distribution<double> u(-span, span);
  JointVector v(n);
  for (int i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

} // namespace shield::fixtures
