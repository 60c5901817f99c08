#pragma once

#include <vector>

#include "shield/robot/model.hpp"
#include "shield/traj/monitored.hpp"

namespace shield::traj {

using geo::Capsule;
using geo::Vec3;

/// Per-link data for one verification interval [t_k, t_{k+1}].
struct LinkInterval {
  Capsule occupancy;          // sound over-approximation of the link volume
  robot::LinkKinematics mid;  // anchor kinematics at the interval midpoint
};

/// Capsule containing both input capsules (and their convex hull).
Capsule hullCapsule(const Capsule& a, const Capsule& b);

/// Upper bound on the speed of any point of link i, from the joint speed
/// limits and the chain lever arms.
double maxPointSpeed(const robot::RobotModel& model, const robot::AngularBounds& ab,
                     int linkIndex);

/// Reachable-set capsules and midpoint kinematics for every link over one
/// step of the monitored trajectory.
std::vector<LinkInterval> linkIntervals(const robot::RobotModel& model,
                                        const robot::AngularBounds& ab,
                                        const MonitoredTrajectory& traj, int intervalIndex);

/// Lower bound on n . pdot for every point of link i throughout an interval
/// of length dt centered on the supplied midpoint kinematics. n must be a
/// unit vector. The midpoint first-order value is extended over the interval
/// by subtracting a magnitude bound on the acceleration term and the
/// second-order Taylor remainder, so the bound holds on the whole interval.
double minNormalSpeed(const Vec3& n, const robot::RobotModel& model,
                      const robot::AngularBounds& ab, const robot::LinkKinematics& mid,
                      int linkIndex, double dt);

} // namespace shield::traj
