#include "shield/traj/reach.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shield::traj {

Capsule hullCapsule(const Capsule& a, const Capsule& b) {
  // The midpoint segment inflated by half the larger endpoint displacement
  // contains every affine interpolation of the two axes, hence the hull.
  const Vec3 m1 = 0.5 * (a.p1 + b.p1);
  const Vec3 m2 = 0.5 * (a.p2 + b.p2);
  const double slack = 0.5 * std::max((a.p1 - b.p1).norm(), (a.p2 - b.p2).norm());
  return Capsule(m1, m2, std::max(a.radius, b.radius) + slack);
}

double maxPointSpeed(const robot::RobotModel& model, const robot::AngularBounds& ab,
                     int linkIndex) {
  double vhat = 0.0;
  for (int j = 0; j <= linkIndex; ++j) {
    double lever = ab.anchorReach[linkIndex];
    for (int k = j; k < linkIndex; ++k) lever += ab.interJointLength[k];
    vhat += model.joints[j].qdotMax * lever;
  }
  return vhat;
}

std::vector<LinkInterval> linkIntervals(const robot::RobotModel& model,
                                        const robot::AngularBounds& ab,
                                        const MonitoredTrajectory& traj, int intervalIndex) {
  const TrajectoryStep& a = traj.steps.at(intervalIndex);
  const TrajectoryStep& b = traj.steps.at(intervalIndex + 1);
  const TrajectoryStep mid = interpolateStep(traj, intervalIndex, 0.5);

  const auto fkA = robot::forwardKinematics(model, a.q);
  const auto fkB = robot::forwardKinematics(model, b.q);
  const auto kinMid = robot::linkKinematics(model, mid.q, mid.qdot, mid.qddot);

  std::vector<LinkInterval> out(model.dof());
  for (int i = 0; i < model.dof(); ++i) {
    Capsule hull = hullCapsule(fkA[i].worldCapsule, fkB[i].worldCapsule);
    hull.radius += 0.5 * maxPointSpeed(model, ab, i) * traj.dt + model.trackingError[i];
    out[i].occupancy = hull;
    out[i].mid = kinMid[i];
  }
  return out;
}

double minNormalSpeed(const Vec3& n, const robot::RobotModel& model,
                      const robot::AngularBounds& ab, const robot::LinkKinematics& mid,
                      int linkIndex, double dt) {
  const auto& eb = model.errorBounds;
  const double li = ab.anchorReach[linkIndex];
  const Vec3 nxw = n.cross(mid.omega);
  const Vec3 nxdw = n.cross(mid.omegaDot);
  const double wNorm = mid.omega.norm();

  const double first =
      n.dot(mid.originVel) - eb.wVMax - li * (nxw.norm() + eb.wOmegaMax);
  const double accelMag =
      std::abs(n.dot(mid.originAcc)) + eb.wAMax +
      li * (nxdw.norm() + wNorm * nxw.norm() + eb.wOmegaDotMax +
            eb.wOmegaMax * (wNorm + nxw.norm() + eb.wOmegaMax));

  double remainder = 0.0;
  for (int j = 0; j <= linkIndex; ++j) {
    const double lj = (j < linkIndex) ? ab.interJointLength[j] : li;
    const double om = ab.omegaBar[j];
    const double dom = ab.omegaDotBar[j];
    const double ddom = ab.omegaDdotBar[j];
    remainder += lj * (ddom + 3.0 * dom * om + om * om * om + dom * dom);
  }

  return first - 0.5 * dt * accelMag - dt * dt / 8.0 * remainder;
}

} // namespace shield::traj
