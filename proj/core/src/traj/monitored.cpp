#include "shield/traj/monitored.hpp"

#include <cmath>
#include <stdexcept>

namespace shield::traj {

TrajectoryStep mapScalarState(const JointPath& path, const ScalarState& x, double t) {
  TrajectoryStep step;
  step.t = t;
  const JointVector d1 = path.velocity(x.s);
  const JointVector d2 = path.acceleration(x.s);
  const JointVector d3 = path.jerk(x.s);
  step.q = path.position(x.s);
  step.qdot = d1 * x.v;
  step.qddot = d2 * (x.v * x.v) + d1 * x.a;
  step.qdddot = d3 * (x.v * x.v * x.v) + 3.0 * d2 * (x.v * x.a) + d1 * x.j;
  return step;
}

MonitoredTrajectory buildMonitored(const JointPath& path, const std::vector<ScalarState>& intended,
                                   const std::vector<ScalarState>& failsafe, double dt,
                                   double tStart) {
  if (intended.empty() || failsafe.empty())
    throw std::invalid_argument("monitored trajectory needs intended and failsafe samples");
  const ScalarState& a = intended.back();
  const ScalarState& b = failsafe.front();
  if (std::abs(a.s - b.s) > 1e-9 || std::abs(a.v - b.v) > 1e-9 || std::abs(a.a - b.a) > 1e-9)
    throw std::invalid_argument("failsafe extension does not continue the intended segment");

  MonitoredTrajectory traj;
  traj.dt = dt;
  traj.splitIndex = static_cast<int>(intended.size());
  double t = tStart;
  for (std::size_t k = 0; k < intended.size(); ++k, t += dt) {
    ScalarState x = intended[k];
    // the last intended state hands over to the braking profile's jerk
    if (k + 1 == intended.size()) x.j = failsafe.front().j;
    traj.steps.push_back(mapScalarState(path, x, t));
  }
  for (std::size_t k = 1; k < failsafe.size(); ++k, t += dt) {
    traj.steps.push_back(mapScalarState(path, failsafe[k], t));
  }
  const auto& last = traj.steps.back();
  if (last.qdot.norm() > 1e-9 || last.qddot.norm() > 1e-9)
    throw std::logic_error("monitored trajectory does not end at rest");
  return traj;
}

TrajectoryStep interpolateStep(const MonitoredTrajectory& traj, int k, double alpha) {
  if (k < 0 || k + 1 >= traj.size()) throw std::out_of_range("interval index out of range");
  const TrajectoryStep& a = traj.steps[k];
  const TrajectoryStep& b = traj.steps[k + 1];
  const double h = traj.dt;
  const double u = alpha * h;
  // cubic Hermite on (q, qdot); consistent with the constant-jerk scalar steps
  // up to the spline's own smoothness
  const double h00 = 1.0 + alpha * alpha * (2.0 * alpha - 3.0);
  const double h10 = u * (1.0 - alpha) * (1.0 - alpha);
  const double h01 = alpha * alpha * (3.0 - 2.0 * alpha);
  const double h11 = u * alpha * (alpha - 1.0);
  TrajectoryStep out;
  out.t = a.t + u;
  out.q = h00 * a.q + h10 * a.qdot + h01 * b.q + h11 * b.qdot;
  const double g00 = 6.0 * alpha * (alpha - 1.0) / h;
  const double g10 = (1.0 - alpha) * (1.0 - 3.0 * alpha);
  const double g01 = -g00;
  const double g11 = alpha * (3.0 * alpha - 2.0);
  out.qdot = g00 * a.q + g10 * a.qdot + g01 * b.q + g11 * b.qdot;
  out.qddot = (1.0 - alpha) * a.qddot + alpha * b.qddot;
  out.qdddot = a.qdddot;
  return out;
}

} // namespace shield::traj
