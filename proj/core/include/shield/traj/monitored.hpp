#pragma once

#include <vector>

#include "shield/robot/model.hpp"
#include "shield/traj/path.hpp"
#include "shield/traj/scalar_profile.hpp"

namespace shield::traj {

/// One sampled joint-space trajectory step.
struct TrajectoryStep {
  double t{0.0};
  JointVector q, qdot, qddot, qdddot;
};

/// Candidate motion submitted for verification: a short intended segment
/// followed by a braking extension along the same path, ending at rest.
struct MonitoredTrajectory {
  std::vector<TrajectoryStep> steps; // uniform spacing dt
  double dt{0.0};
  int splitIndex{0}; // first step of the failsafe extension

  int size() const { return static_cast<int>(steps.size()); }
};

/// Map a scalar time-scaling state through the path to a joint-space step
/// via the chain rule.
TrajectoryStep mapScalarState(const JointPath& path, const ScalarState& x, double t);

/// Assemble the monitored trajectory from already-sampled scalar states:
/// intended states first, then the braking tail (its first state must equal
/// the last intended state; the duplicate is dropped).
MonitoredTrajectory buildMonitored(const JointPath& path, const std::vector<ScalarState>& intended,
                                   const std::vector<ScalarState>& failsafe, double dt,
                                   double tStart);

/// Joint state at fraction alpha in [0,1] between steps k and k+1 assuming
/// constant jerk steps[k].qdddot over the interval.
TrajectoryStep interpolateStep(const MonitoredTrajectory& traj, int k, double alpha);

} // namespace shield::traj
