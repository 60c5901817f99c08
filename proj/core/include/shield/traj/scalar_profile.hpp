#pragma once

#include <vector>

namespace shield::traj {

/// State of a 1-D time-scaling parameter.
struct ScalarState {
  double s{0.0};
  double v{0.0};
  double a{0.0};
  double j{0.0}; // jerk applied over the step starting at this state
};

struct ScalarLimits {
  double vMax{1.0};
  double aMax{1.0};
  double jMax{1.0};
};

/// One jerk-limited control step toward vTarget. Snaps exactly to rest when
/// the braking target is reached.
ScalarState advanceScalar(const ScalarState& x, double vTarget, const ScalarLimits& lim,
                          double dt);

/// Braking profile sampled at dt, starting with x itself and ending with an
/// exact (v = 0, a = 0) state. Returns {x} when already stopped.
std::vector<ScalarState> stopProfile(const ScalarState& x, const ScalarLimits& lim, double dt,
                                     int maxSteps = 100000);

} // namespace shield::traj
