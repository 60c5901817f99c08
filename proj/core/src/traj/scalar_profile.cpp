#include "shield/traj/scalar_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shield::traj {

ScalarState advanceScalar(const ScalarState& x, double vTarget, const ScalarLimits& lim,
                          double dt) {
  vTarget = std::clamp(vTarget, 0.0, lim.vMax);
  const double dv = vTarget - x.v;
  // Acceleration from which the jerk limit can still ramp back to zero
  // exactly when v reaches the target.
  const double sgn = (dv >= 0.0) ? 1.0 : -1.0;
  const double aDes = sgn * std::min(lim.aMax, std::sqrt(2.0 * lim.jMax * std::abs(dv)));
  const double j = std::clamp((aDes - x.a) / dt, -lim.jMax, lim.jMax);

  ScalarState out;
  out.a = std::clamp(x.a + j * dt, -lim.aMax, lim.aMax);
  out.v = x.v + x.a * dt + 0.5 * j * dt * dt;
  // braking never reverses the path parameter
  out.s = std::max(x.s, x.s + x.v * dt + 0.5 * x.a * dt * dt + j * dt * dt * dt / 6.0);
  out.j = 0.0;

  // snap to rest once both speed and acceleration are within one discrete
  // jerk-limited step of zero (the implied snap jerk stays within ~3 jMax)
  const double restBand = std::max(1e-9, 2.0 * lim.jMax * dt * dt);
  if (vTarget == 0.0 && out.v <= restBand && std::abs(out.a) <= 2.0 * lim.jMax * dt) {
    out.v = 0.0;
    out.a = 0.0;
  } else if (std::abs(out.v - vTarget) < 1e-9 && std::abs(out.a) < 1e-6) {
    out.v = vTarget;
    out.a = 0.0;
  }
  out.v = std::clamp(out.v, 0.0, lim.vMax);
  return out;
}

std::vector<ScalarState> stopProfile(const ScalarState& x, const ScalarLimits& lim, double dt,
                                     int maxSteps) {
  std::vector<ScalarState> out{x};
  if (x.v == 0.0 && x.a == 0.0) return out;
  ScalarState cur = x;
  for (int k = 0; k < maxSteps; ++k) {
    ScalarState next = advanceScalar(cur, 0.0, lim, dt);
    out.back().j = (next.a - cur.a) / dt;
    out.push_back(next);
    cur = next;
    if (cur.v == 0.0 && cur.a == 0.0) return out;
  }
  throw std::runtime_error("stop profile did not terminate");
}

} // namespace shield::traj
