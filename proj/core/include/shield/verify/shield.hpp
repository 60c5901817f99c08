#pragma once

#include <deque>
#include <limits>

#include "shield/traj/monitored.hpp"
#include "shield/traj/path.hpp"
#include "shield/verify/verify.hpp"

namespace shield::verify {

/// Intended/failsafe gate: each control period it proposes one more intended
/// step followed by a braking extension, verifies the whole candidate, and
/// falls back to the previously verified braking trajectory on failure.
/// Starting from rest, every executed state is therefore a prefix of some
/// verified trajectory.
class SafetyShield {
 public:
  SafetyShield(const robot::RobotModel& model, const traj::JointPath& path,
               const traj::ScalarLimits& limits, const Environment& env,
               const ContactEnergyTable& table, const human::HumanConfig& humanCfg, double dt,
               VerifyMode mode = VerifyMode::full);

  struct StepResult {
    traj::TrajectoryStep executed; // state at the end of the period
    bool intendedAccepted{false};
    double verifySeconds{0.0};
    Verdict verdict;
  };

  /// Advance one control period starting at tNow. vTargetCap additionally
  /// caps the commanded path speed (used by speed-governed baselines).
  StepResult step(double tNow, const std::vector<human::BodyPart>& parts,
                  double vTargetCap = std::numeric_limits<double>::infinity());

  const traj::ScalarState& scalarState() const { return scalar_; }
  double pathProgress() const { return scalar_.s; }
  bool atRest() const { return scalar_.v == 0.0 && scalar_.a == 0.0; }
  const robot::AngularBounds& angularBounds() const { return bounds_; }

 private:
  const robot::RobotModel& model_;
  const traj::JointPath& path_;
  traj::ScalarLimits limits_;
  const Environment& env_;
  const ContactEnergyTable& table_;
  const human::HumanConfig& humanCfg_;
  double dt_;
  VerifyMode mode_;
  robot::AngularBounds bounds_;

  traj::ScalarState scalar_{};                // executed state, starts at rest
  std::deque<traj::ScalarState> failsafe_;    // verified braking states ahead
};

} // namespace shield::verify
