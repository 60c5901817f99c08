#include "shield/verify/shield.hpp"

#include <chrono>

namespace shield::verify {

SafetyShield::SafetyShield(const robot::RobotModel& model, const traj::JointPath& path,
                           const traj::ScalarLimits& limits, const Environment& env,
                           const ContactEnergyTable& table, const human::HumanConfig& humanCfg,
                           double dt, VerifyMode mode)
    : model_(model),
      path_(path),
      limits_(limits),
      env_(env),
      table_(table),
      humanCfg_(humanCfg),
      dt_(dt),
      mode_(mode),
      bounds_(robot::angularBounds(model)) {
  if (!(dt > 0.0)) throw std::invalid_argument("control period must be positive");
}

SafetyShield::StepResult SafetyShield::step(double tNow,
                                            const std::vector<human::BodyPart>& parts,
                                            double vTargetCap) {
  const double vTarget = std::min(limits_.vMax, vTargetCap);

  traj::ScalarState x0 = scalar_;
  traj::ScalarState x1 = traj::advanceScalar(x0, vTarget, limits_, dt_);
  x0.j = (x1.a - x0.a) / dt_;
  const std::vector<traj::ScalarState> brake = traj::stopProfile(x1, limits_, dt_);
  const traj::MonitoredTrajectory candidate =
      traj::buildMonitored(path_, {x0, x1}, brake, dt_, tNow);

  VerifyContext ctx{&model_, &bounds_, &env_, &table_, &humanCfg_};
  const auto t0 = std::chrono::steady_clock::now();
  const Verdict verdict = verify(candidate, ctx, parts, mode_);
  const auto t1 = std::chrono::steady_clock::now();

  StepResult res;
  res.verifySeconds = std::chrono::duration<double>(t1 - t0).count();
  res.verdict = verdict;
  if (verdict.safe) {
    scalar_ = x1;
    failsafe_.assign(brake.begin() + 1, brake.end());
    res.intendedAccepted = true;
    res.executed = candidate.steps[1];
    return res;
  }

  // continue the last verified braking trajectory (or stay at rest)
  if (!failsafe_.empty()) {
    scalar_ = failsafe_.front();
    failsafe_.pop_front();
  }
  traj::ScalarState hold = scalar_;
  if (failsafe_.empty()) hold.j = 0.0;
  res.executed = traj::mapScalarState(path_, hold, tNow + dt_);
  return res;
}

} // namespace shield::verify
