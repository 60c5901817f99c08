#pragma once

#include <string>
#include <vector>

#include "shield/baselines/methods.hpp"
#include "shield/sim/scenario.hpp"

namespace shield::sim {

struct StepLog {
  double time{0.0};
  robot::JointVector q, qdot;
  double pathProgress{0.0};
  bool intendedAccepted{true};
  double minHumanDistance{0.0};
  std::vector<double> linkEnergy;
  double verifySeconds{0.0};
  std::string verdictClass; // "safe" or the first violated constraint
};

struct RunResult {
  baselines::MethodId method{baselines::MethodId::noShield};
  double pathProgress{0.0};
  double efficiency{100.0}; // percent of noShield progress; 100 for noShield
  double meanVerifySeconds{0.0};
  std::vector<StepLog> log;
};

/// Deterministic fixed-step replay of one scenario under one method. The
/// human trace is open loop; the robot follows the intended path through the
/// method's governor or shield.
RunResult runScenario(const LoadedScenario& s, baselines::MethodId method);

/// Post-hoc ground-truth check of a finished run: wherever the interpolated
/// human capsules overlap the executed robot capsules, the contacting link's
/// effective energy must stay below the threshold of the true contact class.
struct AuditReport {
  int energyViolations{0};
  int contactInstants{0}; // steps with any human-robot overlap
};
AuditReport auditRun(const LoadedScenario& s, const RunResult& r);

/// Body-part snapshot from the latest trace measurements at time t.
std::vector<human::BodyPart> snapshotParts(const LoadedScenario& s, double t);

struct ReportRow {
  std::string scenario;
  std::string method;
  double efficiency{0.0};
  double pathProgress{0.0};
  int violations{0};
  int contactInstants{0};
  double meanVerifyMicros{0.0};
};

void writeReportCsv(const std::string& path, const std::vector<ReportRow>& rows);
void writeStepLogCsv(const std::string& path, const RunResult& r);

} // namespace shield::sim
