#include "shield/sim/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "shield/geometry/distance.hpp"
#include "shield/verify/shield.hpp"

namespace shield::sim {

using baselines::MethodId;
using geo::Capsule;
using geo::Vec3;

std::vector<human::BodyPart> snapshotParts(const LoadedScenario& s, double t) {
  std::vector<human::BodyPart> parts;
  for (const auto& [key, chan] : s.trace.channels()) {
    const auto sample = s.trace.measurementAt(key.first, key.second, t);
    if (!sample) continue; // part not yet observed
    const auto it = s.partTemplates.find(key.second);
    if (it == s.partTemplates.end())
      throw std::runtime_error("trace references unknown body part: " + key.second);
    human::BodyPart p = it->second;
    p.humanId = key.first;
    p.measuredCapsule = sample->capsule;
    p.measurementTime = sample->time;
    parts.push_back(std::move(p));
  }
  return parts;
}

namespace {

double minHumanDistance(const robot::RobotModel& model, const robot::JointVector& q,
                        const std::vector<human::BodyPart>& parts) {
  if (parts.empty()) return std::numeric_limits<double>::infinity();
  const auto fk = robot::forwardKinematics(model, q);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : fk) {
    for (const auto& p : parts)
      best = std::min(best, geo::capsuleCapsuleDistance(f.worldCapsule, p.measuredCapsule));
  }
  return best;
}

std::vector<double> linkEnergies(const robot::RobotModel& model, const robot::JointVector& q,
                                 const robot::JointVector& qdot) {
  const Eigen::MatrixXd inertia = robot::inertiaMatrix(model, q);
  std::vector<double> e(model.dof());
  for (int i = 0; i < model.dof(); ++i)
    e[i] = robot::effectiveEnergyFromInertia(inertia, qdot, i);
  return e;
}

std::string verdictLabel(const verify::Verdict& v) {
  if (v.safe) return "safe";
  switch (v.firstViolation->tag) {
    case verify::ViolationTag::freeEnergy: return "freeEnergy";
    case verify::ViolationTag::clampEnergy: return "clampEnergy";
    case verify::ViolationTag::contact: return "contact";
  }
  return "unknown";
}

} // namespace

RunResult runScenario(const LoadedScenario& s, MethodId method) {
  const auto& model = s.model;
  const robot::AngularBounds bounds = robot::angularBounds(model);
  const Vec3 base = Vec3::Zero();
  const double dt = s.scenario.dt;

  RunResult result;
  result.method = method;
  result.log.reserve(s.scenario.horizon);

  std::optional<verify::SafetyShield> shield;
  if (baselines::usesShield(method)) {
    shield.emplace(model, s.path, s.limits, s.env, s.table, s.humanCfg, dt,
                   baselines::shieldMode(method));
  }
  traj::ScalarState scalar; // governor-driven state (non-shield methods)

  double verifyTotal = 0.0;
  int verifyCount = 0;
  for (int k = 0; k < s.scenario.horizon; ++k) {
    const double tNow = k * dt;
    const auto parts = snapshotParts(s, tNow);
    const double progress = shield ? shield->pathProgress() : scalar.s;

    double cap = std::numeric_limits<double>::infinity();
    switch (method) {
      case MethodId::noShield:
        break;
      case MethodId::ssmZone:
        if (!parts.empty() && baselines::ssmZoneStop(parts, base)) cap = 0.0;
        break;
      case MethodId::reducedSpeedPFL:
        cap = baselines::cartesianSpeedCap(
            0.25, baselines::pointSpeedPerRate(model, bounds, s.path, progress));
        break;
      case MethodId::reducedSpeedZone:
        if (!parts.empty() && baselines::reducedSpeedZoneActive(parts, base))
          cap = baselines::cartesianSpeedCap(
              0.25, baselines::pointSpeedPerRate(model, bounds, s.path, progress));
        break;
      case MethodId::reflectedMass:
        if (!parts.empty())
          cap = baselines::reflectedMassCap(
              model, s.path.position(progress), parts, s.table,
              baselines::pointSpeedPerRate(model, bounds, s.path, progress));
        break;
      case MethodId::dynamicSSM:
      case MethodId::saraNoCfree:
      case MethodId::sara:
        break;
    }

    StepLog entry;
    entry.time = tNow + dt; // state at the end of the period
    if (shield) {
      const auto res = shield->step(tNow, parts, cap);
      entry.q = res.executed.q;
      entry.qdot = res.executed.qdot;
      entry.pathProgress = shield->pathProgress();
      entry.intendedAccepted = res.intendedAccepted;
      entry.verifySeconds = res.verifySeconds;
      entry.verdictClass = verdictLabel(res.verdict);
      verifyTotal += res.verifySeconds;
      ++verifyCount;
    } else {
      scalar = traj::advanceScalar(scalar, std::min(s.limits.vMax, cap), s.limits, dt);
      const auto step = traj::mapScalarState(s.path, scalar, tNow + dt);
      entry.q = step.q;
      entry.qdot = step.qdot;
      entry.pathProgress = scalar.s;
      entry.intendedAccepted = true;
      entry.verdictClass = "safe";
    }
    entry.minHumanDistance = minHumanDistance(model, entry.q, parts);
    entry.linkEnergy = linkEnergies(model, entry.q, entry.qdot);
    result.log.push_back(std::move(entry));
  }

  result.pathProgress = result.log.empty() ? 0.0 : result.log.back().pathProgress;
  result.meanVerifySeconds = verifyCount > 0 ? verifyTotal / verifyCount : 0.0;
  return result;
}

AuditReport auditRun(const LoadedScenario& s, const RunResult& r) {
  AuditReport report;
  const auto& model = s.model;
  for (std::size_t k = 0; k < r.log.size(); ++k) {
    const StepLog& entry = r.log[k];
    const auto fk = robot::forwardKinematics(model, entry.q);
    const auto fkNext = (k + 1 < r.log.size()) ? robot::forwardKinematics(model, r.log[k + 1].q)
                                               : fk;
    bool anyContact = false;
    for (const auto& [key, chan] : s.trace.channels()) {
      const auto cap = s.trace.interpolateAt(key.first, key.second, entry.time);
      if (!cap) continue;
      const auto it = s.partTemplates.find(key.second);
      if (it == s.partTemplates.end()) continue;
      const human::BodyPart& tmpl = it->second;

      for (int i = 0; i < model.dof(); ++i) {
        if (!geo::capsuleIntersectsCapsule(fk[i].worldCapsule, *cap)) continue;
        anyContact = true;

        // true contact class: constrained when a counter-body is within the
        // part diameter and the gap is not opening
        bool constrained = false;
        for (const auto& el : s.env.elements) {
          const double dNow = geo::capsulePolytopeDistance(fk[i].worldCapsule, el.shape);
          if (dNow > tmpl.diameter) continue;
          const double dNext = geo::capsulePolytopeDistance(fkNext[i].worldCapsule, el.shape);
          if (dNext <= dNow + 1e-12) {
            constrained = true;
            break;
          }
        }
        if (!constrained) {
          for (int l = 0; l < model.dof() && !constrained; ++l) {
            if (l == i || model.isExcludedPair(i, l)) continue;
            const double dNow =
                geo::capsuleCapsuleDistance(fk[i].worldCapsule, fk[l].worldCapsule);
            if (dNow > tmpl.diameter) continue;
            const double dNext =
                geo::capsuleCapsuleDistance(fkNext[i].worldCapsule, fkNext[l].worldCapsule);
            if (dNext <= dNow + 1e-12) constrained = true;
          }
        }
        const double threshold = s.table.threshold(
            tmpl.kind, model.links[i].worstCaseGeometry,
            constrained ? verify::ContactType::clamp : verify::ContactType::unconstrained);
        if (entry.linkEnergy[i] >= threshold) ++report.energyViolations;
      }
    }
    if (anyContact) ++report.contactInstants;
  }
  return report;
}

void writeReportCsv(const std::string& path, const std::vector<ReportRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  out << "scenario,method,efficiency_pct,path_progress,violations,contact_instants,"
         "mean_verify_us\n";
  out.precision(10);
  for (const auto& r : rows) {
    out << r.scenario << ',' << r.method << ',' << r.efficiency << ',' << r.pathProgress << ','
        << r.violations << ',' << r.contactInstants << ',' << r.meanVerifyMicros << '\n';
  }
}

void writeStepLogCsv(const std::string& path, const RunResult& r) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write step log: " + path);
  out << "time_s,path_s,accepted,min_human_dist_m,max_link_energy_j,verify_us,verdict";
  const int dof = r.log.empty() ? 0 : static_cast<int>(r.log.front().q.size());
  for (int j = 0; j < dof; ++j) out << ",q" << j;
  out << '\n';
  out.precision(10);
  for (const auto& e : r.log) {
    const double eMax =
        e.linkEnergy.empty() ? 0.0 : *std::max_element(e.linkEnergy.begin(), e.linkEnergy.end());
    out << e.time << ',' << e.pathProgress << ',' << (e.intendedAccepted ? 1 : 0) << ','
        << e.minHumanDistance << ',' << eMax << ',' << e.verifySeconds * 1e6 << ','
        << e.verdictClass;
    for (int j = 0; j < dof; ++j) out << ',' << e.q[j];
    out << '\n';
  }
}

} // namespace shield::sim
