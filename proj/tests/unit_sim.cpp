#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "shield/sim/run.hpp"
#include "support/fixtures.hpp"

using namespace shield;
using namespace shield::fixtures;
using baselines::MethodId;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// In-code scenario: the 6-DoF arm sweeping between two configurations with
/// one static human part placed by the caller.
sim::LoadedScenario makeScenario(int horizon, bool moving) {
  sim::LoadedScenario ls;
  ls.scenario.name = "inline";
  ls.scenario.dt = 0.006;
  ls.scenario.horizon = horizon;
  ls.model = make6Dof();
  ls.table = verify::ContactEnergyTable::defaults();
  ls.humanCfg.maxSpeed = 1.6;
  ls.humanCfg.measError = 0.01;

  robot::JointVector a(6), b(6);
  a << 0.0, -0.4, 0.7, 0.0, 0.5, 0.0;
  b << 1.2, 0.3, 0.2, 0.3, 0.2, 0.3;
  if (!moving) b = a;
  ls.path = traj::JointPath({0.0, 3.0}, {a, b});
  ls.limits = ls.path.deriveScalarLimits(ls.model);
  return ls;
}

void addStaticPart(sim::LoadedScenario& ls, const std::string& id, human::BodyKind kind,
                   double diameter, const Capsule& c) {
  ls.partTemplates[id] = makePart(id, kind, diameter, c);
  ls.trace.addSample(0, id, 0.0, c);
  ls.trace.addSample(0, id, 1000.0, c);
}

} // namespace

TEST_CASE("replay is deterministic") {
  sim::LoadedScenario ls = makeScenario(200, true);
  // a bystander near, but not in, the sweep
  addStaticPart(ls, "torso", human::BodyKind::torso, 0.4,
                Capsule({1.3, 0.9, 0.6}, {1.3, 0.9, 1.2}, 0.18));

  for (MethodId m : {MethodId::noShield, MethodId::sara, MethodId::reflectedMass}) {
    const auto r1 = sim::runScenario(ls, m);
    const auto r2 = sim::runScenario(ls, m);
    REQUIRE(r1.log.size() == r2.log.size());
    CHECK(r1.pathProgress == r2.pathProgress);
    for (std::size_t k = 0; k < r1.log.size(); ++k) {
      CHECK((r1.log[k].q - r2.log[k].q).norm() == 0.0);
      CHECK((r1.log[k].qdot - r2.log[k].qdot).norm() == 0.0);
      CHECK(r1.log[k].pathProgress == r2.log[k].pathProgress);
    }
    // byte-identical step logs once the wall-clock timing column (the only
    // non-replayed quantity) is masked out
    auto r1m = r1, r2m = r2;
    for (auto& e : r1m.log) e.verifySeconds = 0.0;
    for (auto& e : r2m.log) e.verifySeconds = 0.0;
    sim::writeStepLogCsv("/tmp/shield_det_a.csv", r1m);
    sim::writeStepLogCsv("/tmp/shield_det_b.csv", r2m);
    CHECK(slurp("/tmp/shield_det_a.csv") == slurp("/tmp/shield_det_b.csv"));
    // the writer itself is deterministic for identical inputs
    sim::writeStepLogCsv("/tmp/shield_det_b.csv", r1m);
    CHECK(slurp("/tmp/shield_det_a.csv") == slurp("/tmp/shield_det_b.csv"));
  }
  std::remove("/tmp/shield_det_a.csv");
  std::remove("/tmp/shield_det_b.csv");
}

TEST_CASE("unshielded run traverses the path; audit flags real contact") {
  sim::LoadedScenario ls = makeScenario(700, true);
  const auto clean = sim::runScenario(ls, MethodId::noShield);
  CHECK(clean.pathProgress >= 3.0); // reaches the end of the path
  const auto cleanAudit = sim::auditRun(ls, clean);
  CHECK(cleanAudit.energyViolations == 0);
  CHECK(cleanAudit.contactInstants == 0);

  // a head resting in the middle of the sweep: the unshielded run hits it at
  // speed, which the audit must flag
  const auto fkMid = robot::forwardKinematics(ls.model, ls.path.position(1.5));
  const Vec3 tip = fkMid[5].worldCapsule.p2;
  addStaticPart(ls, "head", human::BodyKind::head, 0.205,
                Capsule(tip, tip + Vec3(0, 0, 0.15), 0.10));
  const auto hit = sim::runScenario(ls, MethodId::noShield);
  const auto audit = sim::auditRun(ls, hit);
  CHECK(audit.contactInstants > 0);
  CHECK(audit.energyViolations > 0);

  // the full shield on the same scene audits clean
  const auto shielded = sim::runScenario(ls, MethodId::sara);
  const auto shieldedAudit = sim::auditRun(ls, shielded);
  CHECK(shieldedAudit.energyViolations == 0);
  CHECK(shielded.pathProgress < hit.pathProgress);

  // the pure-separation shield additionally never touches
  const auto separated = sim::runScenario(ls, MethodId::dynamicSSM);
  CHECK(sim::auditRun(ls, separated).contactInstants == 0);
}

TEST_CASE("a stationary robot in contact is not an energy violation") {
  sim::LoadedScenario ls = makeScenario(150, false);
  const auto fk = robot::forwardKinematics(ls.model, ls.path.position(0.0));
  const Vec3 tip = fk[5].worldCapsule.p2;
  addStaticPart(ls, "head", human::BodyKind::head, 0.205,
                Capsule(tip, tip + Vec3(0, 0, 0.15), 0.10));
  const auto r = sim::runScenario(ls, MethodId::noShield);
  const auto audit = sim::auditRun(ls, r);
  CHECK(audit.contactInstants == 150); // overlapping the whole run
  CHECK(audit.energyViolations == 0);  // but at zero kinetic energy
}

TEST_CASE("part snapshots use the latest measurement and reject unknown parts") {
  sim::LoadedScenario ls = makeScenario(10, true);
  ls.partTemplates["hand"] = makePart("hand", human::BodyKind::hand, 0.205, Capsule());
  ls.trace.addSample(0, "hand", 0.5, Capsule({1, 0, 1}, {1, 0, 1}, 0.05));
  ls.trace.addSample(0, "hand", 1.0, Capsule({2, 0, 1}, {2, 0, 1}, 0.05));

  CHECK(sim::snapshotParts(ls, 0.2).empty()); // nothing observed yet
  auto parts = sim::snapshotParts(ls, 0.7);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].measurementTime == 0.5);
  CHECK((parts[0].measuredCapsule.p1 - Vec3(1, 0, 1)).norm() == 0.0);
  parts = sim::snapshotParts(ls, 3.0);
  CHECK(parts[0].measurementTime == 1.0);

  ls.trace.addSample(0, "mystery", 0.0, Capsule());
  CHECK_THROWS_WITH_AS(static_cast<void>(sim::snapshotParts(ls, 1.0)),
                       doctest::Contains("mystery"), std::runtime_error);
}

TEST_CASE("report and step-log CSV layout") {
  std::vector<sim::ReportRow> rows{{"scene", "sara", 85.5, 2.5, 0, 0, 3120.0}};
  sim::writeReportCsv("/tmp/shield_report.csv", rows);
  const std::string report = slurp("/tmp/shield_report.csv");
  CHECK(report.find("scenario,method,efficiency_pct,path_progress,violations,"
                    "contact_instants,mean_verify_us") == 0);
  CHECK(report.find("scene,sara,85.5,2.5,0,0,3120") != std::string::npos);
  std::remove("/tmp/shield_report.csv");

  sim::LoadedScenario ls = makeScenario(5, true);
  const auto r = sim::runScenario(ls, MethodId::noShield);
  sim::writeStepLogCsv("/tmp/shield_steplog.csv", r);
  const std::string log = slurp("/tmp/shield_steplog.csv");
  CHECK(log.find("time_s,path_s,accepted,min_human_dist_m,max_link_energy_j,verify_us,verdict,"
                 "q0,q1,q2,q3,q4,q5") == 0);
  CHECK(std::count(log.begin(), log.end(), '\n') == 6); // header + 5 steps
  std::remove("/tmp/shield_steplog.csv");
}

TEST_CASE("bundled scenario files load and replay end to end") {
  auto scenario =
      sim::Scenario::loadFromYamlFile(std::string(SHIELD_SCENARIO_DIR) + "/pack/far.yaml");
  scenario.horizon = 150;
  const auto ls = sim::loadScenario(scenario);
  CHECK(ls.model.dof() == 6);
  CHECK(!ls.env.elements.empty());
  CHECK(ls.partTemplates.size() == 16);
  CHECK(!ls.trace.empty());

  const auto base = sim::runScenario(ls, MethodId::noShield);
  const auto shielded = sim::runScenario(ls, MethodId::sara);
  // the human is far away: the shield should not cost any progress
  CHECK(shielded.pathProgress == doctest::Approx(base.pathProgress).epsilon(1e-6));
  CHECK(shielded.meanVerifySeconds > 0.0);
  CHECK(sim::auditRun(ls, shielded).energyViolations == 0);
}
