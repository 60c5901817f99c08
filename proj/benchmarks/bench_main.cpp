// Microbenchmarks for the geometry kernels, robot dynamics quantities, and
// the full per-step trajectory verification.

#include <benchmark/benchmark.h>

#include <random>

#include "shield/geometry/distance.hpp"
#include "shield/robot/model.hpp"
#include "shield/traj/monitored.hpp"
#include "shield/traj/reach.hpp"
#include "shield/traj/scalar_profile.hpp"
#include "shield/verify/verify.hpp"
#include "../tests/support/fixtures.hpp"

using namespace shield;
using namespace shield::fixtures;

namespace {

std::vector<geo::Capsule> randomCapsules(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0), ur(0.02, 0.3);
  std::vector<geo::Capsule> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k)
    out.emplace_back(Vec3(u(rng), u(rng), u(rng)), Vec3(u(rng), u(rng), u(rng)), ur(rng));
  return out;
}

void BM_CapsuleCapsuleDistance(benchmark::State& state) {
  const auto caps = randomCapsules(256, 1);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        geo::capsuleCapsuleDistance(caps[k % caps.size()], caps[(k + 7) % caps.size()]));
    ++k;
  }
}
BENCHMARK(BM_CapsuleCapsuleDistance);

void BM_CapsulePolytopeDistance(benchmark::State& state) {
  const auto caps = randomCapsules(256, 2);
  const geo::Polytope box = geo::Polytope::axisAlignedBox({-0.4, -0.4, 0.0}, {0.4, 0.4, 0.5});
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(geo::capsulePolytopeDistance(caps[k % caps.size()], box));
    ++k;
  }
}
BENCHMARK(BM_CapsulePolytopeDistance);

void BM_ActiveHalfspaces(benchmark::State& state) {
  const auto caps = randomCapsules(256, 3);
  const geo::Polytope box = geo::Polytope::axisAlignedBox({-0.4, -0.4, 0.0}, {0.4, 0.4, 0.5});
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(geo::activeHalfspaces(caps[k % caps.size()], box));
    ++k;
  }
}
BENCHMARK(BM_ActiveHalfspaces);

void BM_ForwardKinematics6Dof(benchmark::State& state) {
  const RobotModel m = make6Dof();
  std::mt19937 rng(4);
  const robot::JointVector q = randomVector(m.dof(), rng, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(robot::forwardKinematics(m, q));
}
BENCHMARK(BM_ForwardKinematics6Dof);

void BM_InertiaMatrix6Dof(benchmark::State& state) {
  const RobotModel m = make6Dof();
  std::mt19937 rng(5);
  const robot::JointVector q = randomVector(m.dof(), rng, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(robot::inertiaMatrix(m, q));
}
BENCHMARK(BM_InertiaMatrix6Dof);

void BM_EffectiveEnergy6Dof(benchmark::State& state) {
  const RobotModel m = make6Dof();
  std::mt19937 rng(6);
  const robot::JointVector q = randomVector(m.dof(), rng, 1.5);
  const robot::JointVector qdot = randomVector(m.dof(), rng, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(robot::effectiveEnergy(m, q, qdot, m.dof() - 1));
}
BENCHMARK(BM_EffectiveEnergy6Dof);

void BM_ReflectedMass6Dof(benchmark::State& state) {
  const RobotModel m = make6Dof();
  std::mt19937 rng(7);
  const robot::JointVector q = randomVector(m.dof(), rng, 1.0);
  const Vec3 p = robot::forwardKinematics(m, q).back().worldCapsule.p2;
  for (auto _ : state)
    benchmark::DoNotOptimize(robot::reflectedMass(m, q, m.dof() - 1, p, Vec3::UnitX()));
}
BENCHMARK(BM_ReflectedMass6Dof);

/// A full monitored-trajectory setup for the 6-DoF arm: intended step plus
/// braking tail, a 16-part human, and a 3-element environment.
struct VerifyFixture {
  RobotModel model = make6Dof();
  robot::AngularBounds ab = robot::angularBounds(model);
  traj::JointPath path;
  traj::MonitoredTrajectory traj;
  verify::Environment env;
  verify::ContactEnergyTable table = verify::ContactEnergyTable::defaults();
  human::HumanConfig cfg;
  std::vector<human::BodyPart> parts;

  VerifyFixture() {
    std::mt19937 rng(8);
    traj::ScalarLimits lim;
    path = randomFeasiblePath(model, rng, &lim);
    traj::ScalarState x0{0.2 * path.length(), 0.5 * lim.vMax, 0.0, 0.0};
    const traj::ScalarState x1 = traj::advanceScalar(x0, lim.vMax, lim, 0.006);
    traj = traj::buildMonitored(path, {x0, x1}, traj::stopProfile(x1, lim, 0.006), 0.006, 0.0);

    env.elements.push_back({"floor", geo::Polytope::halfspace(Vec3::UnitZ(), 0.0)});
    env.elements.push_back(
        {"table", geo::Polytope::axisAlignedBox({0.3, -0.45, 0.0}, {0.85, 0.45, 0.3})});
    env.elements.push_back(
        {"wall", geo::Polytope::axisAlignedBox({-1.2, -1.5, 0.0}, {-1.1, 1.5, 2.0})});

    cfg.maxSpeed = 1.6;
    cfg.measError = 0.01;
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    const std::vector<human::BodyKind> kinds{human::BodyKind::hand, human::BodyKind::lowerArm,
                                             human::BodyKind::upperArm, human::BodyKind::torso,
                                             human::BodyKind::head, human::BodyKind::other};
    for (int p = 0; p < 16; ++p) {
      const Vec3 base(0.9 + u(rng), u(rng), 0.6 + u(rng));
      parts.push_back(makePart("p" + std::to_string(p), kinds[p % kinds.size()], 0.15,
                               Capsule(base, base + Vec3(0, 0, 0.2), 0.06)));
    }
  }

  verify::VerifyContext context() const { return {&model, &ab, &env, &table, &cfg}; }
};

void BM_LinkIntervals6Dof(benchmark::State& state) {
  const VerifyFixture f;
  for (auto _ : state) benchmark::DoNotOptimize(traj::linkIntervals(f.model, f.ab, f.traj, 0));
}
BENCHMARK(BM_LinkIntervals6Dof);

void BM_VerifyStepFull(benchmark::State& state) {
  const VerifyFixture f;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify::verify(f.traj, f.context(), f.parts, verify::VerifyMode::full));
}
BENCHMARK(BM_VerifyStepFull);

void BM_VerifyStepContactOnly(benchmark::State& state) {
  const VerifyFixture f;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        verify::verify(f.traj, f.context(), f.parts, verify::VerifyMode::contactOnly));
}
BENCHMARK(BM_VerifyStepContactOnly);

} // namespace

BENCHMARK_MAIN();
