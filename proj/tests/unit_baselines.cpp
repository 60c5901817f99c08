#include <doctest.h>

#include <random>

#include "shield/baselines/methods.hpp"
#include "shield/geometry/distance.hpp"
#include "support/fixtures.hpp"

using namespace shield;
using namespace shield::fixtures;
using baselines::MethodId;

TEST_CASE("method identifiers round trip and classification") {
  const auto all = baselines::allMethods();
  CHECK(all.size() == 8);
  for (MethodId m : all) CHECK(static_cast<int>(baselines::methodIdFromString(toString(m))) == static_cast<int>(m));
  CHECK_THROWS(baselines::methodIdFromString("bogus"));

  CHECK(baselines::isProvablySafe(MethodId::sara));
  CHECK(baselines::isProvablySafe(MethodId::saraNoCfree));
  CHECK(baselines::isProvablySafe(MethodId::dynamicSSM));
  CHECK(!baselines::isProvablySafe(MethodId::noShield));
  CHECK(!baselines::isProvablySafe(MethodId::reducedSpeedPFL));
  CHECK(!baselines::isProvablySafe(MethodId::reflectedMass));

  CHECK(baselines::usesShield(MethodId::sara));
  CHECK(baselines::usesShield(MethodId::saraNoCfree));
  CHECK(baselines::usesShield(MethodId::dynamicSSM));
  CHECK(!baselines::usesShield(MethodId::ssmZone));
  CHECK(baselines::shieldMode(MethodId::sara) == verify::VerifyMode::full);
  CHECK(baselines::shieldMode(MethodId::saraNoCfree) == verify::VerifyMode::noCfree);
  CHECK(baselines::shieldMode(MethodId::dynamicSSM) == verify::VerifyMode::contactOnly);
}

TEST_CASE("zone boundaries are inclusive and measured to the capsule surface") {
  const Vec3 base = Vec3::Zero();
  const auto partAt = [](double dist, double radius) {
    return makePart("torso", human::BodyKind::torso, 0.4,
                    Capsule(Vec3(dist + radius, 0, 0), Vec3(dist + radius, 0, 0.5), radius));
  };

  CHECK(baselines::minBaseDistance({partAt(0.8, 0.1)}, base) == doctest::Approx(0.8));

  // stop zone at 1.17 m: exactly on the boundary still stops
  CHECK(baselines::ssmZoneStop({partAt(1.17, 0.1)}, base));
  CHECK(baselines::ssmZoneStop({partAt(1.0, 0.1)}, base));
  CHECK(!baselines::ssmZoneStop({partAt(1.171, 0.1)}, base));

  // reduced-speed zone at 0.73 m
  CHECK(baselines::reducedSpeedZoneActive({partAt(0.73, 0.05)}, base));
  CHECK(!baselines::reducedSpeedZoneActive({partAt(0.7301, 0.05)}, base));

  // nearest part decides
  CHECK(baselines::ssmZoneStop({partAt(2.0, 0.1), partAt(1.1, 0.1)}, base));
  CHECK(!baselines::reducedSpeedZoneActive({partAt(2.0, 0.1), partAt(1.1, 0.1)}, base));
}

TEST_CASE("cartesian speed cap bounds sampled robot point speeds") {
  const RobotModel m = make3Link();
  const auto ab = robot::angularBounds(m);
  std::mt19937 rng(51);
  const traj::JointPath path = randomPath(m, rng);
  for (double s : {0.5, 1.5, 2.5, 3.5}) {
    const auto perRate = baselines::pointSpeedPerRate(m, ab, path, s);
    REQUIRE(perRate.size() == 3);
    const double cap = baselines::cartesianSpeedCap(0.25, perRate);
    CHECK(cap > 0.0);
    // halving the speed limit halves the cap
    CHECK(baselines::cartesianSpeedCap(0.125, perRate) == doctest::Approx(0.5 * cap));

    // at path rate `cap`, every sampled capsule point stays at or below 0.25 m/s
    const robot::JointVector q = path.position(s);
    const robot::JointVector qdot = path.velocity(s) * cap;
    const auto fk = robot::forwardKinematics(m, q);
    for (int i = 0; i < 3; ++i) {
      for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const Vec3 p = fk[i].worldCapsule.p1 +
                       alpha * (fk[i].worldCapsule.p2 - fk[i].worldCapsule.p1);
        const Vec3 v = robot::linkJacobian(m, q, i, p).topRows(3) * qdot;
        CHECK(v.norm() <= 0.25 + 1e-9);
      }
    }
  }
}

TEST_CASE("reflected-mass cap keeps contact speeds within the energy budget") {
  const RobotModel m = make3Link();
  const auto ab = robot::angularBounds(m);
  std::mt19937 rng(52);
  const traj::JointPath path = randomPath(m, rng);
  const auto table = verify::ContactEnergyTable::defaults();
  const double s = 0.4 * path.length();
  const robot::JointVector q = path.position(s);
  const auto fk = robot::forwardKinematics(m, q);

  // a hand hovering near the end effector
  const Vec3 tip = fk[2].worldCapsule.p2;
  const auto hand = makePart("hand", human::BodyKind::hand, 0.205,
                             Capsule(tip + Vec3(0.15, 0, 0), tip + Vec3(0.2, 0, 0), 0.04));

  const auto perRate = baselines::pointSpeedPerRate(m, ab, path, s);
  const double cap = baselines::reflectedMassCap(m, q, {hand}, table, perRate);
  CHECK(cap > 0.0);
  CHECK(std::isfinite(cap));

  // independent check: for every link, the allowed Cartesian speed at the
  // governed rate obeys v <= sqrt(2 T_clamp / m_reflected) along the line to
  // the nearest part
  for (int i = 0; i < 3; ++i) {
    const Vec3 handMid = 0.5 * (hand.measuredCapsule.p1 + hand.measuredCapsule.p2);
    const Vec3 onLink =
        geo::closestPointOnSegment(fk[i].worldCapsule.p1, fk[i].worldCapsule.p2, handMid);
    Vec3 n = handMid - onLink;
    if (n.norm() < 1e-9) continue;
    n.normalize();
    double mRefl;
    try {
      mRefl = robot::reflectedMass(m, q, i, onLink, n);
    } catch (const robot::SingularityError&) {
      continue;
    }
    const double tClamp = table.threshold(hand.kind, m.links[i].worstCaseGeometry,
                                          verify::ContactType::clamp);
    const double vAllowed = std::sqrt(2.0 * tClamp / mRefl);
    CHECK(cap * perRate[i] <= vAllowed + 1e-9);
  }

  // with a quadrupled energy budget the cap doubles (v ~ sqrt(T))
  verify::ContactEnergyTable rich = table;
  for (auto g : {robot::GeometryClass::blunt, robot::GeometryClass::wedge,
                 robot::GeometryClass::edge, robot::GeometryClass::sheet})
    rich.set(human::BodyKind::hand, g, verify::ContactType::clamp,
             4.0 * table.threshold(human::BodyKind::hand, g, verify::ContactType::clamp));
  const double capRich = baselines::reflectedMassCap(m, q, {hand}, rich, perRate);
  CHECK(capRich == doctest::Approx(2.0 * cap).epsilon(1e-9));
}
