#include <doctest.h>

#include "shield/geometry/distance.hpp"
#include "shield/human/body.hpp"
#include "shield/human/trace.hpp"
#include "support/fixtures.hpp"

using namespace shield;
using namespace shield::fixtures;
using human::BodyKind;
using human::BodyPart;
using human::HumanConfig;

TEST_CASE("occupancy prediction inflates by error plus reachable distance") {
  HumanConfig cfg;
  cfg.maxSpeed = 1.6;
  cfg.measError = 0.01;
  cfg.measDelay = 0.02;
  const BodyPart part =
      makePart("hand", BodyKind::hand, 0.205, Capsule({0, 0, 1}, {0.1, 0, 1}, 0.05));

  const Capsule occ = human::predictOccupancy(part, cfg, 0.0, 0.25);
  CHECK((occ.p1 - part.measuredCapsule.p1).norm() == 0.0);
  CHECK((occ.p2 - part.measuredCapsule.p2).norm() == 0.0);
  CHECK(occ.radius == doctest::Approx(0.05 + 0.01 + 1.6 * (0.25 + 0.02)));

  // occupancy grows with the horizon and never shrinks below the measurement
  CHECK(human::predictOccupancy(part, cfg, 0.0, 0.0).radius == doctest::Approx(0.05 + 0.01 + 1.6 * 0.02));
  CHECK_THROWS_AS(human::predictOccupancy(part, cfg, 0.2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(human::predictOccupancy(part, cfg, -0.1, 0.1), std::invalid_argument);
}

TEST_CASE("contact graph connects intersecting occupancies unless the pair is safe") {
  HumanConfig cfg;
  std::vector<BodyPart> parts = {
      makePart("a", BodyKind::hand, 0.2, Capsule({0, 0, 0}, {0, 0, 0}, 0.1)),
      makePart("b", BodyKind::head, 0.2, Capsule({0.15, 0, 0}, {0.15, 0, 0}, 0.1)),
      makePart("c", BodyKind::torso, 0.4, Capsule({5, 0, 0}, {5, 0, 0}, 0.1)),
  };
  std::vector<Capsule> occ;
  for (const auto& p : parts) occ.push_back(p.measuredCapsule);

  auto g = human::buildContactGraph(parts, occ, cfg);
  CHECK(g.adjacency[0] == std::vector<int>{1});
  CHECK(g.adjacency[1] == std::vector<int>{0});
  CHECK(g.adjacency[2].empty());

  // marking the overlapping pair safe removes the edge
  cfg.safePairs.insert({"a", "b"});
  g = human::buildContactGraph(parts, occ, cfg);
  CHECK(g.adjacency[0].empty());

  // safe pairs never apply across humans
  parts[1].humanId = 1;
  g = human::buildContactGraph(parts, occ, cfg);
  CHECK(g.adjacency[0] == std::vector<int>{1});
}

TEST_CASE("combined body parts are connected components with summed diameters") {
  HumanConfig cfg;
  // chain a-b-c plus isolated d: one combined part {a,b,c}
  std::vector<BodyPart> parts = {
      makePart("a", BodyKind::hand, 0.2, Capsule({0, 0, 0}, {0, 0, 0}, 0.1)),
      makePart("b", BodyKind::lowerArm, 0.1, Capsule({0.15, 0, 0}, {0.15, 0, 0}, 0.1)),
      makePart("c", BodyKind::head, 0.3, Capsule({0.30, 0, 0}, {0.30, 0, 0}, 0.1)),
      makePart("d", BodyKind::torso, 0.4, Capsule({9, 0, 0}, {9, 0, 0}, 0.1)),
  };
  std::vector<Capsule> occ;
  for (const auto& p : parts) occ.push_back(p.measuredCapsule);
  // a-c do not touch directly; connectivity comes through b
  CHECK(!geo::capsuleIntersectsCapsule(occ[0], occ[2]));

  const auto g = human::buildContactGraph(parts, occ, cfg);
  const auto combined = human::combinedBodyParts(g, parts, occ);
  REQUIRE(combined.size() == 1);
  CHECK(combined[0].members == std::vector<int>{0, 1, 2});
  CHECK(combined[0].diameter == doctest::Approx(0.6));
  CHECK(combined[0].occupancy.size() == 3);
}

TEST_CASE("human configuration file: clampable pairs imply all other pairs safe") {
  std::map<std::string, BodyPart> templates;
  const HumanConfig cfg = HumanConfig::loadFromYamlFile(
      std::string(SHIELD_SCENARIO_DIR) + "/human_16part.yaml", &templates);
  CHECK(cfg.maxSpeed == doctest::Approx(1.6));
  CHECK(templates.size() == 16);
  CHECK(static_cast<int>(templates.at("head").kind) == static_cast<int>(BodyKind::head));
  CHECK(static_cast<int>(templates.at("l_lower_leg").kind) == static_cast<int>(BodyKind::other));
  CHECK(templates.at("torso").diameter == doctest::Approx(0.40));

  const auto part = [&](const std::string& id, int humanId = 0) {
    BodyPart p = templates.at(id);
    p.humanId = humanId;
    return p;
  };
  // listed clampable combinations are not safe
  CHECK(!cfg.isSafePair(part("l_hand"), part("r_hand")));
  CHECK(!cfg.isSafePair(part("r_hand"), part("head")));
  CHECK(!cfg.isSafePair(part("l_lower_arm"), part("r_lower_arm")));
  // every other same-human pair is safe
  CHECK(cfg.isSafePair(part("l_hand"), part("torso")));
  CHECK(cfg.isSafePair(part("head"), part("r_foot")));
  CHECK(cfg.isSafePair(part("l_upper_arm"), part("r_upper_arm")));
  // different humans are never a safe pair
  CHECK(!cfg.isSafePair(part("l_hand"), part("torso", 1)));
}

TEST_CASE("trace measurement and interpolation") {
  human::HumanTrace trace;
  trace.addSample(0, "hand", 0.0, Capsule({0, 0, 0}, {0.1, 0, 0}, 0.05));
  trace.addSample(0, "hand", 1.0, Capsule({1, 0, 0}, {1.1, 0, 0}, 0.05));

  CHECK(!trace.measurementAt(0, "hand", -0.1));
  CHECK(trace.measurementAt(0, "hand", 0.4)->time == 0.0);
  CHECK(trace.measurementAt(0, "hand", 1.7)->time == 1.0);
  CHECK(!trace.measurementAt(1, "hand", 0.5));

  const auto mid = trace.interpolateAt(0, "hand", 0.25);
  REQUIRE(mid);
  CHECK((mid->p1 - geo::Vec3(0.25, 0, 0)).norm() < 1e-12);
  CHECK((mid->p2 - geo::Vec3(0.35, 0, 0)).norm() < 1e-12);
  // clamped outside the recorded range
  CHECK((trace.interpolateAt(0, "hand", 5.0)->p1 - geo::Vec3(1, 0, 0)).norm() < 1e-12);
}

TEST_CASE("trace CSV round trip") {
  human::HumanTrace trace;
  trace.addSample(0, "hand", 0.0, Capsule({0.1, 0.2, 0.3}, {0.4, 0.5, 0.6}, 0.05));
  trace.addSample(1, "torso", 0.5, Capsule({1, 1, 1}, {1, 1, 1.6}, 0.18));
  const std::string path = "/tmp/shield_trace_roundtrip.csv";
  trace.saveToCsvFile(path);
  const auto back = human::HumanTrace::loadFromCsvFile(path);
  REQUIRE(back.channels().size() == 2);
  const auto& hand = back.channels().at({0, "hand"});
  REQUIRE(hand.size() == 1);
  CHECK((hand[0].capsule.p1 - geo::Vec3(0.1, 0.2, 0.3)).norm() < 1e-9);
  CHECK(hand[0].capsule.radius == doctest::Approx(0.05));
  CHECK(back.channels().count({1, "torso"}) == 1);
}
