#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "shield/geometry/types.hpp"

namespace shield::human {

using geo::Capsule;
using geo::Vec3;

enum class BodyKind { hand, lowerArm, upperArm, torso, head, other };

BodyKind bodyKindFromString(const std::string& s);
std::string toString(BodyKind k);

struct BodyPart {
  std::string id;
  BodyKind kind{BodyKind::other};
  double diameter{0.0}; // m, upper bound for the clamped dimension
  int humanId{0};
  Capsule measuredCapsule;
  double measurementTime{0.0}; // timestamp of measuredCapsule
};

struct HumanConfig {
  double maxSpeed{1.6};   // m/s, DIN EN ISO 13855 bound
  double measError{0.0};  // delta_meas, m
  double measDelay{0.0};  // dt_meas, s
  // pairs of part ids of the same human that cannot be clamped together
  std::set<std::pair<std::string, std::string>> safePairs;

  bool isSafePair(const BodyPart& a, const BodyPart& b) const {
    if (a.humanId != b.humanId) return false;
    return safePairs.count({a.id, b.id}) > 0 || safePairs.count({b.id, a.id}) > 0;
  }

  static HumanConfig loadFromYamlFile(const std::string& path,
                                      std::map<std::string, BodyPart>* partTemplates = nullptr);
};

/// Occupancy of a body part over [t_a, t_b], times relative to the
/// measurement instant: measured capsule inflated by the measurement error
/// plus the distance reachable at maxSpeed until t_b (including the delay).
Capsule predictOccupancy(const BodyPart& part, const HumanConfig& cfg, double tA, double tB);

/// Undirected contact graph over body-part occupancies: an edge connects two
/// parts whose occupancies intersect unless the pair is marked safe.
struct ContactGraph {
  std::vector<std::vector<int>> adjacency; // index into the parts list
};

ContactGraph buildContactGraph(const std::vector<BodyPart>& parts,
                               const std::vector<Capsule>& occupancies, const HumanConfig& cfg);

struct CombinedBodyPart {
  std::vector<int> members;        // indices into the parts list
  double diameter{0.0};            // sum of member diameters
  std::vector<Capsule> occupancy;  // union of member occupancies
};

/// One combined part per connected component with more than one member.
std::vector<CombinedBodyPart> combinedBodyParts(const ContactGraph& graph,
                                                const std::vector<BodyPart>& parts,
                                                const std::vector<Capsule>& occupancies);

} // namespace shield::human
