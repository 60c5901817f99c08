#include "shield/verify/energy_table.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace shield::verify {

using human::BodyKind;
using robot::GeometryClass;

ContactType contactTypeFromString(const std::string& s) {
  if (s == "clamp" || s == "constrained") return ContactType::clamp;
  if (s == "free" || s == "unconstrained") return ContactType::unconstrained;
  throw std::invalid_argument("unknown contact type: " + s);
}

std::string toString(ContactType t) {
  return t == ContactType::clamp ? "clamp" : "free";
}

ContactEnergyTable ContactEnergyTable::defaults() {
  ContactEnergyTable t;
  const BodyKind kinds[] = {BodyKind::hand, BodyKind::lowerArm, BodyKind::upperArm,
                            BodyKind::torso, BodyKind::head};
  // constrained (clamp) thresholds
  const double clampBlunt[] = {0.49, 1.3, 1.5, 1.6, 0.11};
  for (int k = 0; k < 5; ++k) {
    t.set(kinds[k], GeometryClass::blunt, ContactType::clamp, clampBlunt[k]);
    t.set(kinds[k], GeometryClass::wedge, ContactType::clamp, 0.05);
    t.set(kinds[k], GeometryClass::edge, ContactType::clamp, 0.02);
    t.set(kinds[k], GeometryClass::sheet, ContactType::clamp, 0.11);
  }
  // unconstrained (free) thresholds
  const double freeWedge[] = {2.0, 2.0, 0.5, 0.5, 0.11};
  const double freeEdge[] = {0.375, 0.375, 0.2, 0.2, 0.11};
  const double freeSheet[] = {0.9, 0.9, 0.5, 0.5, 0.11};
  for (int k = 0; k < 5; ++k) {
    t.set(kinds[k], GeometryClass::blunt, ContactType::unconstrained, clampBlunt[k]);
    t.set(kinds[k], GeometryClass::wedge, ContactType::unconstrained, freeWedge[k]);
    t.set(kinds[k], GeometryClass::edge, ContactType::unconstrained, freeEdge[k]);
    t.set(kinds[k], GeometryClass::sheet, ContactType::unconstrained, freeSheet[k]);
  }
  return t;
}

double ContactEnergyTable::threshold(BodyKind kind, GeometryClass geometry,
                                     ContactType type) const {
  if (kind == BodyKind::other) {
    // unknown body region: most conservative threshold across all regions
    double best = std::numeric_limits<double>::infinity();
    for (BodyKind k : {BodyKind::hand, BodyKind::lowerArm, BodyKind::upperArm, BodyKind::torso,
                       BodyKind::head}) {
      const auto it = table_.find({k, geometry, type});
      if (it != table_.end()) best = std::min(best, it->second);
    }
    if (!std::isfinite(best)) throw std::out_of_range("energy table is empty");
    return best;
  }
  const auto it = table_.find({kind, geometry, type});
  if (it == table_.end())
    throw std::out_of_range("missing energy table entry: " + human::toString(kind) + "/" +
                            robot::toString(geometry) + "/" + toString(type));
  return it->second;
}

void ContactEnergyTable::set(BodyKind kind, GeometryClass geometry, ContactType type,
                             double joules) {
  if (!(joules >= 0.0)) throw std::invalid_argument("energy threshold must be >= 0");
  table_[{kind, geometry, type}] = joules;
}

void ContactEnergyTable::applyOverridesFromYamlFile(const std::string& path) {
  YAML::Node root = YAML::LoadFile(path);
  for (const auto& node : root["entries"]) {
    set(human::bodyKindFromString(node["body"].as<std::string>()),
        robot::geometryClassFromString(node["geometry"].as<std::string>()),
        contactTypeFromString(node["type"].as<std::string>()), node["energy_j"].as<double>());
  }
}

double forceFromEnergy(double stiffness, double energy) {
  if (!(stiffness > 0.0)) throw std::invalid_argument("stiffness must be positive");
  if (!(energy >= 0.0)) throw std::invalid_argument("energy must be >= 0");
  return std::sqrt(2.0 * stiffness * energy);
}

} // namespace shield::verify
