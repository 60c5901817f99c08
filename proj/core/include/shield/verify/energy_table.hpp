#pragma once

#include <map>
#include <string>

#include "shield/human/body.hpp"
#include "shield/robot/model.hpp"

namespace shield::verify {

enum class ContactType { clamp, unconstrained };

ContactType contactTypeFromString(const std::string& s);
std::string toString(ContactType t);

/// Admissible contact energies per (body part kind, link worst-case contact
/// geometry, contact type), in joules.
class ContactEnergyTable {
 public:
  /// Built-in conservative defaults covering every (kind, geometry, type)
  /// combination of the five standard body regions.
  static ContactEnergyTable defaults();

  double threshold(human::BodyKind kind, robot::GeometryClass geometry, ContactType type) const;

  void set(human::BodyKind kind, robot::GeometryClass geometry, ContactType type, double joules);

  /// Partial override: entries listed in the file replace defaults; all
  /// others stay. Schema: entries: [{body, geometry, type, energy_j}].
  void applyOverridesFromYamlFile(const std::string& path);

 private:
  std::map<std::tuple<human::BodyKind, robot::GeometryClass, ContactType>, double> table_;
};

/// Peak clamping force for a linear-spring contact of stiffness k (N/m)
/// absorbing energy t (J): sqrt(2 k t).
double forceFromEnergy(double stiffness, double energy);

} // namespace shield::verify
