#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shield/human/body.hpp"
#include "shield/robot/model.hpp"
#include "shield/traj/reach.hpp"
#include "shield/verify/energy_table.hpp"
#include "shield/verify/environment.hpp"

namespace shield::verify {

/// Lower bound on n . pdot over an interval for every point of a link.
using NormalSpeedFn = std::function<double(const geo::Vec3& n, int linkIndex)>;

/// Environmentally constrained contact exclusion for one (link, body part,
/// element) triple over one interval. True means a clamp against this
/// element is provably impossible.
bool eccExcluded(const geo::Capsule& linkReach, const std::vector<geo::Capsule>& occupancy,
                 double partDiameter, const geo::Polytope& element, int linkIndex,
                 const NormalSpeedFn& minSpeed);

/// Self-constrained contact exclusion for one (link i, body part, link l)
/// triple. Link l is over-approximated by the bounding box of its reach
/// capsule for the separating-velocity branch.
bool sccExcluded(const geo::Capsule& reachI, int linkI, const geo::Capsule& reachL, int linkL,
                 const std::vector<geo::Capsule>& occupancy, double partDiameter,
                 const robot::RobotModel& model, const NormalSpeedFn& minSpeed);

/// Oriented bounding box of a capsule as a 6-face polytope.
geo::Polytope capsuleBoundingBox(const geo::Capsule& c);

enum class ContactClass { unconstrained, ecc, scc };
enum class ViolationTag { freeEnergy, clampEnergy, contact };

struct Violation {
  int interval{0};
  int link{0};
  std::string partId;
  ViolationTag tag{ViolationTag::clampEnergy};
  ContactClass contactClass{ContactClass::unconstrained};
};

struct Verdict {
  bool safe{true};
  std::optional<Violation> firstViolation;
};

enum class VerifyMode {
  full,        // contact classification + free/clamp energy thresholds
  noCfree,     // always use the constrained-contact thresholds
  contactOnly, // any possible contact is a violation (pure separation)
};

struct VerifyContext {
  const robot::RobotModel* model{nullptr};
  const robot::AngularBounds* bounds{nullptr};
  const Environment* env{nullptr};
  const ContactEnergyTable* table{nullptr};
  const human::HumanConfig* humanCfg{nullptr};
};

/// Check every interval of the monitored trajectory against every body part
/// (individual and combined) and the environment. parts carry the latest
/// measured capsules and their timestamps; occupancies are predicted forward
/// to each interval end.
Verdict verify(const traj::MonitoredTrajectory& traj, const VerifyContext& ctx,
               const std::vector<human::BodyPart>& parts, VerifyMode mode = VerifyMode::full);

} // namespace shield::verify
