#include "shield/baselines/methods.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "shield/geometry/distance.hpp"

namespace shield::baselines {

MethodId methodIdFromString(const std::string& s) {
  if (s == "noShield") return MethodId::noShield;
  if (s == "ssmZone") return MethodId::ssmZone;
  if (s == "reducedSpeedPFL") return MethodId::reducedSpeedPFL;
  if (s == "dynamicSSM") return MethodId::dynamicSSM;
  if (s == "reducedSpeedZone") return MethodId::reducedSpeedZone;
  if (s == "reflectedMass") return MethodId::reflectedMass;
  if (s == "saraNoCfree") return MethodId::saraNoCfree;
  if (s == "sara") return MethodId::sara;
  throw std::invalid_argument("unknown method id: " + s);
}

std::string toString(MethodId m) {
  switch (m) {
    case MethodId::noShield: return "noShield";
    case MethodId::ssmZone: return "ssmZone";
    case MethodId::reducedSpeedPFL: return "reducedSpeedPFL";
    case MethodId::dynamicSSM: return "dynamicSSM";
    case MethodId::reducedSpeedZone: return "reducedSpeedZone";
    case MethodId::reflectedMass: return "reflectedMass";
    case MethodId::saraNoCfree: return "saraNoCfree";
    case MethodId::sara: return "sara";
  }
  throw std::logic_error("unreachable");
}

std::vector<MethodId> allMethods() {
  return {MethodId::noShield,       MethodId::ssmZone,       MethodId::reducedSpeedPFL,
          MethodId::dynamicSSM,     MethodId::reducedSpeedZone, MethodId::reflectedMass,
          MethodId::saraNoCfree,    MethodId::sara};
}

bool isProvablySafe(MethodId m) {
  return m == MethodId::sara || m == MethodId::saraNoCfree || m == MethodId::dynamicSSM;
}

bool usesShield(MethodId m) {
  return m == MethodId::sara || m == MethodId::saraNoCfree || m == MethodId::dynamicSSM;
}

verify::VerifyMode shieldMode(MethodId m) {
  switch (m) {
    case MethodId::sara: return verify::VerifyMode::full;
    case MethodId::saraNoCfree: return verify::VerifyMode::noCfree;
    case MethodId::dynamicSSM: return verify::VerifyMode::contactOnly;
    default: throw std::invalid_argument("method has no shield mode: " + toString(m));
  }
}

double minBaseDistance(const std::vector<human::BodyPart>& parts, const Vec3& base) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : parts) {
    const Vec3 q = geo::closestPointOnSegment(p.measuredCapsule.p1, p.measuredCapsule.p2, base);
    best = std::min(best, std::max(0.0, (q - base).norm() - p.measuredCapsule.radius));
  }
  return best;
}

bool ssmZoneStop(const std::vector<human::BodyPart>& parts, const Vec3& base) {
  return minBaseDistance(parts, base) <= 1.17;
}

bool reducedSpeedZoneActive(const std::vector<human::BodyPart>& parts, const Vec3& base) {
  return minBaseDistance(parts, base) <= 0.73;
}

std::vector<double> pointSpeedPerRate(const robot::RobotModel& model,
                                      const robot::AngularBounds& ab,
                                      const traj::JointPath& path, double s) {
  const robot::JointVector q = path.position(s);
  const robot::JointVector dq = path.velocity(s); // joint velocity per unit rate
  const robot::JointVector zero = robot::JointVector::Zero(model.dof());
  const auto kin = robot::linkKinematics(model, q, dq, zero);
  std::vector<double> out(model.dof());
  for (int i = 0; i < model.dof(); ++i)
    out[i] = kin[i].originVel.norm() + kin[i].omega.norm() * ab.anchorReach[i];
  return out;
}

double cartesianSpeedCap(double speedLimit, const std::vector<double>& perRate) {
  double cap = std::numeric_limits<double>::infinity();
  for (double c : perRate) {
    if (c > 1e-12) cap = std::min(cap, speedLimit / c);
  }
  return cap;
}

double reflectedMassCap(const robot::RobotModel& model, const robot::JointVector& q,
                        const std::vector<human::BodyPart>& parts,
                        const verify::ContactEnergyTable& table,
                        const std::vector<double>& perRate) {
  double cap = std::numeric_limits<double>::infinity();
  const auto fk = robot::forwardKinematics(model, q);
  for (int i = 0; i < model.dof(); ++i) {
    const geo::Capsule& link = fk[i].worldCapsule;
    for (const auto& part : parts) {
      // contact point and normal from the current (assumed static) human pose
      const Vec3 mid = 0.5 * (part.measuredCapsule.p1 + part.measuredCapsule.p2);
      const Vec3 onLink = geo::closestPointOnSegment(link.p1, link.p2, mid);
      Vec3 dir = mid - onLink;
      if (dir.norm() < 1e-9) dir = Vec3::UnitZ();
      dir.normalize();
      const double tClamp = table.threshold(
          part.kind, model.links[i].worstCaseGeometry, verify::ContactType::clamp);
      double mRefl;
      try {
        mRefl = robot::reflectedMass(model, q, i, onLink, dir);
      } catch (const robot::SingularityError&) {
        continue; // the robot cannot move along this direction
      }
      const double vAllow = std::sqrt(2.0 * tClamp / mRefl);
      if (perRate[i] > 1e-12) cap = std::min(cap, vAllow / perRate[i]);
    }
  }
  return cap;
}

} // namespace shield::baselines
