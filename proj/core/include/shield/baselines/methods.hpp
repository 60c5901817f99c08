#pragma once

#include <string>
#include <vector>

#include "shield/human/body.hpp"
#include "shield/robot/model.hpp"
#include "shield/traj/path.hpp"
#include "shield/verify/energy_table.hpp"
#include "shield/verify/verify.hpp"

namespace shield::baselines {

using geo::Vec3;

enum class MethodId {
  noShield,
  ssmZone,
  reducedSpeedPFL,
  dynamicSSM,
  reducedSpeedZone,
  reflectedMass,
  saraNoCfree,
  sara,
};

MethodId methodIdFromString(const std::string& s);
std::string toString(MethodId m);
std::vector<MethodId> allMethods();

/// Methods whose runs must audit to zero violations.
bool isProvablySafe(MethodId m);
/// Methods driven by the verification shield (the rest are open-loop
/// governors).
bool usesShield(MethodId m);
verify::VerifyMode shieldMode(MethodId m);

/// Distance from the robot base to the nearest measured body-part capsule.
double minBaseDistance(const std::vector<human::BodyPart>& parts, const Vec3& base);

/// Speed-and-separation zone: stop whenever a human is at or closer than
/// 1.17 m to the base.
bool ssmZoneStop(const std::vector<human::BodyPart>& parts, const Vec3& base);

/// Reduced-speed zone boundary at 0.73 m.
bool reducedSpeedZoneActive(const std::vector<human::BodyPart>& parts, const Vec3& base);

/// Upper bound on the Cartesian speed of any robot point per unit of path
/// rate, at path position s. Per-link values.
std::vector<double> pointSpeedPerRate(const robot::RobotModel& model,
                                      const robot::AngularBounds& ab,
                                      const traj::JointPath& path, double s);

/// Path-rate cap that keeps every robot point at or below speedLimit m/s.
double cartesianSpeedCap(double speedLimit, const std::vector<double>& perRate);

/// Path-rate cap from the reflected-mass power-and-force-limiting rule:
/// for the nearest human body part of each link, allowed contact speed is
/// sqrt(2 T_clamp / m_reflected) along the current contact normal (the human
/// is assumed static).
double reflectedMassCap(const robot::RobotModel& model, const robot::JointVector& q,
                        const std::vector<human::BodyPart>& parts,
                        const verify::ContactEnergyTable& table,
                        const std::vector<double>& perRate);

} // namespace shield::baselines
