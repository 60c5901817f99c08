#include "shield/verify/verify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "shield/geometry/distance.hpp"

namespace shield::verify {

using geo::Capsule;
using geo::Polytope;
using geo::Vec3;

geo::Polytope capsuleBoundingBox(const Capsule& c) {
  const Vec3 center = 0.5 * (c.p1 + c.p2);
  Vec3 axis = c.p2 - c.p1;
  const double len = axis.norm();
  geo::Mat3 axes;
  if (len < geo::kGeomEps) {
    axes.setIdentity();
  } else {
    axis /= len;
    Vec3 ortho = axis.unitOrthogonal();
    axes.col(0) = ortho;
    axes.col(1) = axis.cross(ortho);
    axes.col(2) = axis;
  }
  const Vec3 halfExtents(c.radius, c.radius, 0.5 * len + c.radius);
  return Polytope::orientedBox(center, axes, halfExtents);
}

namespace {

bool anyIntersectsPolytope(const std::vector<Capsule>& occupancy, const Polytope& element) {
  for (const Capsule& o : occupancy) {
    if (geo::capsuleIntersectsPolytope(o, element)) return true;
  }
  return false;
}

bool anyIntersectsCapsule(const std::vector<Capsule>& occupancy, const Capsule& c) {
  for (const Capsule& o : occupancy) {
    if (geo::capsuleIntersectsCapsule(o, c)) return true;
  }
  return false;
}

} // namespace

bool eccExcluded(const Capsule& linkReach, const std::vector<Capsule>& occupancy,
                 double partDiameter, const Polytope& element, int linkIndex,
                 const NormalSpeedFn& minSpeed) {
  if (!anyIntersectsPolytope(occupancy, element)) return true;
  if (geo::capsulePolytopeDistance(linkReach, element) > partDiameter) return true;
  if (!geo::capsuleIntersectsPolytope(linkReach, element)) {
    bool movingAway = true;
    for (std::size_t h : geo::activeHalfspaces(linkReach, element)) {
      if (minSpeed(element.normals[h], linkIndex) < 0.0) {
        movingAway = false;
        break;
      }
    }
    if (movingAway) return true;
  }
  return false;
}

bool sccExcluded(const Capsule& reachI, int linkI, const Capsule& reachL, int linkL,
                 const std::vector<Capsule>& occupancy, double partDiameter,
                 const robot::RobotModel& model, const NormalSpeedFn& minSpeed) {
  if (model.isExcludedPair(linkI, linkL)) return true;
  if (!anyIntersectsCapsule(occupancy, reachI)) return true;
  if (!anyIntersectsCapsule(occupancy, reachL)) return true;
  if (geo::capsuleCapsuleDistance(reachI, reachL) > partDiameter) return true;
  if (!geo::capsuleIntersectsCapsule(reachI, reachL)) {
    // Link l as a static box: link i must separate from every active face at
    // least as fast as any point of link l can close it.
    const Polytope box = capsuleBoundingBox(reachL);
    bool separating = true;
    for (std::size_t h : geo::activeHalfspaces(reachI, box)) {
      const Vec3& n = box.normals[h];
      const double maxSpeedL = -minSpeed(-n, linkL); // upper bound for link l
      if (minSpeed(n, linkI) < maxSpeedL) {
        separating = false;
        break;
      }
    }
    if (separating) return true;
  }
  return false;
}

Verdict verify(const traj::MonitoredTrajectory& traj, const VerifyContext& ctx,
               const std::vector<human::BodyPart>& parts, VerifyMode mode) {
  const auto& model = *ctx.model;
  const auto& ab = *ctx.bounds;
  const auto& env = *ctx.env;
  const auto& table = *ctx.table;
  const auto& cfg = *ctx.humanCfg;
  const int nLinks = model.dof();
  const int nSteps = traj.size();
  if (nSteps < 2) throw std::invalid_argument("monitored trajectory needs >= 2 steps");

  // per-step effective energies for every link
  std::vector<std::vector<double>> energy(nSteps, std::vector<double>(nLinks));
  for (int k = 0; k < nSteps; ++k) {
    const Eigen::MatrixXd inertia = robot::inertiaMatrix(model, traj.steps[k].q);
    for (int i = 0; i < nLinks; ++i)
      energy[k][i] = robot::effectiveEnergyFromInertia(inertia, traj.steps[k].qdot, i);
  }

  Verdict verdict;
  for (int a = 0; a + 1 < nSteps; ++a) {
    const auto reach = traj::linkIntervals(model, ab, traj, a);
    const double tB = traj.steps[a + 1].t;

    std::vector<Capsule> occupancy(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const double horizon = tB - parts[j].measurementTime;
      occupancy[j] = human::predictOccupancy(parts[j], cfg, 0.0, horizon);
    }
    const auto graph = human::buildContactGraph(parts, occupancy, cfg);
    const auto combined = human::combinedBodyParts(graph, parts, occupancy);

    const auto minSpeed = [&](const Vec3& n, int link) {
      return traj::minNormalSpeed(n, model, ab, reach[link].mid, link, traj.dt);
    };
    const auto contactFree = [&](const std::vector<Capsule>& occ, double diameter, int i,
                                 ContactClass* failClass) {
      for (const auto& el : env.elements) {
        if (!eccExcluded(reach[i].occupancy, occ, diameter, el.shape, i, minSpeed)) {
          if (failClass) *failClass = ContactClass::ecc;
          return false;
        }
      }
      for (int l = 0; l < nLinks; ++l) {
        if (l == i) continue;
        if (!sccExcluded(reach[i].occupancy, i, reach[l].occupancy, l, occ, diameter, model,
                         minSpeed)) {
          if (failClass) *failClass = ContactClass::scc;
          return false;
        }
      }
      return true;
    };

    for (int i = 0; i < nLinks; ++i) {
      const double eMax = std::max(energy[a][i], energy[a + 1][i]);
      const robot::GeometryClass geom = model.links[i].worstCaseGeometry;

      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (!geo::capsuleIntersectsCapsule(occupancy[j], reach[i].occupancy)) continue;
        if (mode == VerifyMode::contactOnly) {
          verdict.safe = false;
          verdict.firstViolation = {a, i, parts[j].id, ViolationTag::contact,
                                    ContactClass::unconstrained};
          return verdict;
        }
        ContactClass cls = ContactClass::unconstrained;
        const bool cFree =
            mode == VerifyMode::full &&
            contactFree({occupancy[j]}, parts[j].diameter, i, &cls);
        const ContactType type = cFree ? ContactType::unconstrained : ContactType::clamp;
        if (eMax >= table.threshold(parts[j].kind, geom, type)) {
          verdict.safe = false;
          verdict.firstViolation = {a, i, parts[j].id,
                                    cFree ? ViolationTag::freeEnergy : ViolationTag::clampEnergy,
                                    cls};
          return verdict;
        }
      }

      if (mode == VerifyMode::contactOnly) continue;
      for (const auto& comb : combined) {
        if (!anyIntersectsCapsule(comb.occupancy, reach[i].occupancy)) continue;
        ContactClass cls = ContactClass::unconstrained;
        if (mode == VerifyMode::full && contactFree(comb.occupancy, comb.diameter, i, &cls))
          continue; // free contacts already covered by the individual parts
        double threshold = std::numeric_limits<double>::infinity();
        std::string label = "combined:";
        for (int m : comb.members) {
          threshold =
              std::min(threshold, table.threshold(parts[m].kind, geom, ContactType::clamp));
          label += parts[m].id + "+";
        }
        if (eMax >= threshold) {
          verdict.safe = false;
          verdict.firstViolation = {a, i, label, ViolationTag::clampEnergy, cls};
          return verdict;
        }
      }
    }
  }
  return verdict;
}

} // namespace shield::verify
