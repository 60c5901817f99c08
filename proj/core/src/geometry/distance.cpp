#include "shield/geometry/distance.hpp"

#include <algorithm>
#include <cmath>

namespace shield::geo {

Vec3 closestPointOnSegment(const Vec3& a, const Vec3& b, const Vec3& p) {
  const Vec3 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 <= 0.0) return a;
  const double t = std::clamp(ab.dot(p - a) / len2, 0.0, 1.0);
  return a + t * ab;
}

// Ericson, Real-Time Collision Detection, Sec. 5.1.9.
double segmentSegmentDistance(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2) {
  const Vec3 d1 = a2 - a1;
  const Vec3 d2 = b2 - b1;
  const Vec3 r = a1 - b1;
  const double la = d1.squaredNorm();
  const double lb = d2.squaredNorm();
  const double f = d2.dot(r);

  double s = 0.0, t = 0.0;
  if (la <= 0.0 && lb <= 0.0) {
    return r.norm();
  }
  if (la <= 0.0) {
    t = std::clamp(f / lb, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (lb <= 0.0) {
      s = std::clamp(-c / la, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2);
      const double denom = la * lb - b * b;
      if (denom > 0.0) {
        s = std::clamp((b * f - c * lb) / denom, 0.0, 1.0);
      }
      t = (b * s + f) / lb;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / la, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / la, 0.0, 1.0);
      }
    }
  }
  const Vec3 pa = a1 + s * d1;
  const Vec3 pb = b1 + t * d2;
  return (pa - pb).norm();
}

Vec3 projectPointToPolytope(const Vec3& p, const Polytope& h) {
  const std::size_t m = h.rows();
  if (m == 0) return p;
  if (h.contains(p)) return p;
  if (m == 1) {
    const double viol = h.normals[0].dot(p) - h.offsets[0];
    return p - viol * h.normals[0];
  }
  // Dykstra's alternating projections onto the halfspaces.
  Vec3 x = p;
  std::vector<Vec3> corr(m, Vec3::Zero());
  for (int iter = 0; iter < 2000; ++iter) {
    double shift = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const Vec3 y = x + corr[k];
      const double viol = h.normals[k].dot(y) - h.offsets[k];
      Vec3 xNew = (viol > 0.0) ? Vec3(y - viol * h.normals[k]) : y;
      corr[k] = y - xNew;
      shift += (xNew - x).squaredNorm();
      x = xNew;
    }
    if (shift < 1e-26 && h.contains(x, 1e-12)) break;
  }
  return x;
}

double capsuleCapsuleDistance(const Capsule& a, const Capsule& b) {
  const double d = segmentSegmentDistance(a.p1, a.p2, b.p1, b.p2) - a.radius - b.radius;
  return std::max(0.0, d);
}

double capsulePolytopeDistance(const Capsule& c, const Polytope& h) {
  if (h.rows() == 0) return 0.0;
  if (h.contains(c.p1) || h.contains(c.p2)) return 0.0;
  // Alternating projections between the segment and the polytope converge to
  // the closest pair of the two convex sets.
  Vec3 x = 0.5 * (c.p1 + c.p2);
  Vec3 y = projectPointToPolytope(x, h);
  double prev = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 5000; ++iter) {
    x = closestPointOnSegment(c.p1, c.p2, y);
    y = projectPointToPolytope(x, h);
    const double d = (x - y).norm();
    if (prev - d < 1e-13) {
      prev = d;
      break;
    }
    prev = d;
  }
  return std::max(0.0, prev - c.radius);
}

double signedDistancePoint(const Vec3& p, const Polytope& h) {
  if (h.contains(p)) {
    // Nearest boundary point of a convex polytope seen from inside lies on the
    // closest face plane.
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < h.rows(); ++k) {
      dmin = std::min(dmin, h.offsets[k] - h.normals[k].dot(p));
    }
    return -dmin;
  }
  return (p - projectPointToPolytope(p, h)).norm();
}

bool capsuleIntersectsCapsule(const Capsule& a, const Capsule& b, double eps) {
  return capsuleCapsuleDistance(a, b) <= eps;
}

bool capsuleIntersectsPolytope(const Capsule& c, const Polytope& h, double eps) {
  return capsulePolytopeDistance(c, h) <= eps;
}

std::vector<std::size_t> activeHalfspaces(const Capsule& c, const Polytope& h) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < h.rows(); ++k) {
    const double support =
        std::max(h.normals[k].dot(c.p1), h.normals[k].dot(c.p2)) + c.radius;
    if (support > h.offsets[k]) out.push_back(k);
  }
  return out;
}

} // namespace shield::geo
