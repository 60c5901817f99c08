#pragma once

#include "shield/geometry/types.hpp"

namespace shield::geo {

/// Closest point on segment [a, b] to point p.
Vec3 closestPointOnSegment(const Vec3& a, const Vec3& b, const Vec3& p);

/// Smallest distance between segments [a1, a2] and [b1, b2].
double segmentSegmentDistance(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2);

/// Euclidean projection of p onto the polytope (Dykstra over halfspaces).
/// Returns p unchanged when p is inside.
Vec3 projectPointToPolytope(const Vec3& p, const Polytope& h);

/// Surface-to-surface distance, clamped to 0 on overlap. Symmetric.
double capsuleCapsuleDistance(const Capsule& a, const Capsule& b);

/// Smallest distance from the capsule surface to the polytope, 0 if they
/// intersect. Alternating projection between segment and polytope.
double capsulePolytopeDistance(const Capsule& c, const Polytope& h);

/// Negative inside, positive outside, magnitude is the distance to the boundary.
double signedDistancePoint(const Vec3& p, const Polytope& h);

bool capsuleIntersectsCapsule(const Capsule& a, const Capsule& b, double eps = kGeomEps);
bool capsuleIntersectsPolytope(const Capsule& c, const Polytope& h, double eps = kGeomEps);

/// Indices h with some capsule point violating N[h] p <= d[h], computed
/// exactly from the capsule support function max(N p1, N p2) + r.
std::vector<std::size_t> activeHalfspaces(const Capsule& c, const Polytope& h);

} // namespace shield::geo
