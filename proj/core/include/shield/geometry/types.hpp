#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace shield::geo {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Intersection predicates treat distances below this as touching.
inline constexpr double kGeomEps = 1e-9;

struct Ball {
  Vec3 center{Vec3::Zero()};
  double radius{0.0};
};

/// Swept sphere between two points. p1 == p2 degenerates to a ball.
struct Capsule {
  Vec3 p1{Vec3::Zero()};
  Vec3 p2{Vec3::Zero()};
  double radius{0.0};

  Capsule() = default;
  Capsule(const Vec3& a, const Vec3& b, double r) : p1(a), p2(b), radius(r) {
    if (!(r >= 0.0)) throw std::invalid_argument("capsule radius must be >= 0");
    if (!p1.allFinite() || !p2.allFinite())
      throw std::invalid_argument("capsule endpoints must be finite");
  }

  Capsule translated(const Vec3& t) const { return Capsule(p1 + t, p2 + t, radius); }
  double halfLength() const { return 0.5 * (p2 - p1).norm(); }
};

/// Halfspace intersection { p | N p <= d }. A single row models an unbounded
/// element such as the floor or a wall.
struct Polytope {
  std::vector<Vec3> normals;   // unit outward normals, rows of N
  std::vector<double> offsets; // entries of d

  Polytope() = default;
  Polytope(std::vector<Vec3> n, std::vector<double> d)
      : normals(std::move(n)), offsets(std::move(d)) {
    if (normals.size() != offsets.size())
      throw std::invalid_argument("polytope normal/offset count mismatch");
    for (const Vec3& nv : normals) {
      if (std::abs(nv.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("polytope normals must be unit length");
    }
  }

  std::size_t rows() const { return normals.size(); }

  bool contains(const Vec3& p, double tol = 0.0) const {
    for (std::size_t h = 0; h < normals.size(); ++h) {
      if (normals[h].dot(p) > offsets[h] + tol) return false;
    }
    return true;
  }

  static Polytope axisAlignedBox(const Vec3& lo, const Vec3& hi);
  static Polytope halfspace(const Vec3& normal, double offset);
  /// Oriented box: center, orthonormal axes (columns), half extents.
  static Polytope orientedBox(const Vec3& center, const Mat3& axes, const Vec3& halfExtents);
};

inline Polytope Polytope::axisAlignedBox(const Vec3& lo, const Vec3& hi) {
  std::vector<Vec3> n;
  std::vector<double> d;
  for (int k = 0; k < 3; ++k) {
    Vec3 e = Vec3::Zero();
    e[k] = 1.0;
    n.push_back(e);
    d.push_back(hi[k]);
    n.push_back(-e);
    d.push_back(-lo[k]);
  }
  return Polytope(std::move(n), std::move(d));
}

inline Polytope Polytope::halfspace(const Vec3& normal, double offset) {
  return Polytope({normal.normalized()}, {offset});
}

inline Polytope Polytope::orientedBox(const Vec3& center, const Mat3& axes, const Vec3& halfExtents) {
  std::vector<Vec3> n;
  std::vector<double> d;
  for (int k = 0; k < 3; ++k) {
    Vec3 a = axes.col(k).normalized();
    n.push_back(a);
    d.push_back(a.dot(center) + halfExtents[k]);
    n.push_back(-a);
    d.push_back(-a.dot(center) + halfExtents[k]);
  }
  return Polytope(std::move(n), std::move(d));
}

} // namespace shield::geo
