#include "shield/robot/model.hpp"

#include <cmath>

namespace shield::robot {

GeometryClass geometryClassFromString(const std::string& s) {
  if (s == "blunt") return GeometryClass::blunt;
  if (s == "wedge") return GeometryClass::wedge;
  if (s == "edge") return GeometryClass::edge;
  if (s == "sheet") return GeometryClass::sheet;
  throw std::invalid_argument("unknown geometry class: " + s);
}

std::string toString(GeometryClass g) {
  switch (g) {
    case GeometryClass::blunt: return "blunt";
    case GeometryClass::wedge: return "wedge";
    case GeometryClass::edge: return "edge";
    case GeometryClass::sheet: return "sheet";
  }
  return "blunt";
}

std::vector<FrameState> forwardKinematics(const RobotModel& model, const JointVector& q) {
  const int n = model.dof();
  if (q.size() != n) throw std::invalid_argument("joint vector dimension mismatch");
  if (!q.allFinite()) throw std::invalid_argument("joint vector must be finite");
  std::vector<FrameState> out(n);
  Transform t = Transform::Identity();
  for (int i = 0; i < n; ++i) {
    t = t * model.joints[i].originOffset *
        Transform(Eigen::AngleAxisd(q[i], model.joints[i].axis));
    out[i].pose = t;
    const Capsule& c = model.links[i].capsule;
    out[i].worldCapsule = Capsule(t * c.p1, t * c.p2, c.radius);
  }
  return out;
}

namespace {

struct JointGeom {
  Vec3 origin; // joint origin in world
  Vec3 axis;   // joint axis in world
};

std::vector<JointGeom> jointGeometry(const RobotModel& model, const JointVector& q) {
  const int n = model.dof();
  std::vector<JointGeom> jg(n);
  Transform t = Transform::Identity();
  for (int i = 0; i < n; ++i) {
    t = t * model.joints[i].originOffset;
    jg[i].origin = t.translation();
    jg[i].axis = t.linear() * model.joints[i].axis;
    t = t * Transform(Eigen::AngleAxisd(q[i], model.joints[i].axis));
  }
  return jg;
}

} // namespace

Eigen::MatrixXd linkJacobian(const RobotModel& model, const JointVector& q, int linkIndex,
                             const Vec3& point) {
  const int n = model.dof();
  if (linkIndex < 0 || linkIndex >= n) throw std::invalid_argument("invalid link index");
  const auto jg = jointGeometry(model, q);
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(6, n);
  for (int k = 0; k <= linkIndex; ++k) {
    jac.block<3, 1>(0, k) = jg[k].axis.cross(point - jg[k].origin);
    jac.block<3, 1>(3, k) = jg[k].axis;
  }
  return jac;
}

Eigen::MatrixXd inertiaMatrix(const RobotModel& model, const JointVector& q) {
  const int n = model.dof();
  const auto frames = forwardKinematics(model, q);
  const auto jg = jointGeometry(model, q);
  Eigen::MatrixXd inertia = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const Vec3 com = frames[i].pose * model.links[i].comOffset;
    Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(3, n);
    Eigen::MatrixXd jo = Eigen::MatrixXd::Zero(3, n);
    for (int k = 0; k <= i; ++k) {
      jp.col(k) = jg[k].axis.cross(com - jg[k].origin);
      jo.col(k) = jg[k].axis;
    }
    const Mat3 rot = frames[i].pose.linear();
    inertia += model.links[i].mass * jp.transpose() * jp +
               jo.transpose() * rot * model.links[i].inertiaTensor * rot.transpose() * jo;
  }
  return inertia;
}

double effectiveEnergyFromInertia(const Eigen::MatrixXd& inertia, const JointVector& qdot,
                                  int linkIndex) {
  const int n = static_cast<int>(inertia.rows());
  if (linkIndex < 0 || linkIndex >= n) throw std::invalid_argument("invalid link index");
  // Prefix quadratic form with a fixed evaluation order: the result is
  // bit-identical under any change of qdot beyond linkIndex.
  double e = 0.0;
  for (int a = 0; a <= linkIndex; ++a) {
    for (int b = 0; b <= linkIndex; ++b) {
      e += qdot[a] * inertia(a, b) * qdot[b];
    }
  }
  return 0.5 * e;
}

double effectiveEnergy(const RobotModel& model, const JointVector& q, const JointVector& qdot,
                       int linkIndex) {
  return effectiveEnergyFromInertia(inertiaMatrix(model, q), qdot, linkIndex);
}

AngularBounds angularBounds(const RobotModel& model) {
  const int n = model.dof();
  AngularBounds b;
  b.omegaBar.resize(n);
  b.omegaDotBar.resize(n);
  b.omegaDdotBar.resize(n);
  b.interJointLength.resize(n);
  b.anchorReach.resize(n);
  double om = 0.0, domPrev = 0.0, dom = 0.0, ddom = 0.0;
  double omPrev = 0.0;
  for (int j = 0; j < n; ++j) {
    const auto& js = model.joints[j];
    omPrev = om;
    domPrev = dom;
    om += js.qdotMax;
    dom += js.qddotMax + js.qdotMax * omPrev;
    ddom += js.qdddotMax + 2.0 * js.qddotMax * omPrev + js.qdotMax * (domPrev + omPrev * omPrev);
    b.omegaBar[j] = om;
    b.omegaDotBar[j] = dom;
    b.omegaDdotBar[j] = ddom;
    b.interJointLength[j] =
        (j + 1 < n) ? model.joints[j + 1].originOffset.translation().norm() : 0.0;
    const Capsule& c = model.links[j].capsule;
    b.anchorReach[j] = std::max(c.p1.norm(), c.p2.norm()) + c.radius;
  }
  return b;
}

double reflectedMass(const RobotModel& model, const JointVector& q, int linkIndex,
                     const Vec3& contactPoint, const Vec3& direction) {
  if (std::abs(direction.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("direction must be unit length");
  const Eigen::MatrixXd jac = linkJacobian(model, q, linkIndex, contactPoint);
  const Eigen::MatrixXd jp = jac.topRows(3);
  const Eigen::MatrixXd inertia = inertiaMatrix(model, q);
  // u^T Lambda_v^{-1} u = u^T Jp B^{-1} Jp^T u
  const Eigen::VectorXd w = jp.transpose() * direction;
  const double invMass = w.dot(inertia.ldlt().solve(w));
  if (invMass < 1e-8) {
    throw SingularityError("contact direction lies in the Jacobian null space");
  }
  return 1.0 / invMass;
}

std::vector<LinkKinematics> linkKinematics(const RobotModel& model, const JointVector& q,
                                           const JointVector& qdot, const JointVector& qddot) {
  const int n = model.dof();
  if (qdot.size() != n || qddot.size() != n)
    throw std::invalid_argument("joint vector dimension mismatch");
  std::vector<LinkKinematics> out(n);
  Vec3 omega = Vec3::Zero(), omegaDot = Vec3::Zero();
  Vec3 vel = Vec3::Zero(), acc = Vec3::Zero();
  Vec3 prevOrigin = Vec3::Zero();
  Transform t = Transform::Identity();
  for (int i = 0; i < n; ++i) {
    t = t * model.joints[i].originOffset;
    const Vec3 origin = t.translation();
    const Vec3 z = t.linear() * model.joints[i].axis;
    const Vec3 r = origin - prevOrigin;
    // shift the previous frame's point kinematics to the new joint origin
    vel = vel + omega.cross(r);
    acc = acc + omegaDot.cross(r) + omega.cross(omega.cross(r));
    // add the joint's own rotation
    omegaDot = omegaDot + qddot[i] * z + qdot[i] * omega.cross(z);
    omega = omega + qdot[i] * z;
    t = t * Transform(Eigen::AngleAxisd(q[i], model.joints[i].axis));
    out[i] = {vel, acc, omega, omegaDot, t};
    prevOrigin = origin;
  }
  return out;
}

} // namespace shield::robot
