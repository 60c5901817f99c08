#include <yaml-cpp/yaml.h>

#include "shield/robot/model.hpp"

namespace shield::robot {

namespace {

Vec3 toVec3(const YAML::Node& n) {
  if (!n.IsSequence() || n.size() != 3) throw std::runtime_error("expected 3-vector");
  return Vec3(n[0].as<double>(), n[1].as<double>(), n[2].as<double>());
}

Transform toTransform(const YAML::Node& n) {
  Transform t = Transform::Identity();
  if (n["xyz"]) t.translation() = toVec3(n["xyz"]);
  if (n["rpy"]) {
    const Vec3 rpy = toVec3(n["rpy"]);
    t.linear() = (Eigen::AngleAxisd(rpy[2], Vec3::UnitZ()) *
                  Eigen::AngleAxisd(rpy[1], Vec3::UnitY()) *
                  Eigen::AngleAxisd(rpy[0], Vec3::UnitX()))
                     .toRotationMatrix();
  }
  return t;
}

Mat3 toInertia(const YAML::Node& n) {
  // [ixx, iyy, izz, ixy, ixz, iyz]
  if (!n.IsSequence() || n.size() != 6) throw std::runtime_error("inertia expects 6 entries");
  Mat3 m;
  m << n[0].as<double>(), n[3].as<double>(), n[4].as<double>(),
       n[3].as<double>(), n[1].as<double>(), n[5].as<double>(),
       n[4].as<double>(), n[5].as<double>(), n[2].as<double>();
  return m;
}

} // namespace

RobotModel RobotModel::loadFromYamlFile(const std::string& path) {
  const YAML::Node root = YAML::LoadFile(path);
  RobotModel m;
  m.name = root["name"] ? root["name"].as<std::string>() : "robot";

  for (const auto& jn : root["joints"]) {
    JointSpec j;
    if (jn["type"] && jn["type"].as<std::string>() != "revolute")
      throw std::runtime_error("only revolute joints are supported");
    j.axis = toVec3(jn["axis"]).normalized();
    if (jn["origin"]) j.originOffset = toTransform(jn["origin"]);
    j.qdotMax = jn["qdot_max"].as<double>();
    j.qddotMax = jn["qddot_max"].as<double>();
    j.qdddotMax = jn["qdddot_max"].as<double>();
    if (j.qdotMax <= 0 || j.qddotMax <= 0 || j.qdddotMax <= 0)
      throw std::runtime_error("joint limits must be strictly positive");
    m.joints.push_back(j);
  }
  for (const auto& ln : root["links"]) {
    LinkSpec l;
    l.mass = ln["mass"].as<double>();
    if (l.mass <= 0) throw std::runtime_error("link mass must be positive");
    l.comOffset = toVec3(ln["com"]);
    l.inertiaTensor = toInertia(ln["inertia"]);
    if ((l.inertiaTensor - l.inertiaTensor.transpose()).norm() > 1e-12 ||
        l.inertiaTensor.eigenvalues().real().minCoeff() <= 0)
      throw std::runtime_error("inertia tensor must be symmetric positive definite");
    const auto& cn = ln["capsule"];
    l.capsule = Capsule(toVec3(cn["p1"]), toVec3(cn["p2"]), cn["radius"].as<double>());
    l.worstCaseGeometry = geometryClassFromString(
        ln["geometry"] ? ln["geometry"].as<std::string>() : "blunt");
    m.links.push_back(l);
  }
  if (m.joints.size() != m.links.size())
    throw std::runtime_error("joint and link counts must match");

  if (root["topology_exclusions"]) {
    for (const auto& pn : root["topology_exclusions"]) {
      const int a = pn[0].as<int>(), b = pn[1].as<int>();
      if (a < 0 || b < 0 || a >= m.dof() || b >= m.dof() || a == b)
        throw std::runtime_error("invalid topology exclusion pair");
      m.topologyExclusions.insert({std::min(a, b), std::max(a, b)});
    }
  }
  if (root["error_bounds"]) {
    const auto& en = root["error_bounds"];
    m.errorBounds.wVMax = en["w_v_max"].as<double>(0.0);
    m.errorBounds.wOmegaMax = en["w_omega_max"].as<double>(0.0);
    m.errorBounds.wAMax = en["w_a_max"].as<double>(0.0);
    m.errorBounds.wOmegaDotMax = en["w_omega_dot_max"].as<double>(0.0);
  }
  m.trackingError.assign(m.links.size(), 0.0);
  if (root["tracking_error"]) {
    if (root["tracking_error"].IsSequence()) {
      for (std::size_t i = 0; i < m.links.size(); ++i)
        m.trackingError[i] = root["tracking_error"][i].as<double>();
    } else {
      m.trackingError.assign(m.links.size(), root["tracking_error"].as<double>());
    }
  }
  return m;
}

} // namespace shield::robot
