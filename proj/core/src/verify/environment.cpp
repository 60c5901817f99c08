#include "shield/verify/environment.hpp"

#include <yaml-cpp/yaml.h>

#include <stdexcept>

namespace shield::verify {

namespace {

geo::Vec3 toVec3(const YAML::Node& n) {
  if (!n.IsSequence() || n.size() != 3) throw std::runtime_error("expected [x, y, z]");
  return geo::Vec3(n[0].as<double>(), n[1].as<double>(), n[2].as<double>());
}

} // namespace

Environment Environment::loadFromYamlFile(const std::string& path) {
  YAML::Node root = YAML::LoadFile(path);
  Environment env;
  for (const auto& node : root["elements"]) {
    EnvironmentElement el;
    el.name = node["name"].as<std::string>("element" + std::to_string(env.elements.size()));
    const std::string type = node["type"].as<std::string>();
    if (type == "box") {
      el.shape = geo::Polytope::axisAlignedBox(toVec3(node["min"]), toVec3(node["max"]));
    } else if (type == "halfspace") {
      el.shape = geo::Polytope::halfspace(toVec3(node["normal"]), node["offset"].as<double>());
    } else if (type == "polytope") {
      std::vector<geo::Vec3> normals;
      std::vector<double> offsets;
      for (const auto& row : node["normals"]) normals.push_back(toVec3(row).normalized());
      for (const auto& d : node["offsets"]) offsets.push_back(d.as<double>());
      el.shape = geo::Polytope(std::move(normals), std::move(offsets));
    } else {
      throw std::runtime_error("unknown environment element type: " + type);
    }
    env.elements.push_back(std::move(el));
  }
  return env;
}

} // namespace shield::verify
