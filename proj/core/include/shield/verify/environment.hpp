#pragma once

#include <string>
#include <vector>

#include "shield/geometry/types.hpp"

namespace shield::verify {

struct EnvironmentElement {
  std::string name;
  geo::Polytope shape;
};

/// Static scene: a list of convex elements the robot could clamp a human
/// against (tables, walls, the floor).
struct Environment {
  std::vector<EnvironmentElement> elements;

  static Environment loadFromYamlFile(const std::string& path);
};

} // namespace shield::verify
