#pragma once

#include <map>
#include <string>
#include <vector>

#include "shield/human/body.hpp"
#include "shield/human/trace.hpp"
#include "shield/robot/model.hpp"
#include "shield/traj/path.hpp"
#include "shield/verify/energy_table.hpp"
#include "shield/verify/environment.hpp"

namespace shield::sim {

/// Scenario description file: robot, environment, intended trajectory, human
/// configuration and motion traces. All paths are resolved relative to the
/// scenario file location.
struct Scenario {
  std::string name;
  std::string robotPath;
  std::string environmentPath;
  std::string trajectoryPath;
  std::string humanPath;               // human body-part configuration
  std::vector<std::string> tracePaths; // recorded human motion, CSV
  std::string energyOverridePath;      // optional
  double dt{0.006};
  int horizon{180}; // steps
  unsigned seed{0};

  static Scenario loadFromYamlFile(const std::string& path);
};

/// Scenario with every referenced file parsed.
struct LoadedScenario {
  Scenario scenario;
  robot::RobotModel model;
  verify::Environment env;
  verify::ContactEnergyTable table;
  human::HumanConfig humanCfg;
  std::map<std::string, human::BodyPart> partTemplates;
  human::HumanTrace trace;
  traj::JointPath path;
  traj::ScalarLimits limits;
};

LoadedScenario loadScenario(const Scenario& s);

} // namespace shield::sim
