#include "shield/sim/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <filesystem>
#include <stdexcept>

namespace shield::sim {

namespace fs = std::filesystem;

Scenario Scenario::loadFromYamlFile(const std::string& path) {
  YAML::Node root = YAML::LoadFile(path);
  const fs::path base = fs::path(path).parent_path();
  const auto resolve = [&](const std::string& p) {
    return p.empty() ? p : (fs::path(p).is_absolute() ? p : (base / p).string());
  };

  Scenario s;
  s.name = root["name"].as<std::string>(fs::path(path).stem().string());
  s.robotPath = resolve(root["robot"].as<std::string>());
  s.environmentPath = resolve(root["environment"].as<std::string>());
  s.trajectoryPath = resolve(root["trajectory"].as<std::string>());
  s.humanPath = resolve(root["human"].as<std::string>());
  if (root["traces"]) {
    for (const auto& t : root["traces"]) s.tracePaths.push_back(resolve(t.as<std::string>()));
  } else if (root["trace"]) {
    s.tracePaths.push_back(resolve(root["trace"].as<std::string>()));
  }
  if (root["energy_table"]) s.energyOverridePath = resolve(root["energy_table"].as<std::string>());
  s.dt = root["dt"].as<double>(0.006);
  s.horizon = root["horizon"].as<int>(180);
  s.seed = root["seed"].as<unsigned>(0u);
  if (!(s.dt > 0.0)) throw std::runtime_error("scenario dt must be positive");
  if (s.horizon <= 0) throw std::runtime_error("scenario horizon must be positive");
  return s;
}

LoadedScenario loadScenario(const Scenario& s) {
  LoadedScenario out;
  out.scenario = s;
  out.model = robot::RobotModel::loadFromYamlFile(s.robotPath);
  out.env = verify::Environment::loadFromYamlFile(s.environmentPath);
  out.table = verify::ContactEnergyTable::defaults();
  if (!s.energyOverridePath.empty()) out.table.applyOverridesFromYamlFile(s.energyOverridePath);
  out.humanCfg = human::HumanConfig::loadFromYamlFile(s.humanPath, &out.partTemplates);
  for (const auto& tracePath : s.tracePaths) {
    const human::HumanTrace t = human::HumanTrace::loadFromCsvFile(tracePath);
    for (const auto& [key, chan] : t.channels()) {
      for (const auto& sample : chan)
        out.trace.addSample(key.first, key.second, sample.time, sample.capsule);
    }
  }
  out.path = traj::JointPath::loadFromCsvFile(s.trajectoryPath);
  out.limits = out.path.deriveScalarLimits(out.model);
  return out;
}

} // namespace shield::sim
