#include "shield/human/body.hpp"

#include <yaml-cpp/yaml.h>

#include <functional>
#include <stdexcept>

#include "shield/geometry/distance.hpp"

namespace shield::human {

BodyKind bodyKindFromString(const std::string& s) {
  if (s == "hand") return BodyKind::hand;
  if (s == "lower_arm" || s == "lowerArm") return BodyKind::lowerArm;
  if (s == "upper_arm" || s == "upperArm") return BodyKind::upperArm;
  if (s == "torso") return BodyKind::torso;
  if (s == "head") return BodyKind::head;
  if (s == "other") return BodyKind::other;
  throw std::invalid_argument("unknown body kind: " + s);
}

std::string toString(BodyKind k) {
  switch (k) {
    case BodyKind::hand: return "hand";
    case BodyKind::lowerArm: return "lower_arm";
    case BodyKind::upperArm: return "upper_arm";
    case BodyKind::torso: return "torso";
    case BodyKind::head: return "head";
    case BodyKind::other: return "other";
  }
  return "other";
}

Capsule predictOccupancy(const BodyPart& part, const HumanConfig& cfg, double tA, double tB) {
  if (tA < 0.0 || tB < tA) throw std::invalid_argument("invalid prediction times");
  const double inflation = cfg.measError + cfg.maxSpeed * (tB + cfg.measDelay);
  Capsule c = part.measuredCapsule;
  c.radius += inflation;
  return c;
}

ContactGraph buildContactGraph(const std::vector<BodyPart>& parts,
                               const std::vector<Capsule>& occupancies, const HumanConfig& cfg) {
  if (parts.size() != occupancies.size())
    throw std::invalid_argument("parts/occupancies size mismatch");
  ContactGraph g;
  g.adjacency.assign(parts.size(), {});
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      if (cfg.isSafePair(parts[a], parts[b])) continue;
      if (geo::capsuleIntersectsCapsule(occupancies[a], occupancies[b])) {
        g.adjacency[a].push_back(static_cast<int>(b));
        g.adjacency[b].push_back(static_cast<int>(a));
      }
    }
  }
  return g;
}

std::vector<CombinedBodyPart> combinedBodyParts(const ContactGraph& graph,
                                                const std::vector<BodyPart>& parts,
                                                const std::vector<Capsule>& occupancies) {
  const int n = static_cast<int>(parts.size());
  std::vector<int> component(n, -1);
  int numComponents = 0;
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    // iterative depth-first search
    std::vector<int> stack{s};
    component[s] = numComponents;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : graph.adjacency[v]) {
        if (component[w] < 0) {
          component[w] = numComponents;
          stack.push_back(w);
        }
      }
    }
    ++numComponents;
  }
  std::vector<CombinedBodyPart> combined(numComponents);
  for (int v = 0; v < n; ++v) {
    auto& c = combined[component[v]];
    c.members.push_back(v);
    c.diameter += parts[v].diameter;
    c.occupancy.push_back(occupancies[v]);
  }
  std::vector<CombinedBodyPart> out;
  for (auto& c : combined) {
    if (c.members.size() > 1) out.push_back(std::move(c));
  }
  return out;
}

HumanConfig HumanConfig::loadFromYamlFile(const std::string& path,
                                          std::map<std::string, BodyPart>* partTemplates) {
  const YAML::Node root = YAML::LoadFile(path);
  HumanConfig cfg;
  cfg.maxSpeed = root["max_speed"].as<double>(1.6);
  if (cfg.maxSpeed <= 0.0) throw std::runtime_error("max_speed must be positive");
  cfg.measError = root["meas_error"].as<double>(0.0);
  cfg.measDelay = root["meas_delay"].as<double>(0.0);
  if (root["safe_pairs"]) {
    for (const auto& pn : root["safe_pairs"]) {
      cfg.safePairs.insert({pn[0].as<std::string>(), pn[1].as<std::string>()});
    }
  }
  std::vector<std::string> ids;
  if (partTemplates && root["parts"]) {
    for (const auto& pn : root["parts"]) {
      BodyPart p;
      p.id = pn["id"].as<std::string>();
      p.kind = bodyKindFromString(pn["kind"].as<std::string>());
      p.diameter = pn["diameter"].as<double>();
      if (p.diameter <= 0.0) throw std::runtime_error("part diameter must be positive");
      (*partTemplates)[p.id] = p;
      ids.push_back(p.id);
    }
  }
  // Alternative spelling: list only the pairs that CAN be clamped together;
  // every other same-human pair is safe.
  if (root["clampable_pairs"]) {
    if (ids.empty())
      throw std::runtime_error("clampable_pairs requires a parts list in the same file");
    std::set<std::pair<std::string, std::string>> clampable;
    for (const auto& pn : root["clampable_pairs"]) {
      clampable.insert({pn[0].as<std::string>(), pn[1].as<std::string>()});
      clampable.insert({pn[1].as<std::string>(), pn[0].as<std::string>()});
    }
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        if (!clampable.count({ids[a], ids[b]})) cfg.safePairs.insert({ids[a], ids[b]});
      }
    }
  }
  return cfg;
}

} // namespace shield::human
