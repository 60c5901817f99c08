#include "shield/human/trace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace shield::human {

void HumanTrace::addSample(int humanId, const std::string& partId, double time,
                           const Capsule& c) {
  auto& chan = channels_[{humanId, partId}];
  if (!chan.empty() && time <= chan.back().time)
    throw std::invalid_argument("trace timestamps must be strictly increasing per part");
  chan.push_back({time, c});
}

std::optional<TraceSample> HumanTrace::measurementAt(int humanId, const std::string& partId,
                                                     double t) const {
  const auto it = channels_.find({humanId, partId});
  if (it == channels_.end()) return std::nullopt;
  const auto& chan = it->second;
  auto ub = std::upper_bound(chan.begin(), chan.end(), t,
                             [](double v, const TraceSample& s) { return v < s.time; });
  if (ub == chan.begin()) return std::nullopt;
  return *(ub - 1);
}

std::optional<Capsule> HumanTrace::interpolateAt(int humanId, const std::string& partId,
                                                 double t) const {
  const auto it = channels_.find({humanId, partId});
  if (it == channels_.end() || it->second.empty()) return std::nullopt;
  const auto& chan = it->second;
  if (t <= chan.front().time) return chan.front().capsule;
  if (t >= chan.back().time) return chan.back().capsule;
  auto ub = std::upper_bound(chan.begin(), chan.end(), t,
                             [](double v, const TraceSample& s) { return v < s.time; });
  const TraceSample& b = *ub;
  const TraceSample& a = *(ub - 1);
  const double w = (t - a.time) / (b.time - a.time);
  Capsule c;
  c.p1 = (1.0 - w) * a.capsule.p1 + w * b.capsule.p1;
  c.p2 = (1.0 - w) * a.capsule.p2 + w * b.capsule.p2;
  c.radius = (1.0 - w) * a.capsule.radius + w * b.capsule.radius;
  return c;
}

HumanTrace HumanTrace::loadFromCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);
  HumanTrace trace;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty trace file: " + path);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 10) throw std::runtime_error("malformed trace row: " + line);
    const double t = std::stod(fields[0]);
    const int humanId = std::stoi(fields[1]);
    const std::string partId = fields[2];
    Capsule c(Vec3(std::stod(fields[3]), std::stod(fields[4]), std::stod(fields[5])),
              Vec3(std::stod(fields[6]), std::stod(fields[7]), std::stod(fields[8])),
              std::stod(fields[9]));
    trace.addSample(humanId, partId, t, c);
  }
  return trace;
}

void HumanTrace::saveToCsvFile(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace file: " + path);
  out << "time_s,human_id,part_id,p1x,p1y,p1z,p2x,p2y,p2z,radius_m\n";
  out.precision(12);
  for (const auto& [key, chan] : channels_) {
    for (const auto& s : chan) {
      out << s.time << ',' << key.first << ',' << key.second << ',' << s.capsule.p1.x() << ','
          << s.capsule.p1.y() << ',' << s.capsule.p1.z() << ',' << s.capsule.p2.x() << ','
          << s.capsule.p2.y() << ',' << s.capsule.p2.z() << ',' << s.capsule.radius << '\n';
    }
  }
}

} // namespace shield::human
