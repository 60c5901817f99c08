#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shield/geometry/types.hpp"

namespace shield::human {

using geo::Capsule;
using geo::Vec3;

struct TraceSample {
  double time{0.0};
  Capsule capsule;
};

/// Recorded motion of one scene: per (human, part) a strictly increasing
/// sequence of capsule samples. Replay is open loop.
class HumanTrace {
 public:
  using Key = std::pair<int, std::string>; // (human_id, part_id)

  void addSample(int humanId, const std::string& partId, double time, const Capsule& c);

  /// Latest sample at or before t; nullopt before the first sample.
  std::optional<TraceSample> measurementAt(int humanId, const std::string& partId, double t) const;

  /// Linear interpolation of the true capsule at t (clamped to the ends).
  std::optional<Capsule> interpolateAt(int humanId, const std::string& partId, double t) const;

  const std::map<Key, std::vector<TraceSample>>& channels() const { return channels_; }
  bool empty() const { return channels_.empty(); }

  /// CSV columns: time_s, human_id, part_id, p1x, p1y, p1z, p2x, p2y, p2z, radius_m.
  static HumanTrace loadFromCsvFile(const std::string& path);
  void saveToCsvFile(const std::string& path) const;

 private:
  std::map<Key, std::vector<TraceSample>> channels_;
};

} // namespace shield::human
