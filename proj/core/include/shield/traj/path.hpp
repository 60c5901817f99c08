#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "shield/robot/model.hpp"
#include "shield/traj/scalar_profile.hpp"

namespace shield::traj {

using robot::JointVector;

/// Joint-space path q(s) from timed waypoints, interpolated with clamped
/// cubic splines (zero first derivative at both ends). The path parameter s
/// is the nominal execution time.
class JointPath {
 public:
  JointPath() = default;
  JointPath(std::vector<double> times, std::vector<JointVector> waypoints);

  int dof() const { return dof_; }
  double length() const { return times_.empty() ? 0.0 : times_.back(); }
  bool cyclic() const { return cyclic_; }

  JointVector position(double s) const;
  JointVector velocity(double s) const;   // dq/ds
  JointVector acceleration(double s) const; // d2q/ds2
  JointVector jerk(double s) const;       // d3q/ds3, piecewise constant

  /// Scalar speed/acceleration/jerk limits such that tracking them keeps the
  /// joint trajectory within the model limits. safety in (0, 1] derates the
  /// derived acceleration and jerk limits.
  ScalarLimits deriveScalarLimits(const robot::RobotModel& model, double nominalRate = 1.0,
                                  double safety = 0.5) const;

  /// Waypoint CSV: header, then rows time_s, q0, ..., q{N-1}.
  static JointPath loadFromCsvFile(const std::string& path);

 private:
  int segmentIndex(double s) const;

  int dof_{0};
  bool cyclic_{false};
  std::vector<double> times_;
  std::vector<JointVector> waypoints_;
  // per segment k and joint: cubic coefficients of q(s) = c0 + c1 u + c2 u^2 + c3 u^3,
  // u = s - times_[k]
  std::vector<Eigen::MatrixXd> coeffs_; // index: segment, (dof x 4)
};

} // namespace shield::traj
