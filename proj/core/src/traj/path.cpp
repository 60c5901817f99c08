#include "shield/traj/path.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace shield::traj {

namespace {

// Clamped cubic spline (zero end slopes): solve for knot first derivatives.
// Returns per-knot derivative values for one joint.
std::vector<double> splineSlopes(const std::vector<double>& t, const std::vector<double>& y) {
  const int n = static_cast<int>(t.size());
  std::vector<double> lower(n, 0), diag(n, 0), upper(n, 0), rhs(n, 0);
  diag[0] = 1.0;
  rhs[0] = 0.0; // clamped: q'(start) = 0
  for (int i = 1; i + 1 < n; ++i) {
    const double hPrev = t[i] - t[i - 1];
    const double hNext = t[i + 1] - t[i];
    lower[i] = 1.0 / hPrev;
    diag[i] = 2.0 * (1.0 / hPrev + 1.0 / hNext);
    upper[i] = 1.0 / hNext;
    rhs[i] = 3.0 * ((y[i] - y[i - 1]) / (hPrev * hPrev) + (y[i + 1] - y[i]) / (hNext * hNext));
  }
  diag[n - 1] = 1.0;
  rhs[n - 1] = 0.0; // clamped: q'(end) = 0
  // Thomas algorithm
  for (int i = 1; i < n; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> m(n);
  m[n - 1] = rhs[n - 1] / diag[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
  }
  return m;
}

} // namespace

JointPath::JointPath(std::vector<double> times, std::vector<JointVector> waypoints)
    : times_(std::move(times)), waypoints_(std::move(waypoints)) {
  if (times_.size() != waypoints_.size() || times_.size() < 2)
    throw std::invalid_argument("path needs >= 2 timed waypoints");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (times_[i] <= times_[i - 1])
      throw std::invalid_argument("waypoint times must be strictly increasing");
  }
  if (std::abs(times_.front()) > 1e-12)
    throw std::invalid_argument("path must start at time 0");
  dof_ = static_cast<int>(waypoints_.front().size());
  for (const auto& w : waypoints_) {
    if (w.size() != dof_) throw std::invalid_argument("inconsistent waypoint dimension");
  }
  cyclic_ = (waypoints_.front() - waypoints_.back()).norm() < 1e-9;

  const int nSeg = static_cast<int>(times_.size()) - 1;
  coeffs_.assign(nSeg, Eigen::MatrixXd::Zero(dof_, 4));
  for (int j = 0; j < dof_; ++j) {
    std::vector<double> y(times_.size());
    for (std::size_t k = 0; k < times_.size(); ++k) y[k] = waypoints_[k][j];
    const auto m = splineSlopes(times_, y);
    for (int k = 0; k < nSeg; ++k) {
      const double h = times_[k + 1] - times_[k];
      const double dy = y[k + 1] - y[k];
      coeffs_[k](j, 0) = y[k];
      coeffs_[k](j, 1) = m[k];
      coeffs_[k](j, 2) = (3.0 * dy / h - 2.0 * m[k] - m[k + 1]) / h;
      coeffs_[k](j, 3) = (-2.0 * dy / h + m[k] + m[k + 1]) / (h * h);
    }
  }
}

int JointPath::segmentIndex(double s) const {
  const auto it = std::upper_bound(times_.begin(), times_.end(), s);
  int k = static_cast<int>(it - times_.begin()) - 1;
  return std::clamp(k, 0, static_cast<int>(coeffs_.size()) - 1);
}

JointVector JointPath::position(double s) const {
  if (cyclic_ && s > length()) s = std::fmod(s, length());
  s = std::clamp(s, 0.0, length());
  const int k = segmentIndex(s);
  const double u = s - times_[k];
  const auto& c = coeffs_[k];
  return c.col(0) + u * (c.col(1) + u * (c.col(2) + u * c.col(3)));
}

JointVector JointPath::velocity(double s) const {
  if (cyclic_ && s > length()) s = std::fmod(s, length());
  if (s < 0.0 || s > length()) return JointVector::Zero(dof_);
  const int k = segmentIndex(s);
  const double u = s - times_[k];
  const auto& c = coeffs_[k];
  return c.col(1) + u * (2.0 * c.col(2) + 3.0 * u * c.col(3));
}

JointVector JointPath::acceleration(double s) const {
  if (cyclic_ && s > length()) s = std::fmod(s, length());
  if (s < 0.0 || s > length()) return JointVector::Zero(dof_);
  const int k = segmentIndex(s);
  const double u = s - times_[k];
  const auto& c = coeffs_[k];
  return 2.0 * c.col(2) + 6.0 * u * c.col(3);
}

JointVector JointPath::jerk(double s) const {
  if (cyclic_ && s > length()) s = std::fmod(s, length());
  if (s < 0.0 || s > length()) return JointVector::Zero(dof_);
  const int k = segmentIndex(s);
  return 6.0 * coeffs_[k].col(3);
}

ScalarLimits JointPath::deriveScalarLimits(const robot::RobotModel& model, double nominalRate,
                                           double safety) const {
  if (model.dof() != dof_) throw std::invalid_argument("path/model dof mismatch");
  const int samples = 4000;
  Eigen::VectorXd d1 = Eigen::VectorXd::Zero(dof_);
  Eigen::VectorXd d2 = Eigen::VectorXd::Zero(dof_);
  Eigen::VectorXd d3 = Eigen::VectorXd::Zero(dof_);
  for (int k = 0; k <= samples; ++k) {
    const double s = length() * k / samples;
    d1 = d1.cwiseMax(velocity(s).cwiseAbs());
    d2 = d2.cwiseMax(acceleration(s).cwiseAbs());
    d3 = d3.cwiseMax(jerk(s).cwiseAbs());
  }
  ScalarLimits lim;
  lim.vMax = nominalRate;
  lim.aMax = std::numeric_limits<double>::infinity();
  lim.jMax = std::numeric_limits<double>::infinity();
  for (int j = 0; j < dof_; ++j) {
    const auto& js = model.joints[j];
    if (d1[j] > 1e-12) {
      lim.vMax = std::min(lim.vMax, js.qdotMax / d1[j]);
    }
  }
  for (int j = 0; j < dof_; ++j) {
    const auto& js = model.joints[j];
    if (d1[j] > 1e-12) {
      const double aBudget = js.qddotMax - d2[j] * lim.vMax * lim.vMax;
      if (aBudget <= 0.0)
        throw std::runtime_error("path curvature exhausts the joint acceleration limit");
      lim.aMax = std::min(lim.aMax, safety * aBudget / d1[j]);
    }
  }
  for (int j = 0; j < dof_; ++j) {
    const auto& js = model.joints[j];
    if (d1[j] > 1e-12) {
      const double jBudget = js.qdddotMax - d3[j] * std::pow(lim.vMax, 3) -
                             3.0 * d2[j] * lim.vMax * lim.aMax;
      if (jBudget <= 0.0)
        throw std::runtime_error("path curvature exhausts the joint jerk limit");
      lim.jMax = std::min(lim.jMax, safety * jBudget / d1[j]);
    }
  }
  if (!std::isfinite(lim.aMax)) lim.aMax = 1.0;
  if (!std::isfinite(lim.jMax)) lim.jMax = 10.0;
  return lim;
}

JointPath JointPath::loadFromCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trajectory file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty trajectory file");
  std::vector<double> times;
  std::vector<JointVector> waypoints;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<double> vals;
    while (std::getline(ss, field, ',')) vals.push_back(std::stod(field));
    if (vals.size() < 2) throw std::runtime_error("malformed waypoint row: " + line);
    times.push_back(vals[0]);
    JointVector q(vals.size() - 1);
    for (std::size_t k = 1; k < vals.size(); ++k) q[k - 1] = vals[k];
    waypoints.push_back(q);
  }
  return JointPath(std::move(times), std::move(waypoints));
}

} // namespace shield::traj
