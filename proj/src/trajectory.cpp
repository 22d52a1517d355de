#include "ctreg/trajectory.hpp"

#include <algorithm>
#include <cmath>

namespace ctreg {

Trajectory::Trajectory(std::vector<double> times, Eigen::MatrixXd states,
                       InterpScheme interp)
    : times_(std::move(times)), states_(std::move(states)), interp_(interp) {
  if (times_.empty())
    throw std::invalid_argument("Trajectory: no samples");
  if (static_cast<Eigen::Index>(times_.size()) != states_.cols())
    throw std::invalid_argument("Trajectory: times/states length mismatch");
  if (states_.rows() < 1)
    throw std::invalid_argument("Trajectory: zero-dimensional states");
  if (!states_.allFinite())
    throw std::invalid_argument("Trajectory: non-finite state");
  for (std::size_t i = 0; i + 1 < times_.size(); ++i)
    if (!(times_[i] < times_[i + 1]))
      throw std::invalid_argument("Trajectory: times not strictly increasing at index " +
                                  std::to_string(i + 1));
  if (!std::isfinite(times_.front()) || !std::isfinite(times_.back()))
    throw std::invalid_argument("Trajectory: non-finite time");
}

namespace {

// Index k with times[k] <= t <= times[k+1]; assumes t in range and size >= 2.
std::size_t locate(const std::vector<double>& times, double t) {
  auto it = std::upper_bound(times.begin(), times.end(), t);
  std::size_t k = static_cast<std::size_t>(it - times.begin());
  if (k == 0) return 0;
  if (k >= times.size()) return times.size() - 2;
  return k - 1;
}

} // namespace

Point Trajectory::at(double t) const {
  if (!(t >= times_.front() && t <= times_.back()))
    throw std::invalid_argument("Trajectory::at: t = " + std::to_string(t) +
                                " outside [" + std::to_string(times_.front()) + ", " +
                                std::to_string(times_.back()) + "]");
  if (times_.size() == 1)
    return states_.col(0);

  const std::size_t k = locate(times_, t);
  const double t0 = times_[k], t1 = times_[k + 1];
  const double w = (t - t0) / (t1 - t0);
  if (interp_ == InterpScheme::Linear)
    return (1.0 - w) * states_.col(k) + w * states_.col(k + 1);

  // Catmull-Rom: finite-difference tangents, one-sided at the ends.
  const Eigen::Index n = states_.cols();
  auto tangent = [&](std::size_t i) -> Point {
    if (i == 0)
      return (states_.col(1) - states_.col(0)) / (times_[1] - times_[0]);
    if (i + 1 == static_cast<std::size_t>(n))
      return (states_.col(n - 1) - states_.col(n - 2)) / (times_[n - 1] - times_[n - 2]);
    return (states_.col(i + 1) - states_.col(i - 1)) / (times_[i + 1] - times_[i - 1]);
  };
  const double dt = t1 - t0;
  const Point m0 = tangent(k) * dt;
  const Point m1 = tangent(k + 1) * dt;
  const double w2 = w * w, w3 = w2 * w;
  const double h00 = 2 * w3 - 3 * w2 + 1;
  const double h10 = w3 - 2 * w2 + w;
  const double h01 = -2 * w3 + 3 * w2;
  const double h11 = w3 - w2;
  return h00 * states_.col(k) + h10 * m0 + h01 * states_.col(k + 1) + h11 * m1;
}

Trajectory Trajectory::project(Eigen::Index axis_a, Eigen::Index axis_b) const {
  if (axis_a < 0 || axis_b < 0 || axis_a >= dim() || axis_b >= dim())
    throw std::invalid_argument("Trajectory::project: axis out of range");
  if (axis_a == axis_b)
    throw std::invalid_argument("Trajectory::project: axes must be distinct");
  Eigen::MatrixXd s(2, states_.cols());
  s.row(0) = states_.row(axis_a);
  s.row(1) = states_.row(axis_b);
  return Trajectory(times_, std::move(s), interp_);
}

Trajectory Trajectory::subsample(std::size_t stride) const {
  if (stride == 0)
    throw std::invalid_argument("Trajectory::subsample: zero stride");
  if (stride == 1)
    return *this;
  const std::size_t n = (times_.size() + stride - 1) / stride;
  std::vector<double> ts;
  ts.reserve(n);
  Eigen::MatrixXd s(states_.rows(), static_cast<Eigen::Index>(n));
  std::size_t j = 0;
  for (std::size_t i = 0; i < times_.size(); i += stride) {
    ts.push_back(times_[i]);
    s.col(static_cast<Eigen::Index>(j++)) = states_.col(static_cast<Eigen::Index>(i));
  }
  return Trajectory(std::move(ts), std::move(s), interp_);
}

double Observations::at(double t) const {
  if (times.empty())
    throw std::invalid_argument("Observations::at: empty");
  if (!(t >= times.front() && t <= times.back()))
    throw std::invalid_argument("Observations::at: t = " + std::to_string(t) +
                                " outside sampled range");
  if (times.size() == 1)
    return values[0];
  const std::size_t k = locate(times, t);
  const double w = (t - times[k]) / (times[k + 1] - times[k]);
  return (1.0 - w) * values[static_cast<Eigen::Index>(k)] +
         w * values[static_cast<Eigen::Index>(k + 1)];
}

Observations observe(const Trajectory& traj,
                     const std::function<double(const Point&)>& g) {
  Observations obs;
  obs.times = traj.times();
  obs.values.resize(static_cast<Eigen::Index>(traj.size()));
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double v = g(traj.state(i));
    if (!std::isfinite(v))
      throw std::invalid_argument("observe: non-finite output at t = " +
                                  std::to_string(traj.times()[i]));
    obs.values[static_cast<Eigen::Index>(i)] = v;
  }
  return obs;
}

} // namespace ctreg
