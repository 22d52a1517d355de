#pragma once

#include "ctreg/common.hpp"

#include <functional>
#include <vector>

namespace ctreg {

enum class InterpScheme {
  Linear,      ///< piecewise linear between samples
  CubicHermite ///< Catmull-Rom tangents, C1, interpolates the knots
};

/// Time-stamped state samples with an interpolation rule; represents the
/// continuous curve t -> phi(t).
class Trajectory {
public:
  Trajectory() = default;

  /// states holds one sample per column, aligned with times.
  Trajectory(std::vector<double> times, Eigen::MatrixXd states,
             InterpScheme interp = InterpScheme::Linear);

  std::size_t size() const { return times_.size(); }
  Eigen::Index dim() const { return states_.rows(); }
  double t_begin() const { return times_.front(); }
  double t_end() const { return times_.back(); }
  const std::vector<double>& times() const { return times_; }
  const Eigen::MatrixXd& states() const { return states_; }
  Point state(std::size_t i) const { return states_.col(static_cast<Eigen::Index>(i)); }
  InterpScheme interp() const { return interp_; }
  void set_interp(InterpScheme s) { interp_ = s; }

  /// Interpolated state; t must lie within [t_begin, t_end].
  Point at(double t) const;

  /// 2-D trajectory of two selected coordinates; times unchanged.
  Trajectory project(Eigen::Index axis_a, Eigen::Index axis_b) const;

  /// Every stride-th sample (first sample always kept).
  Trajectory subsample(std::size_t stride) const;

private:
  std::vector<double> times_;
  Eigen::MatrixXd states_; // dim x size
  InterpScheme interp_ = InterpScheme::Linear;
};

/// Scalar measurements y(t_i) along a trajectory.
struct Observations {
  std::vector<double> times;
  Eigen::VectorXd values;

  /// Linearly interpolated value; t must lie within the sampled range.
  double at(double t) const;
};

/// Sample a scalar function of the state at every trajectory sample.
Observations observe(const Trajectory& traj,
                     const std::function<double(const Point&)>& g);

} // namespace ctreg
