#include "ctreg/kernel.hpp"

#include <cmath>

namespace ctreg {

void KernelSpec::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("KernelSpec: beta must be positive and finite");
}

namespace {

inline double radial_value(const KernelSpec& spec, double sq_dist) {
  switch (spec.family) {
  case KernelFamily::MaternSobolev32: {
    const double r = spec.distance_mode == DistanceMode::SquaredNorm
                         ? sq_dist
                         : std::sqrt(sq_dist);
    const double u = std::sqrt(3.0) * r / spec.beta;
    return (1.0 + u) * std::exp(-u);
  }
  case KernelFamily::Gaussian:
    return std::exp(-sq_dist / spec.beta);
  }
  throw std::invalid_argument("KernelSpec: unknown family");
}

} // namespace

double eval_kernel(const KernelSpec& spec, const Point& x, const Point& y) {
  spec.validate();
  if (x.size() != y.size())
    throw std::invalid_argument("eval_kernel: dimension mismatch");
  if (x.size() == 0)
    throw std::invalid_argument("eval_kernel: empty points");
  require_finite(x, "eval_kernel x");
  require_finite(y, "eval_kernel y");
  return radial_value(spec, (x - y).squaredNorm());
}

double kernel_sup_bound(const KernelSpec& spec) {
  spec.validate();
  return 1.0; // both families peak at K(x, x) = 1
}

Eigen::VectorXd kernel_vector(const KernelSpec& spec, const Eigen::MatrixXd& points,
                              const Point& x) {
  spec.validate();
  if (points.cols() == 0)
    throw std::invalid_argument("kernel_vector: empty basis");
  if (points.rows() != x.size())
    throw std::invalid_argument("kernel_vector: dimension mismatch");
  require_finite(x, "kernel_vector x");
  Eigen::VectorXd out(points.cols());
  for (Eigen::Index j = 0; j < points.cols(); ++j)
    out[j] = radial_value(spec, (points.col(j) - x).squaredNorm());
  return out;
}

Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const Eigen::MatrixXd& rows,
                            const Eigen::MatrixXd& cols) {
  spec.validate();
  if (rows.cols() > 0 && cols.cols() > 0 && rows.rows() != cols.rows())
    throw std::invalid_argument("gram_matrix: dimension mismatch");
  if (!rows.allFinite() || !cols.allFinite())
    throw std::invalid_argument("gram_matrix: non-finite points");
  Eigen::MatrixXd k(rows.cols(), cols.cols());
  for (Eigen::Index j = 0; j < cols.cols(); ++j)
    for (Eigen::Index i = 0; i < rows.cols(); ++i)
      k(i, j) = radial_value(spec, (rows.col(i) - cols.col(j)).squaredNorm());
  return k;
}

Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const Eigen::MatrixXd& points) {
  Eigen::MatrixXd k = gram_matrix(spec, points, points);
  return 0.5 * (k + k.transpose());
}

} // namespace ctreg
