#pragma once

#include "crofton/montecarlo/random.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>

namespace crofton::mc {

/// Points closer than this to the boundary great sphere x_0 = 0 are resampled
/// before projection.
inline constexpr double kPoleThreshold = 1e-9;

/// Uniform point on the upper half-sphere of S^d, as a unit vector in R^(d+1)
/// with nonnegative first coordinate.
inline Eigen::VectorXd sample_half_sphere(int d, RandomStream& rng) {
  if (d < 1) throw std::domain_error("dimension must be positive");
  std::normal_distribution<double> gauss;
  Eigen::VectorXd x(d + 1);
  for (;;) {
    for (int i = 0; i <= d; ++i) x[i] = gauss(rng);
    const double r = x.norm();
    if (r > 0.0) {
      x /= r;
      x[0] = std::abs(x[0]);
      return x;
    }
  }
}

/// (x_1, ..., x_d) / x_0, or nullopt when x_0 is too small to project.
inline std::optional<Eigen::VectorXd> gnomonic_project(const Eigen::VectorXd& p) {
  if (!(p[0] > kPoleThreshold)) return std::nullopt;
  return Eigen::VectorXd(p.tail(p.size() - 1) / p[0]);
}

inline Eigen::VectorXd sample_projected(int d, RandomStream& rng) {
  for (;;) {
    if (auto q = gnomonic_project(sample_half_sphere(d, rng))) return *q;
  }
}

}  // namespace crofton::mc
