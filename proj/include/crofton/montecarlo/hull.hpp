#pragma once

// Face counting for the convex hull of points in R^d in general position.
// Each point p is lifted to the unit vector (1, p)/|(1, p)|, so facets of the
// hull are the d-subsets whose linear span is a supporting hyperplane of the
// cone over the lifted points. Signed distances are then angles, which makes
// one tolerance meaningful regardless of where p lies.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace crofton::mc {

inline constexpr int kMaxHullPoints = 25;
inline constexpr int kMaxHullDim = 8;
inline constexpr double kSupportTol = 1e-9;
inline constexpr double kConeTol = 1e-10;

struct HullFaces {
  std::vector<long> f;         // f_0 .. f_{d-1}
  std::uint32_t vertices = 0;  // bit i set iff point i is a vertex
};

namespace detail {

inline Eigen::MatrixXd lift(const std::vector<Eigen::VectorXd>& pts, int d) {
  Eigen::MatrixXd u(d + 1, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].size() != d) throw std::invalid_argument("point dimension mismatch");
    u(0, i) = 1.0;
    u.block(1, i, d, 1) = pts[i];
    u.col(i).normalize();
  }
  return u;
}

/// Unit vector orthogonal to the d given columns of R^(d+1), by cofactor
/// expansion; nullopt if the columns are numerically dependent.
inline std::optional<Eigen::VectorXd> normal_of(const Eigen::MatrixXd& cols) {
  const Eigen::Index d = cols.cols();
  Eigen::MatrixXd rows = cols.transpose();  // d x (d+1)
  Eigen::VectorXd nu(d + 1);
  Eigen::MatrixXd minor(d, d);
  for (Eigen::Index c = 0; c <= d; ++c) {
    for (Eigen::Index j = 0, jj = 0; j <= d; ++j) {
      if (j == c) continue;
      minor.col(jj++) = rows.col(j);
    }
    const double det = d == 0 ? 1.0 : minor.determinant();
    nu[c] = (c % 2 == 0 ? det : -det);
  }
  const double len = nu.norm();
  if (!(len > 1e-12)) return std::nullopt;
  return Eigen::VectorXd(nu / len);
}

inline void add_subsets(std::uint32_t mask, int size, std::set<std::uint32_t>& out) {
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) idx.push_back(i);
  const int m = static_cast<int>(idx.size());
  for (std::uint32_t sel = 0; sel < (1u << m); ++sel) {
    if (__builtin_popcount(sel) != size) continue;
    std::uint32_t sub = 0;
    for (int b = 0; b < m; ++b)
      if (sel & (1u << b)) sub |= 1u << idx[b];
    out.insert(sub);
  }
}

}  // namespace detail

/// f-vector of conv(pts) for n >= d+1 points in general position in R^d.
/// Returns nullopt when some subset is too close to degenerate to classify
/// reliably; the caller is expected to discard and resample the trial.
/// Throws if all points lie in a common hyperplane.
inline std::optional<HullFaces> hull_f_vector(const std::vector<Eigen::VectorXd>& pts, int d) {
  const int n = static_cast<int>(pts.size());
  if (d < 1 || d > kMaxHullDim) throw std::invalid_argument("hull dimension out of range");
  if (n > kMaxHullPoints) throw std::invalid_argument("too many points for subset enumeration");
  if (n < d + 1) throw std::invalid_argument("degenerate configuration");
  const Eigen::MatrixXd u = detail::lift(pts, d);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(u);
  lu.setThreshold(1e-12);
  if (lu.rank() < d + 1) throw std::invalid_argument("degenerate configuration");

  std::vector<std::uint32_t> facets;
  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  Eigen::MatrixXd cols(d + 1, d);
  for (;;) {
    std::uint32_t mask = 0;
    for (int i = 0; i < d; ++i) {
      cols.col(i) = u.col(comb[i]);
      mask |= 1u << comb[i];
    }
    const auto nu = detail::normal_of(cols);
    if (!nu) return std::nullopt;
    bool pos = false, neg = false, near = false;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) continue;
      const double s = nu->dot(u.col(j));
      if (s > kSupportTol) pos = true;
      if (s < -kSupportTol) neg = true;
      if (std::abs(s) <= 10 * kSupportTol) near = true;
    }
    if (!(pos && neg)) {
      if (near) return std::nullopt;
      facets.push_back(mask);
    }
    // next combination in lexicographic order
    int i = d - 1;
    while (i >= 0 && comb[i] == n - d + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
  }

  HullFaces out;
  out.f.assign(d, 0);
  for (int k = 0; k < d - 1; ++k) {
    std::set<std::uint32_t> faces;
    for (auto m : facets) detail::add_subsets(m, k + 1, faces);
    out.f[k] = static_cast<long>(faces.size());
  }
  out.f[d - 1] = static_cast<long>(facets.size());
  for (auto m : facets) out.vertices |= m;
  return out;
}

/// Whether query lies in the positive hull of the d+1 generators in R^(d+1).
/// nullopt for a singular system or a coefficient too close to the boundary.
inline std::optional<bool> cone_contains(const std::vector<Eigen::VectorXd>& generators, const Eigen::VectorXd& query) {
  const Eigen::Index dim = query.size();
  if (static_cast<Eigen::Index>(generators.size()) != dim) throw std::invalid_argument("need dim generators");
  Eigen::MatrixXd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) g.col(i) = generators[i].normalized();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
  if (!(std::abs(lu.determinant()) > 1e-12)) return std::nullopt;
  const Eigen::VectorXd lambda = lu.solve(query);
  bool inside = true;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (std::abs(lambda[i]) <= 10 * kConeTol) return std::nullopt;
    if (lambda[i] < -kConeTol) inside = false;
  }
  return inside;
}

}  // namespace crofton::mc
