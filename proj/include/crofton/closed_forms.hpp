#pragma once

// Exact expectations: f-vectors of the Poisson zero polytope and of random
// half-sphere hulls, solid angles, Sylvester probabilities and the classical
// baselines used to cross-check them.

#include "crofton/arrays.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace crofton {

/// Expected f-vector, entries f_0 .. f_{d-1}. f_d = 1 is implicit.
struct FVectorExact {
  int dim = 0;
  std::vector<PiNumber> entries;
};

/// sum_{k=0}^{d} (-1)^k f_k with f_d = 1.
inline PiNumber euler_sum(const FVectorExact& f) {
  PiNumber s = PiNumber(f.dim % 2 == 0 ? 1 : -1);
  for (int k = 0; k < f.dim; ++k) {
    if (k % 2 == 0) s += f.entries[k]; else s -= f.entries[k];
  }
  return s;
}

namespace detail {

inline void require_dim(int d) {
  if (d < 1) throw std::domain_error("dimension must be positive");
}

inline PiNumber pi_over_factorial(int e) {
  return PiNumber::monomial(BigRational(1) / BigRational(factorial(e)), 2 * e);
}

/// Surface area of the unit sphere in R^m.
inline PiNumber omega(int m) { return PiNumber::monomial(2, m) / gamma_half(m); }

/// sqrt(pi) Gamma(a/2) / Gamma((a+1)/2)
inline PiNumber gamma_ratio(int a) { return PiNumber::pi_half_pow(1) * gamma_half(a) / gamma_half(a + 1); }

}  // namespace detail

inline FVectorExact zero_cell_f_vector(int d, const ArraySource& src = exact_arrays()) {
  detail::require_dim(d);
  FVectorExact f{d, {}};
  for (int l = 0; l < d; ++l) f.entries.push_back(detail::pi_over_factorial(d - l) * src.a(d, d - l));
  return f;
}

/// d! kappa_d^2 / 2^d, independent of the arrays.
inline PiNumber zero_cell_vertices(int d) {
  detail::require_dim(d);
  const PiNumber g = gamma_half(d + 2);
  const PiNumber v = PiNumber::monomial(BigRational(factorial(d), pow2(d)), 2 * d) / (g * g);
  return require_integral(v, "zero_cell_vertices");
}

/// (1/2) C(d+1, 3) pi^2
inline PiNumber zero_cell_ridges(int d) {
  if (d < 2) throw std::domain_error("ridges need d >= 2");
  return PiNumber::monomial(BigRational(binomial(d + 1, 3), 2), 4);
}

/// Expected l-th intrinsic volume of the zero cell of an isotropic Poisson
/// hyperplane tessellation with intensity gamma.
inline PiNumber zero_cell_intrinsic_volume(int d, int l, const BigRational& gamma,
                                           const ArraySource& src = exact_arrays()) {
  detail::require_dim(d);
  if (l < 0 || l > d) throw std::domain_error("intrinsic volume index out of range");
  if (gamma.sign() <= 0) throw std::domain_error("intensity must be positive");
  const PiNumber base = PiNumber::monomial(BigRational(2) / gamma, 2) * gamma_half(d + 1) / gamma_half(d);
  PiNumber v(1);
  for (int i = 0; i < l; ++i) v *= base;
  v *= gamma_half(l + 2) / BigRational(factorial(l));
  v *= src.a(d, l);
  return require_integral(v, "zero_cell_intrinsic_volume");
}

/// n -> infinity limit of the half-sphere hull f-vector, k = 0 .. d-1.
inline std::vector<PiNumber> limit_f_vector(int d, const ArraySource& src = exact_arrays()) {
  detail::require_dim(d);
  std::vector<PiNumber> out;
  for (int k = 0; k < d; ++k) out.push_back(detail::pi_over_factorial(k + 1) * src.a(d, k + 1));
  return out;
}

/// Expected f-vector of the hull of n uniform points on the upper half-sphere
/// of S^d, k = 0 .. d-1.
inline std::vector<PiNumber> half_sphere_f_vector(int n, int d, const ArraySource& src = exact_arrays()) {
  detail::require_dim(d);
  if (n <= d) throw std::domain_error("degenerate sample size");
  std::vector<PiNumber> out;
  for (int k = 0; k < d; ++k) {
    PiNumber sum;
    for (int m = d; m >= k + 1; m -= 2) sum += src.b(n, m) * weighted_a(m, k - 1, src);
    const PiNumber scale = PiNumber::monomial(BigRational(factorial(n)) / BigRational(factorial(k + 1)), 2 * (k + 1 - n));
    out.push_back(require_integral(scale * sum, "half_sphere_f_vector"));
  }
  return out;
}

/// Expected facet number from the integral-geometric facet formula, coded
/// without the A array.
inline PiNumber barany_facets(int n, int d, const ArraySource& src = exact_arrays()) {
  detail::require_dim(d);
  if (n <= d) throw std::domain_error("degenerate sample size");
  const PiNumber ratio = detail::omega(d) * BigRational(2) / detail::omega(d + 1);
  const BigRational c = BigRational(binomial(n, d)) * BigRational(factorial(d - 1)) * BigRational(factorial(n - d));
  return require_integral(ratio * PiNumber::monomial(c, 2 * (d - n)) * src.b(n, d), "barany_facets");
}

inline PiNumber f_vector_d_plus_2(int d, int k, const ArraySource& src = exact_arrays()) {
  detail::require_dim(d);
  if (k < 0 || k >= d) throw std::domain_error("face dimension out of range");
  const PiNumber corr = PiNumber::monomial(BigRational(d + 2) / BigRational(factorial(k + 1)), 2 * (k - d - 1)) *
                        detail::gamma_ratio(d + 2) * BigRational((d + 1) * (d + 1)) * src.a(d, k - 1);
  return require_integral(PiNumber(BigRational(binomial(d + 2, k + 1))) - corr, "f_vector_d_plus_2");
}

inline PiNumber f_vector_d_plus_3(int d, int k, const ArraySource& src = exact_arrays()) {
  detail::require_dim(d);
  if (k < 0 || k >= d) throw std::domain_error("face dimension out of range");
  // sqrt(pi) Gamma((d+4)/2) / Gamma((d+3)/2)
  const PiNumber g = PiNumber::pi_half_pow(1) * gamma_half(d + 4) / gamma_half(d + 3);
  const PiNumber corr = PiNumber::monomial(BigRational(d + 3) / BigRational(factorial(k + 1)), 2 * (k - d - 1)) * g *
                        BigRational((d + 1) * (d + 1)) * src.a(d, k - 1);
  return require_integral(PiNumber(BigRational(binomial(d + 3, k + 1))) - corr, "f_vector_d_plus_3");
}

/// Expected edge count, coded directly from the B array.
inline PiNumber expected_edges(int n, int d, const ArraySource& src = exact_arrays()) {
  if (d < 2) throw std::domain_error("edges need d >= 2");
  if (n <= d) throw std::domain_error("degenerate sample size");
  PiNumber sum;
  for (int m = d; m >= 2; m -= 2) sum += src.b(n, m) * BigRational((m - 1) * (m - 1));
  return PiNumber::monomial(BigRational(factorial(n), 2), 2 * (2 - n)) * sum;
}

/// Expected solid angle of the positive hull of n uniform points on the
/// half-sphere of S^d, normalized so that the full space has angle 1.
inline PiNumber expected_solid_angle(int n, int d, const ArraySource& src = exact_arrays()) {
  detail::require_dim(d);
  if (n <= d) throw std::domain_error("degenerate sample size");
  PiNumber sum;
  for (int m = d + 2; m <= n + 1; m += 2) sum += src.b(n + 1, m) * weighted_a(m, -1, src);
  return require_integral(PiNumber::monomial(BigRational(factorial(n), 2), -2 * n) * sum, "expected_solid_angle");
}

/// Probability that one of d+2 uniform points on the half-sphere lies in the
/// positive hull of the others.
inline PiNumber sylvester_probability(int d, const ArraySource& src = exact_arrays()) {
  detail::require_dim(d);
  const PiNumber v = PiNumber::monomial(BigRational(d + 2) * BigRational((d + 1) * (d + 1)), -2 * (d + 1)) *
                     detail::gamma_ratio(d + 2) * src.a(d, -1);
  return require_integral(v, "sylvester_probability");
}

/// B_{k,d} = (pi^k / 2) A[d,k]
inline PiNumber grassmann_constant(int k, int d, const ArraySource& src = exact_arrays()) {
  detail::require_dim(d);
  if (k < 1 || k > d) throw std::domain_error("need 1 <= k <= d");
  return PiNumber::monomial(BigRational(1, 2), 2 * k) * src.a(d, k);
}

/// C_*(d) = pi omega_{d+1} A[d,1] / 2
inline PiNumber c_star(int d, const ArraySource& src = exact_arrays()) {
  detail::require_dim(d);
  return require_integral(PiNumber::monomial(BigRational(1, 2), 2) * detail::omega(d + 1) * src.a(d, 1), "c_star");
}

/// Face count of the d-dimensional crosspolytope, the limit of the expected
/// f-vector in the Cover-Efron model.
inline mpz_class cover_efron_limit(int k, int d) {
  detail::require_dim(d);
  if (k < 0 || k >= d) throw std::domain_error("face dimension out of range");
  return pow2(k + 1) * binomial(d, k + 1);
}

/// Completes an f-vector of a simple d-polytope from its even-codimension
/// entries via the Dehn-Sommerville equations, then checks every equation.
/// partial has d slots (f_0 .. f_{d-1}); missing values are nullopt.
inline FVectorExact dehn_sommerville_closure(int d, std::vector<std::optional<PiNumber>> partial) {
  detail::require_dim(d);
  if (static_cast<int>(partial.size()) != d) throw std::invalid_argument("partial f-vector must have d entries");
  partial.emplace_back(PiNumber(1));

  // Equation l: sum_{i<l} (-1)^i C(d-i, d-l) f_i + ((-1)^l - 1) f_l = 0.
  auto coeff = [d](int l, int i) {
    BigRational c(binomial(d - i, d - l));
    if (i % 2 != 0) c = -c;
    if (i == l) c -= BigRational(1);
    return c;
  };
  for (int l = 1; l <= d; l += 2) {
    int unknown = -1;
    PiNumber known;
    for (int i = 0; i <= l; ++i) {
      const BigRational c = coeff(l, i);
      if (c.is_zero()) continue;
      if (partial[i]) {
        known += *partial[i] * c;
      } else if (unknown < 0) {
        unknown = i;
      } else {
        throw std::invalid_argument("inconsistent f-vector: too few entries given");
      }
    }
    if (unknown >= 0) partial[unknown] = -known / coeff(l, unknown);
  }

  FVectorExact f{d, {}};
  for (int i = 0; i < d; ++i) {
    if (!partial[i]) throw std::invalid_argument("inconsistent f-vector: too few entries given");
    f.entries.push_back(*partial[i]);
  }
  for (int l = 0; l <= d; ++l) {
    PiNumber r;
    for (int i = 0; i <= l; ++i) r += *partial[i] * coeff(l, i);
    if (!r.is_zero()) throw std::invalid_argument("inconsistent f-vector: Dehn-Sommerville equation fails");
  }
  return f;
}

}  // namespace crofton
