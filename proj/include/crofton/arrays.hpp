#pragma once

// The triangular arrays A[n,k] and B{n,k}, the sine moments behind B, and
// the expected external/internal angle sums of beta' simplices at alpha = 1,
// beta = n/2.

#include "crofton/exact/pi_number.hpp"
#include "crofton/exact/series.hpp"
#include "crofton/memo.hpp"

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace crofton {

/// Q_n(x) = prod over j in {1..n-1}, j != n (mod 2), of (1 + j^2 x^2).
/// coeffs[i] is the coefficient of x^(2i).
struct QnPolynomial {
  int n = 0;
  std::vector<mpz_class> coeffs{1};

  int degree() const { return 2 * (static_cast<int>(coeffs.size()) - 1); }
  int factor_count() const { return static_cast<int>(coeffs.size()) - 1; }
  /// [x^k] Q_n, zero for odd or out-of-range k.
  mpz_class coefficient(int k) const {
    if (k < 0 || k % 2 != 0 || k > degree()) return 0;
    return coeffs[k / 2];
  }
};

namespace detail {

inline MemoTable<int, QnPolynomial>& q_cache() {
  static MemoTable<int, QnPolynomial> t;
  return t;
}
inline MemoTable<std::pair<int, int>, PiNumber>& a_cache() {
  static MemoTable<std::pair<int, int>, PiNumber> t;
  return t;
}
inline MemoTable<int, std::vector<PiNumber>>& a_oracle_cache() {
  static MemoTable<int, std::vector<PiNumber>> t;
  return t;
}
inline MemoTable<int, PiNumber>& sin_moment_cache() {
  static MemoTable<int, PiNumber> t;
  return t;
}
inline MemoTable<std::pair<int, int>, PiNumber>& b_cache() {
  static MemoTable<std::pair<int, int>, PiNumber> t;
  return t;
}
inline MemoTable<std::pair<int, int>, PiNumber>& j_rec_cache() {
  static MemoTable<std::pair<int, int>, PiNumber> t;
  return t;
}

}  // namespace detail

inline QnPolynomial q_poly(int n) {
  if (n < 0) throw std::domain_error("q_poly: negative n");
  return detail::q_cache().get_or_compute(n, [n] {
    QnPolynomial q;
    q.n = n;
    for (int j = n - 1; j >= 1; j -= 2) {
      const mpz_class jj = j * j;
      q.coeffs.push_back(0);
      for (std::size_t i = q.coeffs.size() - 1; i >= 1; --i) q.coeffs[i] += jj * q.coeffs[i - 1];
    }
    return q;
  });
}

/// Exact A[n,k] for n >= 0 and any integer k, by coefficient extraction from
/// Q_n(x) (even k) or Q_n(x) * tanh(pi/2x) resp. coth(pi/2x) (odd k, n even
/// resp. odd). The multiplier is expanded in powers of 1/x only as far as
/// deg Q_n needs, so no truncation error exists.
inline PiNumber a_value(int n, int k) {
  if (n < 0) throw std::domain_error("a_value: negative n");
  if (k > n) return PiNumber();
  if (k % 2 == 0) return k < 0 ? PiNumber() : PiNumber(BigRational(q_poly(n).coefficient(k)));
  return detail::a_cache().get_or_compute({n, k}, [n, k] {
    const QnPolynomial q = q_poly(n);
    const bool use_coth = n % 2 != 0;
    PiNumber sum;
    for (int i = 0; i <= q.factor_count(); ++i) {
      const int power = k - 2 * i;  // power of x needed from the multiplier
      if (power == 1) {
        if (use_coth) sum += PiNumber::monomial(BigRational(2) * BigRational(q.coeffs[i]), -2);
        continue;
      }
      if (power > 1) continue;
      const int m = -power;  // x^(-m) <-> (pi/2)^m
      const BigRational c = use_coth ? coth_coeff(m) : tanh_coeff(m);
      sum += PiNumber::monomial(c * BigRational(q.coeffs[i]) / BigRational(pow2(m)), 2 * m);
    }
    return sum;
  });
}

namespace detail {

/// One full row A[n,0..n] using only the boundary values, the recurrence in n
/// and the Euler-type closure for A[n,1].
inline std::vector<PiNumber> a_oracle_row(int n) {
  if (n == 0) return {PiNumber(1)};
  auto diagonal = [](int m) {
    const PiNumber g = gamma_half(m + 2);  // Gamma(m/2 + 1)
    const BigRational num = BigRational(factorial(m)) * BigRational(factorial(m)) / BigRational(pow2(m));
    return PiNumber(num) / (g * g);
  };
  std::vector<PiNumber> row(n + 1);
  row[0] = PiNumber(1);
  row[n] = diagonal(n);
  row[n - 1] = PiNumber::monomial(BigRational(1, 2), 2) * row[n];
  if (n <= 2) return row;
  if (n >= 4) {
    const std::vector<PiNumber> prev = a_oracle_cache().get_or_compute(n - 2, [n] { return a_oracle_row(n - 2); });
    for (int k = 2; k <= n - 2; ++k) row[k] = prev[k] + BigRational((n - 1) * (n - 1)) * prev[k - 2];
  }
  PiNumber acc = PiNumber((n - 1) % 2 == 0 ? 2 : 0);
  for (int k = 2; k <= n; ++k) {
    const PiNumber term = PiNumber::monomial(BigRational(1) / BigRational(factorial(k)), 2 * k) * row[k];
    if (k % 2 == 0) acc += term; else acc -= term;
  }
  row[1] = PiNumber::pi_pow(-1) * acc;
  return row;
}

}  // namespace detail

/// A[n,k] determined only by A[n,0] = 1, the closed diagonal values, the
/// recurrence A[n,k] = A[n-2,k] + (n-1)^2 A[n-2,k-2] and the Euler relation.
/// Independent of the series route in a_value.
inline PiNumber a_value_oracle(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("a_value_oracle: need 0 <= k <= n");
  return detail::a_oracle_cache().get_or_compute(n, [n] { return detail::a_oracle_row(n); })[k];
}

/// Integral of x^m sin x over [0, pi].
inline PiNumber sin_moment(int m) {
  if (m < 0) throw std::domain_error("sin_moment: negative order");
  if (auto hit = detail::sin_moment_cache().find(m)) return *hit;
  // I_m = pi^m - m(m-1) I_{m-2}, iterated from I_0 = 2 or I_1 = pi
  const int start = m % 2;
  PiNumber value = start == 0 ? PiNumber(2) : PiNumber::pi_pow(1);
  for (int j = start + 2; j <= m; j += 2) {
    if (auto hit = detail::sin_moment_cache().find(j)) {
      value = *hit;
      continue;
    }
    value = PiNumber::pi_pow(j) - BigRational(static_cast<long>(j) * (j - 1)) * value;
    detail::sin_moment_cache().insert(j, value);
  }
  return detail::sin_moment_cache().insert(m, value);
}

/// B{n,k} = 1/((k-1)!(n-k)!) * integral_0^pi sin^(k-1)(x) x^(n-k) dx,
/// extended by B{n,0} = pi^n/n! and B{n,k} = 0 for k > n.
inline PiNumber b_value(int n, int k) {
  if (n < 1 || k < 0) throw std::domain_error("b_value: need n >= 1, k >= 0");
  if (k > n) return PiNumber();
  if (k <= 1) return PiNumber::monomial(BigRational(1) / BigRational(factorial(n)), 2 * n);
  if (k == 2) return sin_moment(n - 2) / BigRational(factorial(n - 2));
  if (auto hit = detail::b_cache().find({n, k})) return *hit;
  // B{n-2,k-2} - B{n-2,k} = (k-1)^2 B{n,k}
  const PiNumber v = (b_value(n - 2, k - 2) - b_value(n - 2, k)) / BigRational((k - 1) * (k - 1));
  return detail::b_cache().insert({n, k}, v);
}

/// Pluggable A/B providers. Closed forms and the identity suite accept one so
/// that test harnesses can substitute deliberately faulty arrays.
struct ArraySource {
  std::function<PiNumber(int, int)> a;
  std::function<PiNumber(int, int)> b;
};

inline const ArraySource& exact_arrays() {
  static const ArraySource src{[](int n, int k) { return a_value(n, k); },
                               [](int n, int k) { return b_value(n, k); }};
  return src;
}

/// c~_{1,(k+1)/2} = Gamma((k+1)/2) / (sqrt(pi) Gamma(k/2)), the beta' density
/// constant on the line.
inline PiNumber c_tilde_line(int k) {
  if (k < 1) throw std::domain_error("c_tilde_line: k must be positive");
  return gamma_half(k + 1) / (PiNumber::pi_half_pow(1) * gamma_half(k));
}

/// Expected sum of external angles at k-vertex faces, alpha = 1.
inline PiNumber i_tilde_bb(int n, int k, const ArraySource& src = exact_arrays()) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("i_tilde_bb: need 1 <= k <= n");
  const PiNumber v = PiNumber::pi_pow(k - n) * c_tilde_line(k) * src.b(n, k) *
                     (BigRational(factorial(n)) / BigRational(k));
  return require_integral(v, "i_tilde_bb");
}

/// (m-1)^2 A[m-2, j] with the m = 1, j = -1 value taken as 2/pi.
inline PiNumber weighted_a(int m, int j, const ArraySource& src = exact_arrays()) {
  if (m == 1) return j == -1 ? PiNumber::monomial(2, -2) : PiNumber();
  if (m < 1) throw std::domain_error("weighted_a: m must be positive");
  return src.a(m - 2, j) * BigRational((m - 1) * (m - 1));
}

/// Expected sum of internal angles at k-vertex faces of the beta' simplex
/// with n vertices, beta = n/2, in closed form.
inline PiNumber j_tilde_bb(int n, int k, const ArraySource& src = exact_arrays()) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("j_tilde_bb: need 1 <= k <= n");
  const PiNumber v = PiNumber::monomial(BigRational(n) / BigRational(mpz_class(factorial(k) * 2)), 2 * (k - n)) /
                     c_tilde_line(n) * weighted_a(n, k - 2, src);
  return require_integral(v, "j_tilde_bb");
}

namespace detail {

inline PiNumber j_tilde_recursive_uncached(int n, int k, const ArraySource& src) {
  // Ladder m = k or k+1, ..., n in steps of 2.
  const int m0 = (n - k) % 2 == 0 ? k : k + 1;
  std::vector<PiNumber> ladder;
  for (int m = m0; m <= n; m += 2) {
    if (m == k) {
      ladder.emplace_back(1);
      continue;
    }
    PiNumber v(BigRational(binomial(m, k)) / BigRational(2));
    for (int s = 1; m - 2 * s >= k; ++s)
      v -= i_tilde_bb(m, m - 2 * s, src) * ladder[(m - 2 * s - m0) / 2];
    ladder.push_back(std::move(v));
  }
  return ladder.back();
}

}  // namespace detail

/// Same quantity as j_tilde_bb, solved from the triangular Gauss-Bonnet
/// system through the external-angle sums. Uses only B, never A.
inline PiNumber j_tilde_recursive(int n, int k, const ArraySource& src = exact_arrays()) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("j_tilde_recursive: need 1 <= k <= n");
  if (&src != &exact_arrays()) return detail::j_tilde_recursive_uncached(n, k, src);
  return detail::j_rec_cache().get_or_compute({n, k}, [&] { return detail::j_tilde_recursive_uncached(n, k, src); });
}

inline void clear_array_caches() {
  detail::q_cache().clear();
  detail::a_cache().clear();
  detail::a_oracle_cache().clear();
  detail::sin_moment_cache().clear();
  detail::b_cache().clear();
  detail::j_rec_cache().clear();
}

}  // namespace crofton
