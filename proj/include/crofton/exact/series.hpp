#pragma once

// Bernoulli numbers, the Taylor/Laurent coefficients of tanh and coth, and
// Gamma at half-integers.

#include "crofton/exact/big_rational.hpp"
#include "crofton/exact/pi_number.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace crofton {

/// B_m with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
inline BigRational bernoulli(int m) {
  if (m < 0) throw std::domain_error("bernoulli: negative index");
  static std::mutex mu;
  static std::vector<BigRational> table{BigRational(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= m) {
    const long next = static_cast<long>(table.size());
    BigRational acc;
    for (long j = 0; j < next; ++j) acc += BigRational(binomial(next + 1, j)) * table[j];
    table.push_back(-acc / BigRational(next + 1));
  }
  return table[m];
}

/// [z^m] tanh z for odd m >= 1.
inline BigRational tanh_coeff(int m) {
  if (m < 1 || m % 2 == 0) throw std::domain_error("invalid series index");
  const long two_j = m + 1;
  return BigRational(mpz_class(pow2(two_j) * (pow2(two_j) - 1))) * bernoulli(static_cast<int>(two_j)) /
         BigRational(factorial(two_j));
}

/// [z^m] coth z for m = -1 or odd m >= 1.
inline BigRational coth_coeff(int m) {
  if (m < -1 || m % 2 == 0) throw std::domain_error("invalid series index");
  const long two_j = m + 1;
  return BigRational(pow2(two_j)) * bernoulli(static_cast<int>(two_j)) / BigRational(factorial(two_j));
}

/// Gamma(m/2) for m >= 1: rational for even m, rational * sqrt(pi) for odd m.
inline PiNumber gamma_half(int m) {
  if (m < 1) throw std::domain_error("gamma_half: argument must be positive");
  if (m % 2 == 0) return PiNumber(BigRational(factorial(m / 2 - 1)));
  // Gamma(m/2) = (m-2)!! / 2^((m-1)/2) * sqrt(pi)
  mpz_class dfact = 1;
  for (int j = m - 2; j > 1; j -= 2) dfact *= j;
  return PiNumber::monomial(BigRational(dfact, pow2((m - 1) / 2)), 1);
}

}  // namespace crofton
