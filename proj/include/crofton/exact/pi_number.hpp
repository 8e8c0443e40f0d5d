#pragma once

// Exact elements of Q[pi^(1/2), pi^(-1/2)]: finite Laurent sums of rational
// multiples of half-integer powers of pi.

#include "crofton/exact/big_rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace crofton {

class PiNumber {
 public:
  /// Keyed by twice the pi exponent. Stored coefficients are never zero.
  using TermMap = std::map<int, BigRational>;

  PiNumber() = default;
  PiNumber(const BigRational& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
  PiNumber(int c) : PiNumber(BigRational(c)) {}       // NOLINT(google-explicit-constructor)

  /// c * pi^(twice_exp / 2)
  static PiNumber monomial(const BigRational& c, int twice_exp) {
    PiNumber r;
    r.add_term(twice_exp, c);
    return r;
  }
  /// pi^e for integer e.
  static PiNumber pi_pow(int e) { return monomial(1, 2 * e); }
  /// pi^(twice_exp / 2)
  static PiNumber pi_half_pow(int twice_exp) { return monomial(1, twice_exp); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_rational() const { return terms_.empty() || (is_monomial() && terms_.begin()->first == 0); }

  /// Only integer powers of pi present.
  bool is_integral() const {
    for (const auto& [e2, c] : terms_)
      if (e2 % 2 != 0) return false;
    return true;
  }

  /// Coefficient of pi^(twice_exp/2); zero if absent.
  BigRational coefficient(int twice_exp) const {
    auto it = terms_.find(twice_exp);
    return it == terms_.end() ? BigRational() : it->second;
  }

  BigRational to_rational() const {
    if (!is_rational()) throw std::domain_error("PiNumber is not rational");
    return coefficient(0);
  }

  PiNumber& operator+=(const PiNumber& o) {
    for (const auto& [e2, c] : o.terms_) add_term(e2, c);
    return *this;
  }
  PiNumber& operator-=(const PiNumber& o) {
    for (const auto& [e2, c] : o.terms_) add_term(e2, -c);
    return *this;
  }
  PiNumber& operator*=(const PiNumber& o) { return *this = *this * o; }
  PiNumber& operator*=(const BigRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e2, c] : terms_) c *= s;
    return *this;
  }
  PiNumber& operator/=(const BigRational& s) {
    if (s.is_zero()) throw std::domain_error("division by zero");
    for (auto& [e2, c] : terms_) c /= s;
    return *this;
  }

  friend PiNumber operator+(PiNumber a, const PiNumber& b) { return a += b; }
  friend PiNumber operator-(PiNumber a, const PiNumber& b) { return a -= b; }
  friend PiNumber operator*(const PiNumber& a, const PiNumber& b) {
    PiNumber r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend PiNumber operator*(PiNumber a, const BigRational& s) { return a *= s; }
  friend PiNumber operator*(const BigRational& s, PiNumber a) { return a *= s; }
  friend PiNumber operator/(PiNumber a, const BigRational& s) { return a /= s; }
  friend PiNumber operator/(const PiNumber& a, const PiNumber& b) { return a * b.inverse(); }
  PiNumber operator-() const {
    PiNumber r = *this;
    for (auto& [e2, c] : r.terms_) c = -c;
    return r;
  }

  /// Defined for monomials only; the ring has no general inverses we need.
  PiNumber inverse() const {
    if (!is_monomial()) throw std::domain_error("inverse of a non-monomial PiNumber");
    const auto& [e2, c] = *terms_.begin();
    return monomial(BigRational(1) / c, -e2);
  }

  friend bool operator==(const PiNumber& a, const PiNumber& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(int twice_exp, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(twice_exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

inline PiNumber pi_add(const PiNumber& a, const PiNumber& b) { return a + b; }
inline PiNumber pi_mul(const PiNumber& a, const PiNumber& b) { return a * b; }
inline PiNumber pi_neg(const PiNumber& a) { return -a; }
inline PiNumber pi_scale(const PiNumber& a, const BigRational& s) { return a * s; }

/// Error raised when a formula result keeps a half-integer power of pi.
class HalfExponentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline PiNumber require_integral(PiNumber v, const char* what) {
  if (!v.is_integral())
    throw HalfExponentError(std::string(what) + ": half-integer power of pi did not cancel");
  return v;
}

}  // namespace crofton
