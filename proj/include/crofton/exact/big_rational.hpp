#pragma once

// Arbitrary-precision rationals in canonical form, backed by GMP.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crofton {

/// Reduced fraction num/den with den >= 1. Zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  BigRational(const mpz_class& v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  BigRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p" or "p/q" in base 10 with an optional leading sign.
  static BigRational from_string(std::string_view s) {
    std::string text(s);
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return BigRational(mpz_class(text, 10));
      return BigRational(mpz_class(text.substr(0, slash), 10),
                         mpz_class(text.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string to_string() const { return v_.get_str(10); }
  double to_double() const { return v_.get_d(); }

  BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const { return BigRational(mpq_class(-v_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

inline BigRational rat_normalize(const mpz_class& num, const mpz_class& den) {
  return BigRational(num, den);
}

inline mpz_class factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Zero outside 0 <= k <= n.
inline mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline mpz_class pow2(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

}  // namespace crofton
