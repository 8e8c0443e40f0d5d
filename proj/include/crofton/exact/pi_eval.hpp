#pragma once

// Float evaluation of PiNumber. The coefficients of high-order values
// (sine moments, B{n,k} for large n) cancel catastrophically, so the sum is
// formed in MPFR with a working precision that grows until the accumulated
// rounding bound is far below one double ulp of the result.

#include "crofton/exact/pi_number.hpp"

#include <mpfr.h>

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace crofton {

namespace detail {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct EvalResult {
  double value;
  bool converged;
};

inline EvalResult eval_at_precision(const PiNumber& a, mpfr_prec_t prec) {
  Mpfr sqrt_pi(prec), term(prec), sum(prec), abs_sum(prec), tmp(prec);
  mpfr_const_pi(sqrt_pi.get(), MPFR_RNDN);
  mpfr_sqrt(sqrt_pi.get(), sqrt_pi.get(), MPFR_RNDN);
  mpfr_set_zero(sum.get(), 1);
  mpfr_set_zero(abs_sum.get(), 1);
  for (const auto& [e2, c] : a.terms()) {
    mpfr_pow_si(term.get(), sqrt_pi.get(), e2, MPFR_RNDN);
    mpfr_mul_q(term.get(), term.get(), c.value().get_mpq_t(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_abs(tmp.get(), term.get(), MPFR_RNDN);
    mpfr_add(abs_sum.get(), abs_sum.get(), tmp.get(), MPFR_RNDN);
  }
  // Each term carries a few rounding errors relative to its own magnitude,
  // growing with |exponent|; bound them all by abs_sum * 2^(slack - prec).
  const long slack = 16 + static_cast<long>(std::log2(1.0 + static_cast<double>(a.terms().size()))) +
                     static_cast<long>(std::log2(2.0 + std::abs(a.terms().rbegin()->first) +
                                                 std::abs(a.terms().begin()->first)));
  bool converged = false;
  if (!mpfr_zero_p(sum.get())) {
    const long gap = mpfr_get_exp(abs_sum.get()) - mpfr_get_exp(sum.get());
    converged = gap + slack + 64 < static_cast<long>(prec);
  }
  return {mpfr_get_d(sum.get(), MPFR_RNDN), converged};
}

}  // namespace detail

/// Nearest double to the exact real value.
inline double pi_eval_float(const PiNumber& a) {
  if (a.is_zero()) return 0.0;
  for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t{1} << 22); prec *= 2) {
    const auto r = detail::eval_at_precision(a, prec);
    if (r.converged) {
      if (!std::isfinite(r.value)) throw std::overflow_error("overflow");
      return r.value;
    }
  }
  throw std::runtime_error("pi_eval_float: precision limit reached");
}

}  // namespace crofton
