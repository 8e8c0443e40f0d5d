#include "crofton/arrays.hpp"
#include "crofton/exact/pi_eval.hpp"
#include "crofton/exact/pi_text.hpp"
#include "crofton/exact/series.hpp"

#include <gtest/gtest.h>
#include <mpfr.h>

#include <cmath>
#include <random>
#include <vector>

using namespace crofton;

namespace {

PiNumber random_pi(std::mt19937& rng, bool half_exponents = true) {
  std::uniform_int_distribution<int> terms(0, 4), exp(-6, 6), num(-40, 40), den(1, 30);
  PiNumber v;
  const int count = terms(rng);
  for (int i = 0; i < count; ++i) {
    int e2 = exp(rng);
    if (!half_exponents) e2 *= 2;
    v += PiNumber::monomial(BigRational(num(rng), den(rng)), e2);
  }
  return v;
}

// Independent 2048-bit evaluation: every term evaluated and summed at fixed
// high precision, then rounded once.
double reference_eval(const PiNumber& v) {
  mpfr_t pi, sqrt_pi, term, sum;
  mpfr_inits2(2048, pi, sqrt_pi, term, sum, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_sqrt(sqrt_pi, pi, MPFR_RNDN);
  mpfr_set_zero(sum, 1);
  for (const auto& [e2, c] : v.terms()) {
    mpfr_pow_si(term, sqrt_pi, e2, MPFR_RNDN);
    mpfr_mul_q(term, term, c.value().get_mpq_t(), MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
  }
  const double out = mpfr_get_d(sum, MPFR_RNDN);
  mpfr_clears(pi, sqrt_pi, term, sum, static_cast<mpfr_ptr>(nullptr));
  return out;
}

double ulp_distance(double a, double b) {
  if (a == b) return 0.0;
  const double ulp = std::nextafter(std::abs(b), INFINITY) - std::abs(b);
  return std::abs(a - b) / ulp;
}

}  // namespace

TEST(BigRational, CanonicalForm) {
  EXPECT_EQ(BigRational(6, 4).to_string(), "3/2");
  EXPECT_EQ(BigRational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(BigRational(0, 7).to_string(), "0");
  EXPECT_EQ(rat_normalize(10, -4), BigRational(-5, 2));
  EXPECT_THROW(BigRational(1, 0), std::domain_error);
  EXPECT_THROW(BigRational(1) / BigRational(0), std::domain_error);
  EXPECT_EQ(BigRational::from_string("-12/8"), BigRational(-3, 2));
  EXPECT_THROW(BigRational::from_string("x/2"), std::invalid_argument);
}

TEST(BigRational, Combinatorics) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(4, 7), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(pow2(40), mpz_class("1099511627776"));
}

TEST(PiNumber, RingAxiomsRandomized) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const PiNumber a = random_pi(rng), b = random_pi(rng), c = random_pi(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, PiNumber());
    EXPECT_EQ(a * PiNumber(1), a);
    EXPECT_EQ(a + PiNumber(), a);
  }
}

TEST(PiNumber, ZeroTermsNeverStored) {
  const PiNumber a = PiNumber::monomial(BigRational(1, 3), 4);
  const PiNumber z = a - a;
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  EXPECT_TRUE(PiNumber::monomial(0, 6).terms().empty());
}

TEST(PiNumber, MonomialDivision) {
  const PiNumber x = PiNumber::monomial(BigRational(3, 4), 3);
  EXPECT_EQ(x / x, PiNumber(1));
  EXPECT_EQ((PiNumber(2) + PiNumber::pi_pow(1)) / PiNumber::pi_pow(2), PiNumber::monomial(2, -4) + PiNumber::pi_pow(-1));
  EXPECT_THROW(PiNumber(1) / (PiNumber(1) + PiNumber::pi_pow(1)), std::domain_error);
  EXPECT_THROW(PiNumber(1) / BigRational(0), std::domain_error);
}

TEST(PiNumber, RequireIntegral) {
  EXPECT_NO_THROW(require_integral(PiNumber::pi_pow(3), "x"));
  EXPECT_THROW(require_integral(PiNumber::pi_half_pow(1), "x"), HalfExponentError);
}

TEST(PiText, CanonicalExamples) {
  EXPECT_EQ(format_pi(PiNumber()), "0");
  EXPECT_EQ(format_pi(PiNumber::monomial(BigRational(1, 2), 4) * BigRational(1)), "1/2*pi^2");
  EXPECT_EQ(format_pi(PiNumber::monomial(24, -4) - PiNumber(2)), "24/pi^2 - 2");
  EXPECT_EQ(format_pi(PiNumber::monomial(BigRational(-200, 3), -4)), "-200/3*pi^-2");
  EXPECT_EQ(format_pi(PiNumber::pi_pow(1)), "pi");
  EXPECT_EQ(format_pi(PiNumber::monomial(-1, -2)), "-1/pi");
  EXPECT_EQ(format_pi(PiNumber::monomial(BigRational(3, 2), -1)), "3/2*pi^(-1/2)");
}

TEST(PiText, ParseAcceptsLooseForms) {
  EXPECT_EQ(parse_pi("pi^2/2"), PiNumber::monomial(BigRational(1, 2), 4));
  EXPECT_EQ(parse_pi("5*pi^2 - 3*pi^4/8"), parse_pi("5*pi^2 - 3/8*pi^4"));
  EXPECT_EQ(parse_pi(" -2 +24 / pi^2"), parse_pi("24/pi^2 - 2"));
  EXPECT_EQ(parse_pi("pi^(-1/2)"), PiNumber::pi_half_pow(-1));
}

TEST(PiText, ParseFormatRoundTrip) {
  std::mt19937 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const PiNumber a = random_pi(rng);
    EXPECT_EQ(parse_pi(format_pi(a)), a) << format_pi(a);
    EXPECT_EQ(pi_from_json(to_json(a)), a);
  }
}

TEST(PiText, ParseErrorsCarryPosition) {
  try {
    parse_pi("1 + + 2");
    FAIL();
  } catch (const PiParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_pi(""), PiParseError);
  EXPECT_THROW(parse_pi("3*"), PiParseError);
  EXPECT_THROW(parse_pi("1/0"), PiParseError);
  EXPECT_THROW(parse_pi("pi^(1/3)"), PiParseError);
}

TEST(PiText, Latex) {
  EXPECT_EQ(to_latex(parse_pi("24/pi^2 - 2")), "\\frac{24}{\\pi^{2}} - 2");
  EXPECT_EQ(to_latex(parse_pi("1/2*pi")), "\\frac{\\pi}{2}");
}

TEST(Series, BernoulliKnownValues) {
  EXPECT_EQ(bernoulli(0), BigRational(1));
  EXPECT_EQ(bernoulli(1), BigRational(-1, 2));
  EXPECT_EQ(bernoulli(2), BigRational(1, 6));
  EXPECT_EQ(bernoulli(3), BigRational(0));
  EXPECT_EQ(bernoulli(12), BigRational(-691, 2730));
  EXPECT_EQ(bernoulli(20), BigRational(-174611, 330));
}

TEST(Series, BernoulliRecurrence) {
  for (int m = 1; m <= 40; ++m) {
    BigRational s;
    for (int j = 0; j <= m; ++j) s += BigRational(binomial(m + 1, j)) * bernoulli(j);
    EXPECT_TRUE(s.is_zero()) << m;
  }
}

// tanh = sinh/cosh and z coth z = cosh / (sinh z / z) by power series
// division over the rationals.
TEST(Series, TanhCothAgainstSeriesDivision) {
  const int order = 42;
  std::vector<BigRational> s(order + 2), c(order + 2), t(order + 2);
  for (int m = 0; m <= order + 1; ++m) {
    const BigRational inv(mpz_class(1), factorial(m));
    (m % 2 ? s : c)[m] = inv;
    if (m % 2 == 0) t[m] = BigRational(mpz_class(1), factorial(m + 1));
  }
  std::vector<BigRational> q(order + 1), r(order + 1);
  for (int m = 0; m <= order; ++m) {
    q[m] = s[m];
    r[m] = c[m];
    for (int i = 0; i < m; ++i) {
      q[m] -= q[i] * c[m - i];
      r[m] -= r[i] * t[m - i];
    }
  }
  for (int m = 1; m <= 41; m += 2) {
    EXPECT_EQ(tanh_coeff(m), q[m]) << m;
    EXPECT_EQ(coth_coeff(m), r[m + 1]) << m;
  }
  EXPECT_EQ(coth_coeff(-1), BigRational(1));
  EXPECT_THROW(tanh_coeff(2), std::domain_error);
  EXPECT_THROW(coth_coeff(-3), std::domain_error);
}

TEST(Series, GammaHalf) {
  EXPECT_EQ(gamma_half(1), PiNumber::pi_half_pow(1));
  EXPECT_EQ(gamma_half(2), PiNumber(1));
  EXPECT_EQ(gamma_half(5), PiNumber::monomial(BigRational(3, 4), 1));
  for (int m = 1; m <= 40; ++m) EXPECT_EQ(gamma_half(m + 2), gamma_half(m) * BigRational(m, 2)) << m;
  EXPECT_THROW(gamma_half(0), std::domain_error);
}

TEST(PiEval, WithinFourUlps) {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const PiNumber a = random_pi(rng);
    if (a.is_zero()) continue;
    EXPECT_LE(ulp_distance(pi_eval_float(a), reference_eval(a)), 4.0) << format_pi(a);
  }
  // heavy cancellation
  for (int n = 20; n <= 120; n += 20)
    for (int k : {2, 3, 7}) {
      const PiNumber b = b_value(n, k);
      EXPECT_LE(ulp_distance(pi_eval_float(b), reference_eval(b)), 4.0) << n << "," << k;
    }
}

TEST(PiEval, Overflow) {
  EXPECT_THROW(pi_eval_float(PiNumber::pi_pow(1000)), std::overflow_error);
  EXPECT_EQ(pi_eval_float(PiNumber()), 0.0);
  EXPECT_DOUBLE_EQ(pi_eval_float(parse_pi("24/pi^2 - 2")), 24 / (M_PI * M_PI) - 2);
}
