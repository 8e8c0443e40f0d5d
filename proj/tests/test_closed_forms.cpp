#include "crofton/closed_forms.hpp"
#include "crofton/exact/pi_eval.hpp"
#include "crofton/exact/pi_text.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <optional>
#include <vector>

using namespace crofton;

namespace {

PiNumber P(const char* s) { return parse_pi(s); }

std::vector<PiNumber> Ps(std::initializer_list<const char*> xs) {
  std::vector<PiNumber> out;
  for (auto x : xs) out.push_back(parse_pi(x));
  return out;
}

}  // namespace

TEST(ZeroCell, TableRows) {
  EXPECT_EQ(zero_cell_f_vector(1).entries, Ps({"2"}));
  EXPECT_EQ(zero_cell_f_vector(2).entries, Ps({"pi^2/2", "pi^2/2"}));
  EXPECT_EQ(zero_cell_f_vector(3).entries, Ps({"4*pi^2/3", "2*pi^2", "2 + 2*pi^2/3"}));
  EXPECT_EQ(zero_cell_f_vector(4).entries, Ps({"3*pi^4/8", "3*pi^4/4", "5*pi^2", "5*pi^2 - 3*pi^4/8"}));
}

TEST(ZeroCell, EulerAndSimplicity) {
  for (int d = 1; d <= 12; ++d) {
    const auto f = zero_cell_f_vector(d);
    EXPECT_EQ(euler_sum(f), PiNumber(1)) << d;
    if (d >= 2) EXPECT_EQ(f.entries[1] * BigRational(2), f.entries[0] * BigRational(d)) << d;
    for (const auto& e : f.entries) EXPECT_GT(pi_eval_float(e), 0.0);
  }
}

TEST(ZeroCell, ClassicalSpecialCases) {
  EXPECT_EQ(zero_cell_vertices(2), P("pi^2/2"));
  EXPECT_EQ(zero_cell_vertices(3), P("4/3*pi^2"));
  EXPECT_EQ(zero_cell_ridges(4), P("5*pi^2"));
  // kappa_3 = 4 pi / 3
  EXPECT_EQ(zero_cell_vertices(3), P("16/9*pi^2") * BigRational(6, 8));
  for (int d = 2; d <= 12; ++d) {
    const auto f = zero_cell_f_vector(d);
    EXPECT_EQ(f.entries[0], zero_cell_vertices(d));
    EXPECT_EQ(f.entries[d - 2], zero_cell_ridges(d));
  }
}

TEST(ZeroCell, IntrinsicVolumes) {
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(zero_cell_intrinsic_volume(d, 0, BigRational(3)), PiNumber(1));
  EXPECT_EQ(zero_cell_intrinsic_volume(1, 1, BigRational(1)), PiNumber(2));
  EXPECT_EQ(zero_cell_intrinsic_volume(2, 2, BigRational(1)), P("pi^3/2"));
  // V_l scales like gamma^-l
  EXPECT_EQ(zero_cell_intrinsic_volume(3, 2, BigRational(2)), zero_cell_intrinsic_volume(3, 2, BigRational(1)) / BigRational(4));
  EXPECT_THROW(zero_cell_intrinsic_volume(2, 3, BigRational(1)), std::domain_error);
  EXPECT_THROW(zero_cell_intrinsic_volume(2, 1, BigRational(0)), std::domain_error);
}

TEST(Limit, DualToZeroCell) {
  for (int d = 1; d <= 10; ++d) {
    const auto lim = limit_f_vector(d);
    const auto z = zero_cell_f_vector(d);
    for (int k = 0; k < d; ++k) EXPECT_EQ(lim[k], z.entries[d - k - 1]);
    EXPECT_EQ(lim[d - 1], zero_cell_vertices(d));
    if (d >= 2) EXPECT_EQ(lim[1], zero_cell_ridges(d));
  }
  EXPECT_EQ(limit_f_vector(2)[0], P("pi^2/2"));
}

TEST(HalfSphere, SimplexCase) {
  for (int d = 1; d <= 6; ++d) {
    const auto f = half_sphere_f_vector(d + 1, d);
    for (int k = 0; k < d; ++k) EXPECT_EQ(f[k], PiNumber(BigRational(binomial(d + 1, k + 1)))) << d << "," << k;
  }
  EXPECT_EQ(expected_edges(3, 2), PiNumber(3));
}

TEST(HalfSphere, DegenerateSampleSize) {
  try {
    half_sphere_f_vector(3, 3);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "degenerate sample size");
  }
}

TEST(HalfSphere, CrossChecks) {
  for (int d = 1; d <= 6; ++d)
    for (int n = d + 1; n <= 12; ++n) {
      const auto h = half_sphere_f_vector(n, d);
      EXPECT_EQ(h[d - 1], barany_facets(n, d)) << n << "," << d;
      if (d >= 2) {
        EXPECT_EQ(h[1], expected_edges(n, d));
        EXPECT_EQ(h[d - 1] * BigRational(d), h[d - 2] * BigRational(2));
      }
      for (int k = 0; k < d; ++k) {
        if (n == d + 2) EXPECT_EQ(h[k], f_vector_d_plus_2(d, k));
        if (n == d + 3) EXPECT_EQ(h[k], f_vector_d_plus_3(d, k));
      }
    }
}

TEST(HalfSphere, DPlusTwoExamples) {
  EXPECT_EQ(f_vector_d_plus_2(2, 0), P("6 - 24/pi^2"));
  EXPECT_EQ(f_vector_d_plus_2(1, 0), PiNumber(2));
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(f_vector_d_plus_2(d, 0), PiNumber(d + 2) - sylvester_probability(d));
}

TEST(HalfSphere, ApproachesLimit) {
  const auto lim = limit_f_vector(3);
  const auto h = half_sphere_f_vector(200, 3);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(pi_eval_float(h[k]) / pi_eval_float(lim[k]), 1.0, 1e-2);
}

TEST(Sylvester, TableValues) {
  EXPECT_EQ(sylvester_probability(1), PiNumber(1));
  EXPECT_EQ(sylvester_probability(2), P("-2 + 24/pi^2"));
  EXPECT_EQ(sylvester_probability(5), P("1/3 + 105/8*pi^-4 - 35/8*pi^-2"));
  EXPECT_NEAR(pi_eval_float(sylvester_probability(2)), 0.4317, 5e-5);
  for (int d = 1; d <= 10; ++d) {
    const double p = pi_eval_float(sylvester_probability(d));
    EXPECT_GT(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

// E|t1 - t2| / (2 pi) for independent uniform angles on [0, pi], by 2-D
// quadrature.
TEST(SolidAngle, OneDimensionalOracle) {
  using boost::math::quadrature::gauss_kronrod;
  auto inner = [](double s) {
    return gauss_kronrod<double, 31>::integrate([s](double t) { return std::abs(s - t); }, 0.0, s, 10, 1e-13) +
           gauss_kronrod<double, 31>::integrate([s](double t) { return std::abs(s - t); }, s, M_PI, 10, 1e-13);
  };
  const double mean_gap = gauss_kronrod<double, 31>::integrate(inner, 0.0, M_PI, 10, 1e-13) / (M_PI * M_PI);
  EXPECT_NEAR(pi_eval_float(expected_solid_angle(2, 1)), mean_gap / (2 * M_PI), 1e-12);
  EXPECT_EQ(expected_solid_angle(2, 1), PiNumber(BigRational(1, 6)));
}

TEST(SolidAngle, IncreasesTowardHalf) {
  double prev = 0.0;
  for (int n = 3; n <= 30; ++n) {
    const double a = pi_eval_float(expected_solid_angle(n, 2));
    EXPECT_GT(a, prev) << n;
    EXPECT_LT(a, 0.5);
    prev = a;
  }
}

TEST(SolidAngle, EfronClosure) {
  for (int d = 1; d <= 5; ++d)
    for (int n = d + 1; n <= 10; ++n)
      EXPECT_EQ(PiNumber(n + 1) - half_sphere_f_vector(n + 1, d)[0],
                expected_solid_angle(n, d) * BigRational(2 * (n + 1)))
          << n << "," << d;
}

TEST(Constants, GrassmannCStarCoverEfron) {
  EXPECT_EQ(grassmann_constant(1, 2), P("pi^2/4"));
  EXPECT_EQ(cover_efron_limit(1, 3), 12);
  EXPECT_EQ(cover_efron_limit(2, 3), 8);
  for (int d = 1; d <= 10; ++d) {
    const PiNumber omega = PiNumber::monomial(2, d + 1) / gamma_half(d + 1);
    EXPECT_EQ(c_star(d) * BigRational(2) / omega, limit_f_vector(d)[0]) << d;
  }
}

TEST(DehnSommerville, Examples) {
  auto f3 = dehn_sommerville_closure(3, {std::nullopt, P("2*pi^2"), std::nullopt});
  EXPECT_EQ(f3.entries, zero_cell_f_vector(3).entries);
  auto f2 = dehn_sommerville_closure(2, {P("pi^2/2"), std::nullopt});
  EXPECT_EQ(f2.entries, Ps({"pi^2/2", "pi^2/2"}));
  const auto z4 = zero_cell_f_vector(4).entries;
  auto f4 = dehn_sommerville_closure(4, {z4[0], std::nullopt, z4[2], std::nullopt});
  EXPECT_EQ(f4.entries, z4);
}

TEST(DehnSommerville, IdempotentOnCompleteVectors) {
  for (int d = 1; d <= 10; ++d) {
    const auto z = zero_cell_f_vector(d).entries;
    std::vector<std::optional<PiNumber>> full(z.begin(), z.end());
    EXPECT_EQ(dehn_sommerville_closure(d, full).entries, z);
  }
}

TEST(DehnSommerville, RejectsInconsistentInput) {
  EXPECT_THROW(dehn_sommerville_closure(3, {P("1"), P("2*pi^2"), std::nullopt}), std::invalid_argument);
  EXPECT_THROW(dehn_sommerville_closure(4, {std::nullopt, std::nullopt, std::nullopt, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(dehn_sommerville_closure(2, {P("1")}), std::invalid_argument);
}
