#pragma once

// Exact identity suite over the arrays and closed forms. Each family is a
// structurally different relation, so a corrupted A or B value shows up in
// several of them at once.

#include "crofton/closed_forms.hpp"
#include "crofton/exact/pi_text.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace crofton {

struct FamilyResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::string first_failure;
};

namespace detail {

class FamilyRun {
 public:
  explicit FamilyRun(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.checks;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.first_failure = describe();
    }
  }
  void equal(const PiNumber& lhs, const PiNumber& rhs, const std::string& where) {
    check(lhs == rhs, [&] { return where + ": " + format_pi(lhs) + " != " + format_pi(rhs); });
  }
  void fail(const std::string& why) {
    if (r_.passed) r_.first_failure = why;
    r_.passed = false;
  }
  FamilyResult result() const { return r_; }

 private:
  FamilyResult r_;
};

inline std::string at(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

template <class Body>
FamilyResult run_family(const std::string& name, Body&& body) {
  FamilyRun run(name);
  try {
    body(run);
  } catch (const std::exception& e) {
    run.fail(std::string("exception: ") + e.what());
  }
  return run.result();
}

}  // namespace detail

/// Runs every identity family with indices up to max_n (12 for families
/// that involve the internal-angle sums J). Arrays come from src.
inline std::vector<FamilyResult> run_identity_suite(int max_n, const ArraySource& src = exact_arrays()) {
  using detail::at;
  using detail::FamilyRun;
  using detail::run_family;
  const int max_j = std::min(max_n, 12);
  std::vector<FamilyResult> out;

  out.push_back(run_family("A recurrence", [&](FamilyRun& f) {
    for (int n = 2; n <= max_n; ++n)
      for (int k = -1; k <= n; ++k)
        f.equal(src.a(n, k), src.a(n - 2, k) + src.a(n - 2, k - 2) * BigRational((n - 1) * (n - 1)), "A" + at(n, k));
  }));

  out.push_back(run_family("B recurrence", [&](FamilyRun& f) {
    for (int n = 3; n <= max_n; ++n)
      for (int k = 2; k <= n; ++k)
        f.equal(src.b(n - 2, k - 2) - src.b(n - 2, k), src.b(n, k) * BigRational((k - 1) * (k - 1)), "B" + at(n, k));
  }));

  out.push_back(run_family("A series vs oracle", [&](FamilyRun& f) {
    for (int n = 0; n <= max_n; ++n)
      for (int k = 0; k <= n; ++k) f.equal(src.a(n, k), a_value_oracle(n, k), "A" + at(n, k));
  }));

  // sum over m = top, top-2, ... >= k of B{n,m} (m-1)^2 A[m-2,k-2]
  auto strided = [&src](int n, int top, int k) {
    PiNumber s;
    for (int m = top; m >= k; m -= 2) s += src.b(n, m) * weighted_a(m, k - 2, src);
    return s;
  };
  auto pi_frac = [](int e) { return PiNumber::monomial(BigRational(1) / BigRational(factorial(e)), 2 * e); };

  out.push_back(run_family("AB identity, even k", [&](FamilyRun& f) {
    for (int n = 1; n <= max_n; ++n)
      for (int k = 2; k < n; k += 2) f.equal(strided(n, n, k), pi_frac(n - k), at(n, k));
  }));
  out.push_back(run_family("AB identity, same parity", [&](FamilyRun& f) {
    for (int n = 1; n <= max_n; ++n)
      for (int k = 1; k < n; ++k) f.equal(strided(n, n, k), pi_frac(n - k), at(n, k));
  }));
  out.push_back(run_family("AB identity, opposite parity", [&](FamilyRun& f) {
    for (int n = 1; n <= max_n; ++n)
      for (int k = 1; k < n; ++k) f.equal(strided(n, n - 1, k), pi_frac(n - k), at(n, k));
  }));
  out.push_back(run_family("AB identity, full sum", [&](FamilyRun& f) {
    for (int n = 1; n <= max_n; ++n)
      for (int k = 1; k <= n; ++k) f.equal(strided(n, n, k) + strided(n, n - 1, k), pi_frac(n - k) * BigRational(2), at(n, k));
  }));
  out.push_back(run_family("AB identity, alternating", [&](FamilyRun& f) {
    for (int n = 1; n <= max_n; ++n)
      for (int k = 1; k <= n; ++k)
        f.equal(strided(n, n, k) - strided(n, n - 1, k), PiNumber(n == k ? 2 : 0), at(n, k));
  }));

  out.push_back(run_family("Gauss-Bonnet relations", [&](FamilyRun& f) {
    for (int n = 2; n <= max_j; ++n)
      for (int k = 1; k < n; ++k) {
        const PiNumber half_binom(BigRational(binomial(n, k), 2));
        PiNumber even, odd;
        for (int m = n; m >= k; m -= 2) even += i_tilde_bb(n, m, src) * j_tilde_bb(m, k, src);
        for (int m = n - 1; m >= k; m -= 2) odd += i_tilde_bb(n, m, src) * j_tilde_bb(m, k, src);
        f.equal(even, half_binom, "same parity " + at(n, k));
        f.equal(odd, half_binom, "opposite parity " + at(n, k));
      }
  }));

  out.push_back(run_family("J closed form vs recursion", [&](FamilyRun& f) {
    for (int n = 1; n <= max_j; ++n)
      for (int k = 1; k <= n; ++k) f.equal(j_tilde_bb(n, k, src), j_tilde_recursive(n, k, src), "J" + at(n, k));
  }));

  out.push_back(run_family("Euler relation", [&](FamilyRun& f) {
    for (int d = 1; d <= max_n; ++d) f.equal(euler_sum(zero_cell_f_vector(d, src)), PiNumber(1), "d=" + std::to_string(d));
  }));

  out.push_back(run_family("simple polytope 2f1 = d f0", [&](FamilyRun& f) {
    for (int d = 2; d <= max_n; ++d) {
      const auto z = zero_cell_f_vector(d, src);
      f.equal(z.entries[1] * BigRational(2), z.entries[0] * BigRational(d), "d=" + std::to_string(d));
    }
  }));

  out.push_back(run_family("Dehn-Sommerville closure", [&](FamilyRun& f) {
    for (int d = 1; d <= max_n; ++d) {
      const auto z = zero_cell_f_vector(d, src);
      std::vector<std::optional<PiNumber>> partial(d);
      for (int l = 0; l < d; ++l)
        if ((d - l) % 2 == 0) partial[l] = z.entries[l];
      const auto closed = dehn_sommerville_closure(d, partial);
      for (int l = 0; l < d; ++l) f.equal(closed.entries[l], z.entries[l], "d=" + std::to_string(d) + " l=" + std::to_string(l));
    }
  }));

  out.push_back(run_family("zero cell special cases", [&](FamilyRun& f) {
    for (int d = 1; d <= max_n; ++d) {
      const auto z = zero_cell_f_vector(d, src);
      const auto lim = limit_f_vector(d, src);
      f.equal(z.entries[0], zero_cell_vertices(d), "vertices d=" + std::to_string(d));
      if (d >= 2) f.equal(z.entries[d - 2], zero_cell_ridges(d), "ridges d=" + std::to_string(d));
      for (int k = 0; k < d; ++k) f.equal(lim[k], z.entries[d - k - 1], "duality " + at(d, k));
    }
  }));

  out.push_back(run_family("half-sphere cross-checks", [&](FamilyRun& f) {
    const int max_d = std::min(max_n, 6);
    for (int d = 1; d <= max_d; ++d) {
      const int max_pts = std::min(12, std::max(max_n, d + 3));
      for (int n = d + 1; n <= max_pts; ++n) {
        const auto h = half_sphere_f_vector(n, d, src);
        f.equal(h[d - 1], barany_facets(n, d, src), "facets " + at(n, d));
        if (d >= 2) f.equal(h[1], expected_edges(n, d, src), "edges " + at(n, d));
        if (d >= 2) f.equal(h[d - 1] * BigRational(d), h[d - 2] * BigRational(2), "facet-ridge " + at(n, d));
        for (int k = 0; k < d; ++k) {
          if (n == d + 2) f.equal(h[k], f_vector_d_plus_2(d, k, src), "d+2 " + at(d, k));
          if (n == d + 3) f.equal(h[k], f_vector_d_plus_3(d, k, src), "d+3 " + at(d, k));
        }
      }
    }
  }));

  out.push_back(run_family("Efron identity", [&](FamilyRun& f) {
    for (int d = 1; d <= std::min(max_n, 5); ++d)
      for (int n = d + 1; n <= std::min(std::max(max_n, d + 1), 10); ++n) {
        const PiNumber lhs = PiNumber(n + 1) - half_sphere_f_vector(n + 1, d, src)[0];
        f.equal(lhs, expected_solid_angle(n, d, src) * BigRational(2 * (n + 1)), at(n, d));
      }
  }));

  return out;
}

}  // namespace crofton
