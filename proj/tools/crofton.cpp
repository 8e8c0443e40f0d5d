// crofton: exact expected f-vectors of Poisson zero cells and random
// half-sphere hulls, with Monte Carlo cross-checks.
//
// Exit codes: 0 success, 1 statistical or identity failure, 2 usage error.

#include "crofton/closed_forms.hpp"
#include "crofton/identities.hpp"
#include "crofton/montecarlo/estimators.hpp"
#include "crofton/output.hpp"
#include "crofton/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

using namespace crofton;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int to_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("expected an integer, got '" + s + "'");
  return v;
}

BigRational to_rational(const std::string& s) {
  try {
    return BigRational::from_string(s);
  } catch (const std::exception&) {
    throw UsageError("expected a rational number, got '" + s + "'");
  }
}

LabelledValues single(const std::string& name, const PiNumber& v) { return {name, "index", {0}, {v}}; }

LabelledValues indexed(const std::string& name, const std::vector<PiNumber>& vs) {
  LabelledValues lv{name, "k", {}, vs};
  for (std::size_t k = 0; k < vs.size(); ++k) lv.indices.push_back(static_cast<int>(k));
  return lv;
}

struct Quantity {
  std::string params;
  std::string help;
  std::function<LabelledValues(const std::vector<std::string>&)> eval;
};

std::map<std::string, Quantity> registry() {
  auto i = [](const std::vector<std::string>& a, std::size_t j) { return to_int(a[j]); };
  std::map<std::string, Quantity> r;
  r["A"] = {"n k", "array A[n,k]", [=](auto& a) { return single("A", a_value(i(a, 0), i(a, 1))); }};
  r["A-oracle"] = {"n k", "A[n,k] from its recurrence and boundary values",
                   [=](auto& a) { return single("A-oracle", a_value_oracle(i(a, 0), i(a, 1))); }};
  r["B"] = {"n k", "array B{n,k}", [=](auto& a) { return single("B", b_value(i(a, 0), i(a, 1))); }};
  r["I"] = {"n k", "external angle sum of the beta' simplex, alpha = 1",
            [=](auto& a) { return single("I", i_tilde_bb(i(a, 0), i(a, 1))); }};
  r["J"] = {"n k", "internal angle sum of the beta' simplex, beta = n/2",
            [=](auto& a) { return single("J", j_tilde_bb(i(a, 0), i(a, 1))); }};
  r["J-recursive"] = {"n k", "internal angle sum solved from the Gauss-Bonnet system",
                      [=](auto& a) { return single("J-recursive", j_tilde_recursive(i(a, 0), i(a, 1))); }};
  r["sin-moment"] = {"m", "integral of x^m sin x over [0, pi]",
                     [=](auto& a) { return single("sin-moment", sin_moment(i(a, 0))); }};
  r["bernoulli"] = {"m", "Bernoulli number B_m",
                    [=](auto& a) { return single("bernoulli", PiNumber(bernoulli(i(a, 0)))); }};
  r["gamma-half"] = {"m", "Gamma(m/2)", [=](auto& a) { return single("gamma-half", gamma_half(i(a, 0))); }};
  r["zero-cell"] = {"d", "expected f-vector of the Poisson zero cell",
                    [=](auto& a) { return indexed("zero-cell", zero_cell_f_vector(i(a, 0)).entries); }};
  r["vertices"] = {"d", "expected vertex count of the zero cell, d! kappa_d^2 / 2^d",
                   [=](auto& a) { return single("vertices", zero_cell_vertices(i(a, 0))); }};
  r["ridges"] = {"d", "expected number of (d-2)-faces of the zero cell",
                 [=](auto& a) { return single("ridges", zero_cell_ridges(i(a, 0))); }};
  r["intrinsic-volume"] = {"d l gamma", "expected l-th intrinsic volume of the zero cell at intensity gamma",
                           [=](auto& a) {
                             return single("intrinsic-volume",
                                           zero_cell_intrinsic_volume(i(a, 0), i(a, 1), to_rational(a[2])));
                           }};
  r["limit"] = {"d", "large-n limit of the half-sphere hull f-vector",
                [=](auto& a) { return indexed("limit", limit_f_vector(i(a, 0))); }};
  r["half-sphere"] = {"n d", "expected f-vector of the hull of n half-sphere points",
                      [=](auto& a) { return indexed("half-sphere", half_sphere_f_vector(i(a, 0), i(a, 1))); }};
  r["facets"] = {"n d", "expected facet count from the integral-geometric facet formula",
                 [=](auto& a) { return single("facets", barany_facets(i(a, 0), i(a, 1))); }};
  r["edges"] = {"n d", "expected edge count of the half-sphere hull",
                [=](auto& a) { return single("edges", expected_edges(i(a, 0), i(a, 1))); }};
  r["d-plus-2"] = {"d k", "expected f_k for n = d+2 points",
                   [=](auto& a) { return single("d-plus-2", f_vector_d_plus_2(i(a, 0), i(a, 1))); }};
  r["d-plus-3"] = {"d k", "expected f_k for n = d+3 points",
                   [=](auto& a) { return single("d-plus-3", f_vector_d_plus_3(i(a, 0), i(a, 1))); }};
  r["solid-angle"] = {"n d", "expected normalized solid angle of the positive hull",
                      [=](auto& a) { return single("solid-angle", expected_solid_angle(i(a, 0), i(a, 1))); }};
  r["sylvester"] = {"d", "Sylvester-type probability P(d) on the half-sphere",
                    [=](auto& a) { return single("sylvester", sylvester_probability(i(a, 0))); }};
  r["grassmann"] = {"k d", "Grassmann angle constant B_{k,d}",
                    [=](auto& a) { return single("grassmann", grassmann_constant(i(a, 0), i(a, 1))); }};
  r["c-star"] = {"d", "constant C_*(d) of the solid-angle asymptotics",
                 [=](auto& a) { return single("c-star", c_star(i(a, 0))); }};
  r["cover-efron"] = {"k d", "crosspolytope face count 2^(k+1) C(d,k+1)", [=](auto& a) {
                        return single("cover-efron", PiNumber(BigRational(cover_efron_limit(i(a, 0), i(a, 1)))));
                      }};
  return r;
}

std::string registry_listing() {
  std::string s = "known quantities:\n";
  for (const auto& [name, q] : registry()) {
    std::string head = "  " + name + " " + q.params;
    if (head.size() < 30) head.resize(30, ' ');
    s += head + " " + q.help + "\n";
  }
  return s;
}

bool use_color(bool to_file) {
  if (to_file) return false;
  const char* nc = std::getenv("NO_COLOR");
  if (nc && *nc) return false;
  return isatty(fileno(stdout)) != 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact expected f-vectors of Poisson zero cells and random half-sphere hulls"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "exact";
  std::string out_path;
  std::uint64_t seed = 1;
  long trials = 10000;
  int threads = 0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"exact", "latex", "json", "csv", "float"}));
  app.add_option("--out", out_path, "Write output to this file instead of standard output");
  app.add_option("--seed", seed, "Random seed for simulations");
  app.add_option("--trials", trials, "Number of simulation trials")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Worker threads for simulations (0: all cores)")->check(CLI::NonNegativeNumber);

  int dim = 0;
  int npts = 0;
  bool table = false;

  auto* zero_cell = app.add_subcommand("zero-cell", "Expected f-vector of the Poisson zero polytope");
  auto* zc_dim = zero_cell->add_option("--dim", dim, "Dimension d")->check(CLI::Range(1, 30));
  zero_cell->add_flag("--table", table, "Print the reference table for d = 1..10");
  zc_dim->excludes("--table");

  auto* half_sphere = app.add_subcommand("half-sphere", "Expected f-vector of the hull of n half-sphere points");
  half_sphere->add_option("--n", npts, "Number of points")->required()->check(CLI::Range(2, 200));
  half_sphere->add_option("--dim", dim, "Dimension d of the sphere")->required()->check(CLI::Range(1, 30));

  auto* limit = app.add_subcommand("limit", "Large-n limit of the half-sphere hull f-vector");
  limit->add_option("--dim", dim, "Dimension d")->required()->check(CLI::Range(1, 30));

  auto* solid = app.add_subcommand("solid-angle", "Expected solid angle of the positive hull of n points");
  solid->add_option("--n", npts, "Number of points")->required()->check(CLI::Range(2, 200));
  solid->add_option("--dim", dim, "Dimension d")->required()->check(CLI::Range(1, 30));

  auto* sylv = app.add_subcommand("sylvester", "Probability that one of d+2 points lies in the cone of the others");
  sylv->add_option("--dim", dim, "Dimension d")->required()->check(CLI::Range(1, 30));

  std::string quantity;
  std::vector<std::string> params;
  auto* value = app.add_subcommand("value", "Evaluate one named quantity");
  value->add_option("quantity", quantity, "Quantity name")->required();
  value->add_option("params", params, "Integer or rational parameters");
  value->footer(registry_listing());

  int which = 0;
  auto* tables = app.add_subcommand("tables", "Regenerate a reference table");
  tables->add_option("which", which, "Table number")->required()->check(CLI::Range(1, 5));

  std::string estimator;
  bool timing = false;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate compared with the exact value");
  simulate->add_option("estimator", estimator, "fvector, sylvester or angle")
      ->required()
      ->check(CLI::IsMember({"fvector", "sylvester", "angle"}));
  simulate->add_option("--n", npts, "Number of points (fvector, angle)")->check(CLI::Range(2, 25));
  simulate->add_option("--dim", dim, "Dimension d")->required()->check(CLI::Range(1, 8));
  simulate->add_flag("--timing", timing, "Record wall-clock seconds in the report");

  int max_n = 12;
  auto* verify = app.add_subcommand("verify", "Run the exact identity suite");
  verify->add_option("--max-n", max_n, "Largest index checked")->check(CLI::Range(1, 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const Format fmt = parse_format(format);
  std::string text;
  int rc = 0;
  try {
    if (*zero_cell) {
      if (table) text = render_table(make_table(1), fmt);
      else if (dim > 0) text = render_values(indexed("zero-cell", zero_cell_f_vector(dim).entries), fmt);
      else throw UsageError("zero-cell needs --dim or --table");
    } else if (*half_sphere) {
      if (npts <= dim) throw UsageError("degenerate sample size: need n >= d+1");
      text = render_values(indexed("half-sphere", half_sphere_f_vector(npts, dim)), fmt);
    } else if (*limit) {
      text = render_values(indexed("limit", limit_f_vector(dim)), fmt);
    } else if (*solid) {
      if (npts <= dim) throw UsageError("degenerate sample size: need n >= d+1");
      text = render_values(single("solid-angle", expected_solid_angle(npts, dim)), fmt);
    } else if (*sylv) {
      text = render_values(single("sylvester", sylvester_probability(dim)), fmt);
    } else if (*value) {
      const auto reg = registry();
      const auto it = reg.find(quantity);
      if (it == reg.end()) throw UsageError("unknown quantity '" + quantity + "'\n" + registry_listing());
      const std::size_t arity = std::count(it->second.params.begin(), it->second.params.end(), ' ') + 1;
      if (params.size() != arity)
        throw UsageError(quantity + " takes " + std::to_string(arity) + " parameter(s): " + it->second.params);
      text = render_values(it->second.eval(params), fmt);
    } else if (*tables) {
      text = render_table(make_table(which), fmt);
    } else if (*simulate) {
      mc::SimulationOptions opt;
      opt.trials = trials;
      opt.seed = seed;
      opt.threads = threads;
      opt.timing = timing;
      mc::SimulationReport report;
      if (estimator == "sylvester") {
        report = mc::estimate_sylvester(dim, opt);
      } else {
        if (npts == 0) throw UsageError(estimator + " needs --n");
        if (npts <= dim) throw UsageError("degenerate sample size: need n >= d+1");
        report = estimator == "fvector" ? mc::estimate_f_vector(npts, dim, opt) : mc::estimate_solid_angle(npts, dim, opt);
      }
      if (report.rejection_rate() >= 1e-3)
        std::cerr << "warning: " << report.rejected_trials << " degenerate trials were rejected and resampled\n";
      text = report.to_json().dump(2) + "\n";
      if (report.max_abs_z() > 4.0) rc = 1;
    } else if (*verify) {
      const auto results = run_identity_suite(max_n);
      const bool color = use_color(!out_path.empty()) && fmt != Format::json;
      if (fmt == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results)
          arr.push_back({{"family", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"first_failure", r.first_failure}});
        text = arr.dump(2) + "\n";
      } else {
        for (const auto& r : results) {
          std::string tag = r.passed ? "PASS" : "FAIL";
          if (color) tag = (r.passed ? "\033[32m" : "\033[31m") + tag + "\033[0m";
          text += tag + "  " + r.name + " (" + std::to_string(r.checks) + " checks)";
          if (!r.passed) text += ": " + r.first_failure;
          text += "\n";
        }
      }
      for (const auto& r : results)
        if (!r.passed) rc = 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    f << text;
  }
  return rc;
}
