#pragma once

// Monte Carlo estimators compared against the exact formulas. Every trial
// draws from its own stream derived from (seed, trial index) and stores its
// outcome by index; the statistics are summed in trial order afterwards, so
// the report does not depend on the number of threads.

#include "crofton/closed_forms.hpp"
#include "crofton/exact/pi_eval.hpp"
#include "crofton/montecarlo/hull.hpp"
#include "crofton/montecarlo/random.hpp"
#include "crofton/montecarlo/sampling.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace crofton::mc {

struct SimulationOptions {
  long trials = 10000;
  std::uint64_t seed = 1;
  int threads = 0;      // 0: hardware concurrency
  bool timing = false;  // record wall-clock seconds (otherwise 0, keeping reports byte-stable)
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Per-quantity sums over trials.
struct EmpiricalFVector {
  int dim = 0;
  long trials = 0;
  std::vector<double> sums;
  std::vector<double> sums_sq;

  double mean(int k) const { return sums[k] / static_cast<double>(trials); }
  /// Sample standard deviation over sqrt(trials).
  double stderr_of(int k) const {
    if (trials < 2) return 0.0;
    const double m = mean(k);
    const double var = std::max(0.0, (sums_sq[k] - trials * m * m) / static_cast<double>(trials - 1));
    return std::sqrt(var / static_cast<double>(trials));
  }
};

inline EmpiricalFVector accumulate(const std::vector<std::vector<double>>& values, int dim) {
  EmpiricalFVector e;
  e.dim = dim;
  e.trials = static_cast<long>(values.size());
  std::vector<CompensatedSum> s(dim), sq(dim);
  for (const auto& v : values)
    for (int k = 0; k < dim; ++k) {
      s[k].add(v[k]);
      sq[k].add(v[k] * v[k]);
    }
  for (int k = 0; k < dim; ++k) {
    e.sums.push_back(s[k].value());
    e.sums_sq.push_back(sq[k].value());
  }
  return e;
}

struct QuantityEstimate {
  int k = 0;
  double mean = 0.0;
  double stderr_ = 0.0;
  double exact_float = 0.0;
  double z = 0.0;
};

struct SimulationReport {
  std::string estimator;
  int n = 0;
  int d = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::string rng = kRngName;
  std::vector<QuantityEstimate> quantities;
  long rejected_trials = 0;
  double seconds = 0.0;

  double max_abs_z() const {
    double m = 0.0;
    for (const auto& q : quantities) m = std::max(m, std::isfinite(q.z) ? std::abs(q.z) : INFINITY);
    return m;
  }
  double rejection_rate() const {
    return static_cast<double>(rejected_trials) / static_cast<double>(trials + rejected_trials);
  }

  nlohmann::json to_json() const {
    nlohmann::json qs = nlohmann::json::array();
    for (const auto& q : quantities) {
      qs.push_back({{"k", q.k}, {"mean", q.mean}, {"stderr", q.stderr_}, {"exact_float", q.exact_float},
                    {"z", std::isfinite(q.z) ? nlohmann::json(q.z) : nlohmann::json(nullptr)}});
    }
    return {{"estimator", estimator}, {"n", n}, {"d", d}, {"trials", trials}, {"seed", seed},
            {"rng", rng}, {"quantities", qs}, {"rejected_trials", rejected_trials}, {"seconds", seconds}};
  }
};

inline double z_score(double mean, double se, double exact) {
  if (se > 0.0) return (mean - exact) / se;
  return std::abs(mean - exact) <= 1e-12 * std::max(1.0, std::abs(exact)) ? 0.0 : INFINITY;
}

namespace detail {

/// One trial: fills its outcome and returns how many attempts were rejected.
using TrialFn = std::function<long(RandomStream&, std::vector<double>&)>;

struct TrialBatch {
  std::vector<std::vector<double>> values;
  long rejected = 0;
};

inline TrialBatch run_trials(const SimulationOptions& opt, int width, const TrialFn& trial) {
  if (opt.trials < 1) throw std::invalid_argument("trials must be positive");
  TrialBatch out;
  out.values.assign(opt.trials, std::vector<double>(width, 0.0));
  std::vector<long> rejected(opt.trials, 0);
  int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp<int>(threads, 1, static_cast<int>(std::min<long>(opt.trials, 256)));

  std::atomic<long> next{0};
  constexpr long kChunk = 256;
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    try {
      for (;;) {
        const long begin = next.fetch_add(kChunk);
        if (begin >= opt.trials) return;
        const long end = std::min(opt.trials, begin + kChunk);
        for (long t = begin; t < end; ++t) {
          RandomStream rng = trial_stream(opt.seed, static_cast<std::uint64_t>(t));
          rejected[t] = trial(rng, out.values[t]);
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
      next = opt.trials;
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  for (long r : rejected) out.rejected += r;
  return out;
}

inline SimulationReport make_report(std::string name, int n, int d, const SimulationOptions& opt,
                                    const TrialBatch& batch, const std::vector<double>& exact,
                                    const std::vector<int>& labels) {
  SimulationReport r;
  r.estimator = std::move(name);
  r.n = n;
  r.d = d;
  r.trials = opt.trials;
  r.seed = opt.seed;
  r.rejected_trials = batch.rejected;
  const EmpiricalFVector e = accumulate(batch.values, static_cast<int>(exact.size()));
  for (std::size_t k = 0; k < exact.size(); ++k) {
    QuantityEstimate q;
    q.k = labels[k];
    q.mean = e.mean(static_cast<int>(k));
    q.stderr_ = e.stderr_of(static_cast<int>(k));
    q.exact_float = exact[k];
    q.z = z_score(q.mean, q.stderr_, q.exact_float);
    r.quantities.push_back(q);
  }
  return r;
}

template <class Fn>
SimulationReport timed(const SimulationOptions& opt, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  SimulationReport r = fn();
  if (opt.timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace detail

/// f-vector of the hull of n uniform points on the half-sphere of S^d,
/// counted in the gnomonic chart.
inline SimulationReport estimate_f_vector(int n, int d, const SimulationOptions& opt) {
  if (d < 1 || d > kMaxHullDim) throw std::invalid_argument("dimension out of range");
  if (n <= d || n > kMaxHullPoints) throw std::invalid_argument("need d+1 <= n <= 25");
  return detail::timed(opt, [&] {
    const auto batch = detail::run_trials(opt, d, [n, d](RandomStream& rng, std::vector<double>& out) {
      long rejected = 0;
      std::vector<Eigen::VectorXd> pts(n);
      for (;;) {
        for (auto& p : pts) p = sample_projected(d, rng);
        if (const auto h = hull_f_vector(pts, d)) {
          for (int k = 0; k < d; ++k) out[k] = static_cast<double>(h->f[k]);
          return rejected;
        }
        ++rejected;
      }
    });
    std::vector<double> exact;
    std::vector<int> labels;
    const auto ef = half_sphere_f_vector(n, d);
    for (int k = 0; k < d; ++k) {
      exact.push_back(pi_eval_float(ef[k]));
      labels.push_back(k);
    }
    return detail::make_report("fvector", n, d, opt, batch, exact, labels);
  });
}

/// Frequency with which one of d+2 uniform half-sphere points lies in the
/// positive hull of the other d+1.
inline SimulationReport estimate_sylvester(int d, const SimulationOptions& opt) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  return detail::timed(opt, [&] {
    const auto batch = detail::run_trials(opt, 1, [d](RandomStream& rng, std::vector<double>& out) {
      long rejected = 0;
      std::vector<Eigen::VectorXd> pts(d + 2), others(d + 1);
      for (;;) {
        for (auto& p : pts) p = sample_half_sphere(d, rng);
        bool any = false, ok = true;
        for (int i = 0; i < d + 2 && ok; ++i) {
          for (int j = 0, jj = 0; j < d + 2; ++j)
            if (j != i) others[jj++] = pts[j];
          const auto in = cone_contains(others, pts[i]);
          if (!in) ok = false;
          else any = any || *in;
        }
        if (ok) {
          out[0] = any ? 1.0 : 0.0;
          return rejected;
        }
        ++rejected;
      }
    });
    return detail::make_report("sylvester", d + 2, d, opt, batch, {pi_eval_float(sylvester_probability(d))}, {0});
  });
}

/// Expected normalized solid angle of the positive hull of n half-sphere
/// points: half the probability that a fresh point falls inside it, which is
/// detected as the fresh point failing to be a vertex of the joint hull.
inline SimulationReport estimate_solid_angle(int n, int d, const SimulationOptions& opt) {
  if (d < 1 || d > kMaxHullDim) throw std::invalid_argument("dimension out of range");
  if (n <= d || n + 1 > kMaxHullPoints) throw std::invalid_argument("need d+1 <= n <= 24");
  return detail::timed(opt, [&] {
    const auto batch = detail::run_trials(opt, 1, [n, d](RandomStream& rng, std::vector<double>& out) {
      long rejected = 0;
      std::vector<Eigen::VectorXd> pts(n + 1);
      for (;;) {
        for (auto& p : pts) p = sample_projected(d, rng);
        if (const auto h = hull_f_vector(pts, d)) {
          out[0] = (h->vertices & (1u << n)) ? 0.0 : 0.5;
          return rejected;
        }
        ++rejected;
      }
    });
    return detail::make_report("angle", n, d, opt, batch, {pi_eval_float(expected_solid_angle(n, d))}, {0});
  });
}

}  // namespace crofton::mc
