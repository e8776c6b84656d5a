#include "monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "dataset.hpp"
#include "errors.hpp"
#include "special_functions.hpp"

namespace entrss {

namespace {

// Substream phase tags. Each Monte Carlo phase draws from its own tag so the
// same master seed never reuses a stream across phases.
constexpr std::uint64_t kNullPhase = 0x6e756c6cULL;
constexpr std::uint64_t kAltPhase = 0x616c7400ULL;
constexpr std::uint64_t kEstPhase = 0x65737400ULL;
constexpr std::uint64_t kRealPhase = 0x7265616cULL;
constexpr std::uint64_t kDemoPhase = 0x64656d6fULL;
constexpr std::uint64_t kJitterTag = 0x6a697474ULL;
constexpr std::uint64_t kObservedTag = 0x6f627300ULL;

constexpr int kMaxAttempts = 64;

std::string mode_name(grid_mode mode) {
  return mode == grid_mode::full_grid ? "full" : "bootstrap";
}

void fill_grid(sample_grid& grid, const distribution_spec& dist,
               rng_stream& rng) {
  for (double& v : grid.values) v = dist.sample_one(rng);
}

std::size_t auto_window(test_kind, std::size_t n, std::size_t m) {
  return m != 0 ? m : testing_window(n).m;
}

std::size_t auto_window_est(std::size_t n, std::size_t m) {
  return m != 0 ? m : default_window(n);
}

void echo_config(report& r, const mc_config& cfg, std::size_t n, std::size_t m) {
  std::ostringstream os;
  os << "seed=" << cfg.master_seed << " n=" << n << " m=" << m << " w=" << cfg.w
     << " mode=" << mode_name(cfg.mode) << " alpha=" << cfg.alpha
     << " replicates=" << cfg.replicates;
  if (cfg.jitter) os << " jitter=1e-9*range";
  r.comments.push_back(os.str());
}

void fill_common(report& rep, std::vector<report::cell>& row,
                 const std::string& kind, const mc_config& cfg, std::size_t n,
                 std::size_t m) {
  rep.set(row, "kind", kind);
  rep.set(row, "n", static_cast<long long>(n));
  rep.set(row, "m", static_cast<long long>(m));
  rep.set(row, "w", static_cast<long long>(cfg.w));
  rep.set(row, "alpha", cfg.alpha);
  rep.set(row, "replicates", cfg.replicates);
  rep.set(row, "seed", static_cast<long long>(cfg.master_seed));
}

}  // namespace

void validate_config(const mc_config& cfg) {
  if (cfg.replicates < 100)
    throw std::domain_error("replicates must be at least 100");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
    throw std::domain_error("alpha must lie in (0,1)");
  if (cfg.w < 3 || cfg.w % 2 == 0)
    throw std::domain_error("smoothing width must be an odd integer >= 3");
}

std::vector<double> run_replicates(const mc_config& cfg, std::uint64_t phase,
                                   const std::function<double(rng_stream&)>& fn) {
  validate_config(cfg);
  const std::size_t reps = static_cast<std::size_t>(cfg.replicates);
  std::vector<double> values(reps);
  std::atomic<std::size_t> resampled{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;

  unsigned hw = std::thread::hardware_concurrency();
  unsigned requested =
      cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : (hw ? hw : 1);
  const unsigned thread_count =
      std::max(1u, std::min<unsigned>(requested, 64));

  auto worker = [&](std::size_t lo, std::size_t hi) {
    std::size_t local_resampled = 0;
    for (std::size_t i = lo; i < hi && !failed.load(std::memory_order_relaxed);
         ++i) {
      bool done = false;
      for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        rng_stream rng = substream(cfg.master_seed, phase, i,
                                   static_cast<std::uint64_t>(attempt));
        try {
          values[i] = fn(rng);
          done = true;
          if (attempt > 0) ++local_resampled;
          break;
        } catch (const tied_spacing_error&) {
        } catch (const degenerate_sample_error&) {
        }
      }
      if (!done) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed.store(true);
        if (first_error.empty())
          first_error = "replicate " + std::to_string(i) +
                        " kept raising tied-spacing errors";
      }
    }
    resampled.fetch_add(local_resampled);
  };

  if (thread_count == 1 || reps < 2 * thread_count) {
    worker(0, reps);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (reps + thread_count - 1) / thread_count;
    for (unsigned t = 0; t < thread_count; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(reps, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  if (failed.load()) throw mc_abort_error(first_error);
  const std::size_t limit =
      static_cast<std::size_t>(0.01 * static_cast<double>(reps));
  if (resampled.load() > limit)
    throw mc_abort_error("more than 1% of replicates were resampled (" +
                         std::to_string(resampled.load()) + " of " +
                         std::to_string(reps) + ")");
  return values;
}

double simulate_statistic(test_kind kind, const distribution_spec& dist,
                          std::size_t n, std::size_t m, int w, rng_stream& rng) {
  if (is_rss_test(kind)) {
    sample_grid grid;
    grid.n = n;
    grid.values.resize(n * n);
    fill_grid(grid, dist, rng);
    const rss_diagonal diag = build_rss_diagonal(grid, w);
    return test_statistic_rss(kind, diag, m);
  }
  std::vector<double> sample(n);
  for (double& v : sample) v = dist.sample_one(rng);
  return test_statistic_plain(kind, sorted_sample(std::move(sample)), m);
}

double simulate_estimate(estimator_kind est, const distribution_spec& dist,
                         std::size_t n, std::size_t m, int w, rng_stream& rng) {
  if (is_rss_estimator(est)) {
    sample_grid grid;
    grid.n = n;
    grid.values.resize(n * n);
    fill_grid(grid, dist, rng);
    return estimate_rss(est, build_rss_diagonal(grid, w), m);
  }
  std::vector<double> sample(n);
  for (double& v : sample) v = dist.sample_one(rng);
  return estimate_plain(est, sorted_sample(std::move(sample)), m);
}

namespace {

std::vector<double> maybe_jitter(std::span<const double> data, bool jitter,
                                 std::uint64_t seed) {
  std::vector<double> x(data.begin(), data.end());
  if (!jitter || x.size() < 2) return x;
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const double amp = 1e-9 * (*hi - *lo);
  if (amp <= 0.0) return x;
  rng_stream rng = substream(seed, kJitterTag, 0);
  for (double& v : x) v += amp * rng.uniform01();
  return x;
}

}  // namespace

double observed_statistic(test_kind kind, std::span<const double> data,
                          std::size_t m, int w, grid_mode mode,
                          std::uint64_t seed, bool jitter) {
  const std::vector<double> x = maybe_jitter(data, jitter, seed);
  if (is_rss_test(kind)) {
    if (mode != grid_mode::bootstrap)
      throw std::domain_error(
          "RSS statistics on a single sample require bootstrap mode");
    rng_stream pick = substream(seed, kObservedTag, 0);
    const sample_grid grid = bootstrap_grid(x, pick.next_u64());
    const rss_diagonal diag =
        build_rss_diagonal(grid, w, rss_source::bootstrap);
    return test_statistic_rss(kind, diag, m);
  }
  return test_statistic_plain(kind, sorted_sample(x), m);
}

quantile_result empirical_quantile(std::vector<double> values, double alpha,
                                   bool lower_tail) {
  std::sort(values.begin(), values.end());
  const auto reps = static_cast<double>(values.size());
  const double target = lower_tail ? alpha : 1.0 - alpha;
  auto order_stat = [&](double p) {
    double k = std::ceil(p * reps);
    k = std::max(1.0, std::min(reps, k));
    return values[static_cast<std::size_t>(k) - 1];
  };
  quantile_result out;
  out.value = order_stat(target);
  // One-sigma order-statistic band around the target rank.
  const double spread = std::sqrt(reps * target * (1.0 - target));
  const double lo_rank = std::max(1.0, std::ceil(target * reps - spread));
  const double hi_rank = std::min(reps, std::ceil(target * reps + spread));
  out.std_error = 0.5 * (values[static_cast<std::size_t>(hi_rank) - 1] -
                         values[static_cast<std::size_t>(lo_rank) - 1]);
  return out;
}

critical_value_result critical_value(test_kind kind, const mc_config& cfg) {
  const std::size_t n = cfg.n;
  if (n < 3) throw std::domain_error("critical_value requires n >= 3");
  const std::size_t m = auto_window(kind, n, cfg.m);
  const distribution_spec null_dist(family::normal, 0.0, 1.0);
  auto values = run_replicates(cfg, kNullPhase, [&](rng_stream& rng) {
    return simulate_statistic(kind, null_dist, n, m, cfg.w, rng);
  });
  const auto q =
      empirical_quantile(std::move(values), cfg.alpha, rejects_low(kind));
  return {q.value, q.std_error};
}

report critical_value_report(test_kind kind, const mc_config& cfg) {
  const std::size_t m = auto_window(kind, cfg.n, cfg.m);
  const auto cv = critical_value(kind, cfg);
  report rep = make_mc_report();
  echo_config(rep, cfg, cfg.n, m);
  auto& row = rep.add_row();
  fill_common(rep, row, std::string(test_name(kind)), cfg, cfg.n, m);
  rep.set(row, "value", cv.value);
  rep.set(row, "std_error", cv.std_error);
  return rep;
}

error_table_result estimator_error(estimator_kind est,
                                   const distribution_spec& dist,
                                   const mc_config& cfg) {
  const std::size_t n = cfg.n;
  if (n < 3) throw std::domain_error("estimator_error requires n >= 3");
  const std::size_t m = auto_window_est(n, cfg.m);
  const auto truth = dist.true_entropy();
  if (!truth)
    throw std::domain_error("no closed-form entropy for " + dist.name());
  const auto values = run_replicates(cfg, kEstPhase, [&](rng_stream& rng) {
    return simulate_estimate(est, dist, n, m, cfg.w, rng);
  });
  const double reps = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= reps;
  double var = 0.0;
  double mse = 0.0;
  double m4 = 0.0;  // second moment of squared errors, for the rmse band
  for (double v : values) {
    var += (v - mean) * (v - mean);
    const double e2 = (v - *truth) * (v - *truth);
    mse += e2;
    m4 += e2 * e2;
  }
  var /= reps;
  mse /= reps;
  m4 /= reps;
  error_table_result out;
  out.bias = mean - *truth;
  out.sd = std::sqrt(var);
  out.rmse = std::sqrt(mse);
  const double se_mse = std::sqrt(std::max(0.0, m4 - mse * mse) / reps);
  out.rmse_std_error = out.rmse > 0.0 ? se_mse / (2.0 * out.rmse) : 0.0;
  return out;
}

report estimator_error_report(estimator_kind est, const distribution_spec& dist,
                              const mc_config& cfg) {
  const std::size_t m = auto_window_est(cfg.n, cfg.m);
  const auto res = estimator_error(est, dist, cfg);
  report rep = make_mc_report();
  echo_config(rep, cfg, cfg.n, m);
  rep.comments.push_back("distribution=" + dist.name());
  auto& row = rep.add_row();
  fill_common(rep, row, std::string(estimator_name(est)), cfg, cfg.n, m);
  rep.set(row, "value", res.rmse);
  rep.set(row, "std_error", res.rmse_std_error);
  rep.set(row, "bias", res.bias);
  rep.set(row, "sd", res.sd);
  rep.set(row, "rmse", res.rmse);
  return rep;
}

report mse_trend_report(estimator_kind est, const distribution_spec& dist,
                        std::span<const long long> ns, double b,
                        const mc_config& cfg) {
  if (ns.empty()) throw std::domain_error("mse_trend requires at least one n");
  report rep = make_mc_report();
  rep.comments.push_back("mse_trend b=" + std::to_string(b) + " distribution=" +
                         dist.name());
  bool first = true;
  for (long long n : ns) {
    mc_config sub = cfg;
    sub.n = static_cast<std::size_t>(n);
    sub.m = cfg.m;  // 0 keeps the per-n heuristic window
    const std::size_t m = auto_window_est(sub.n, sub.m);
    if (first) {
      echo_config(rep, sub, sub.n, m);
      first = false;
    }
    const auto res = estimator_error(est, dist, sub);
    const double scaled =
        res.rmse * res.rmse * std::pow(static_cast<double>(n), b);
    auto& row = rep.add_row();
    fill_common(rep, row, std::string(estimator_name(est)), sub, sub.n, m);
    rep.set(row, "value", scaled);
    const double mse_se = 2.0 * res.rmse * res.rmse_std_error;
    rep.set(row, "std_error", mse_se * std::pow(static_cast<double>(n), b));
    rep.set(row, "bias", res.bias);
    rep.set(row, "sd", res.sd);
    rep.set(row, "rmse", res.rmse);
  }
  return rep;
}

power_result power(test_kind kind, const distribution_spec& alt,
                   const mc_config& cfg, double critical) {
  const std::size_t n = cfg.n;
  if (n < 3) throw std::domain_error("power requires n >= 3");
  const std::size_t m = auto_window(kind, n, cfg.m);
  const bool low = rejects_low(kind);
  const auto values = run_replicates(cfg, kAltPhase, [&](rng_stream& rng) {
    return simulate_statistic(kind, alt, n, m, cfg.w, rng);
  });
  std::size_t rejected = 0;
  for (double v : values)
    if (low ? v < critical : v > critical) ++rejected;
  const double reps = static_cast<double>(values.size());
  power_result out;
  out.power = static_cast<double>(rejected) / reps;
  out.std_error = std::sqrt(out.power * (1.0 - out.power) / reps);
  out.critical = critical;
  return out;
}

report power_report(test_kind kind, const distribution_spec& alt,
                    const mc_config& cfg) {
  const std::size_t m = auto_window(kind, cfg.n, cfg.m);
  const auto cv = critical_value(kind, cfg);
  const auto pw = power(kind, alt, cfg, cv.value);
  report rep = make_mc_report();
  echo_config(rep, cfg, cfg.n, m);
  rep.comments.push_back("alternative=" + alt.name());
  rep.comments.push_back("critical_value=" + std::to_string(cv.value));
  auto& row = rep.add_row();
  fill_common(rep, row, std::string(test_name(kind)) + " vs " + alt.name(), cfg,
              cfg.n, m);
  rep.set(row, "value", pw.power);
  rep.set(row, "std_error", pw.std_error);
  rep.set(row, "power", pw.power);
  return rep;
}

double mc_p_value(test_kind kind, double observed, const mc_config& cfg) {
  if (!std::isfinite(observed))
    throw std::domain_error("mc_p_value requires a finite observed statistic");
  const std::size_t n = cfg.n;
  if (n < 3) throw std::domain_error("mc_p_value requires n >= 3");
  const std::size_t m = auto_window(kind, n, cfg.m);
  const distribution_spec null_dist(family::normal, 0.0, 1.0);
  const auto values = run_replicates(cfg, kNullPhase, [&](rng_stream& rng) {
    return simulate_statistic(kind, null_dist, n, m, cfg.w, rng);
  });
  const bool low = rejects_low(kind);
  std::size_t count = 0;
  for (double v : values)
    if (low ? v <= observed : v >= observed) ++count;
  return (static_cast<double>(count) + 1.0) /
         (static_cast<double>(values.size()) + 1.0);
}

report p_value_report(test_kind kind, double observed, const mc_config& cfg) {
  const std::size_t m = auto_window(kind, cfg.n, cfg.m);
  const double p = mc_p_value(kind, observed, cfg);
  report rep = make_mc_report();
  echo_config(rep, cfg, cfg.n, m);
  rep.comments.push_back("observed=" + std::to_string(observed));
  auto& row = rep.add_row();
  fill_common(rep, row, "p_value:" + std::string(test_name(kind)), cfg, cfg.n,
              m);
  rep.set(row, "value", p);
  return rep;
}

double empirical_power_real_data(std::span<const double> data, test_kind kind,
                                 std::size_t n_fit, const mc_config& cfg) {
  const auto ig = fit_inverse_gaussian(data);  // mu, mu^3 / sigma^2
  const std::size_t m = cfg.m != 0 ? cfg.m : testing_window(data.size()).m;
  const double observed = observed_statistic(kind, data, m, cfg.w, cfg.mode,
                                             cfg.master_seed, cfg.jitter);
  const distribution_spec alt(family::inverse_gaussian, ig.mu, ig.lambda);
  const std::size_t m_fit = cfg.m != 0 ? cfg.m : testing_window(n_fit).m;
  const auto values = run_replicates(cfg, kRealPhase, [&](rng_stream& rng) {
    return simulate_statistic(kind, alt, n_fit, m_fit, cfg.w, rng);
  });
  // "at least as extreme toward rejection": <= for the entropy statistics,
  // >= for ks/ad.
  const bool low = rejects_low(kind);
  std::size_t count = 0;
  for (double v : values)
    if (low ? v <= observed : v >= observed) ++count;
  return static_cast<double>(count) / static_cast<double>(values.size());
}

report normality_test_report(test_kind kind, std::span<const double> data,
                             const mc_config& cfg) {
  mc_config sub = cfg;
  sub.n = data.size();
  const std::size_t m = cfg.m != 0 ? cfg.m : testing_window(data.size()).m;
  sub.m = m;
  const double observed = observed_statistic(kind, data, m, cfg.w, cfg.mode,
                                             cfg.master_seed, cfg.jitter);
  const auto cv = critical_value(kind, sub);
  const double p = mc_p_value(kind, observed, sub);
  const auto outcome =
      make_outcome(kind, observed, cv.value, cfg.alpha, data.size(), m);

  report rep = make_mc_report();
  echo_config(rep, sub, sub.n, m);
  rep.comments.push_back("statistic=" + std::string(test_name(kind)));
  auto& r1 = rep.add_row();
  fill_common(rep, r1, "statistic:" + std::string(test_name(kind)), sub, sub.n, m);
  rep.set(r1, "value", observed);
  auto& r2 = rep.add_row();
  fill_common(rep, r2, "critical_value", sub, sub.n, m);
  rep.set(r2, "value", cv.value);
  rep.set(r2, "std_error", cv.std_error);
  auto& r3 = rep.add_row();
  fill_common(rep, r3, "p_value", sub, sub.n, m);
  rep.set(r3, "value", p);
  auto& r4 = rep.add_row();
  fill_common(rep, r4, "reject", sub, sub.n, m);
  rep.set(r4, "value", outcome.reject ? 1.0 : 0.0);
  return rep;
}

report estimate_report(estimator_kind est, std::span<const double> data,
                       const mc_config& cfg) {
  const std::size_t n = data.size();
  const std::size_t m = cfg.m != 0 ? cfg.m : default_window(n);
  const std::vector<double> x = maybe_jitter(data, cfg.jitter, cfg.master_seed);
  double value;
  if (is_rss_estimator(est)) {
    if (cfg.mode != grid_mode::bootstrap)
      throw std::domain_error(
          "RSS estimators on a single sample require bootstrap mode");
    rng_stream pick = substream(cfg.master_seed, kObservedTag, 0);
    const sample_grid grid = bootstrap_grid(x, pick.next_u64());
    const rss_diagonal diag =
        build_rss_diagonal(grid, cfg.w, rss_source::bootstrap);
    value = estimate_rss(est, diag, m);
  } else {
    value = estimate_plain(est, sorted_sample(x), m);
  }
  mc_config echo = cfg;
  echo.n = n;
  report rep = make_mc_report();
  echo_config(rep, echo, n, m);
  auto& row = rep.add_row();
  fill_common(rep, row, std::string(estimator_name(est)), cfg, n, m);
  rep.set(row, "value", value);
  return rep;
}

report real_data_report(test_kind kind, const mc_config& cfg,
                        std::span<const long long> n_fits) {
  if (repair_times_digest() != kRepairTimesDigest)
    throw std::runtime_error("embedded dataset digest mismatch");
  const auto data = repair_times();
  mc_config sub = cfg;
  sub.n = data.size();
  sub.mode = grid_mode::bootstrap;
  const std::size_t m = cfg.m != 0 ? cfg.m : testing_window(data.size()).m;
  sub.m = m;

  const auto nf = fit_normal(data);
  const auto ig_moment = fit_inverse_gaussian(data);
  const auto ig_mle = fit_inverse_gaussian_mle(data);
  const sorted_sample sorted(std::vector<double>(data.begin(), data.end()));
  const cdf_fn ig_cdf = [&](double x) {
    return inverse_gaussian_cdf(x, ig_mle.mu, ig_mle.lambda);
  };
  const double ks = ks_statistic(sorted, ig_cdf);
  const double ad = ad_statistic(sorted, ig_cdf);
  const double observed = observed_statistic(kind, data, m, sub.w, sub.mode,
                                             sub.master_seed, sub.jitter);
  const double p = mc_p_value(kind, observed, sub);

  report rep = make_mc_report();
  echo_config(rep, sub, sub.n, m);
  rep.comments.push_back("dataset=repair_times digest=" +
                         std::to_string(repair_times_digest()));
  rep.comments.push_back(
      "ks/ad use the MLE inverse-Gaussian fit; power simulations use the "
      "moment rule lambda = mu^3/sigma^2");
  if (is_rss_test(kind))
    rep.comments.push_back(
        "observed RSS statistic uses a bootstrap grid; sigma-hat from the "
        "diagonal");

  auto add_value = [&](const std::string& kind_label, double value) {
    auto& row = rep.add_row();
    fill_common(rep, row, kind_label, sub, sub.n, m);
    rep.set(row, "value", value);
  };

  add_value("fit_mu", nf.mu);
  add_value("fit_sigma", nf.sigma);
  add_value("fit_lambda_moment", ig_moment.lambda);
  add_value("fit_lambda_mle", ig_mle.lambda);
  add_value("ks_ig", ks);
  add_value("ad_ig", ad);
  add_value("statistic:" + std::string(test_name(kind)), observed);
  add_value("p_value", p);

  std::vector<long long> fits(n_fits.begin(), n_fits.end());
  if (fits.empty()) {
    fits = is_rss_test(kind) ? std::vector<long long>{15}
                             : std::vector<long long>{15, 45};
  }
  for (long long n_fit : fits) {
    const double pw = empirical_power_real_data(
        data, kind, static_cast<std::size_t>(n_fit), sub);
    const double se =
        std::sqrt(pw * (1.0 - pw) / static_cast<double>(sub.replicates));
    auto& row = rep.add_row();
    fill_common(rep, row, "power:" + std::string(test_name(kind)), sub,
                static_cast<std::size_t>(n_fit), m);
    rep.set(row, "value", pw);
    rep.set(row, "std_error", se);
    rep.set(row, "power", pw);
  }
  return rep;
}

report empirical_power_report(test_kind kind, std::span<const double> data,
                              std::size_t n_fit, const mc_config& cfg) {
  const std::size_t m = cfg.m != 0 ? cfg.m : testing_window(data.size()).m;
  const double pw = empirical_power_real_data(data, kind, n_fit, cfg);
  report rep = make_mc_report();
  echo_config(rep, cfg, data.size(), m);
  auto& row = rep.add_row();
  fill_common(rep, row, "power:" + std::string(test_name(kind)), cfg, n_fit, m);
  rep.set(row, "value", pw);
  rep.set(row, "power", pw);
  return rep;
}

report smooth_demo_report(std::size_t n, int w, std::uint64_t seed) {
  if (n < 3) throw std::domain_error("smooth_demo requires n >= 3");
  const distribution_spec null_dist(family::normal, 0.0, 1.0);
  rng_stream rng = substream(seed, kDemoPhase, 0);
  std::vector<double> sample(n);
  for (double& v : sample) v = null_dist.sample_one(rng);
  const sorted_sample sorted(std::move(sample));
  const auto smoothed = moving_average_smooth(sorted, w);

  report rep;
  rep.columns = {"index", "raw", "smoothed"};
  std::ostringstream os;
  os << "seed=" << seed << " n=" << n << " m=0 w=" << w << " mode=demo";
  rep.comments.push_back(os.str());
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = rep.add_row();
    row[0] = static_cast<long long>(i + 1);
    row[1] = sorted[i];
    row[2] = smoothed.values[i];
  }
  return rep;
}

}  // namespace entrss
