#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "distributions.hpp"
#include "estimators.hpp"
#include "normality.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "smoothing.hpp"

namespace entrss {

enum class grid_mode { full_grid, bootstrap };

struct mc_config {
  long long replicates = 10000;
  double alpha = 0.05;
  std::uint64_t master_seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;  // 0 = choose automatically
  int w = 3;
  grid_mode mode = grid_mode::full_grid;
  int threads = 0;  // 0 = hardware concurrency
  bool jitter = false;
};

void validate_config(const mc_config& cfg);

// Raised when more than 1% of replicates had to be resampled.
class mc_abort_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs cfg.replicates evaluations of fn on substreams derived from
// (master_seed, phase, index, attempt). A replicate raising a tied-spacing or
// degenerate-sample error is retried on its next attempt substream; the
// result vector is a pure function of the config, independent of thread
// count and scheduling.
std::vector<double> run_replicates(const mc_config& cfg, std::uint64_t phase,
                                   const std::function<double(rng_stream&)>& fn);

// One null/alternative replicate of a test statistic: n draws for plain
// statistics, an n-by-n grid for the RSS statistics.
double simulate_statistic(test_kind kind, const distribution_spec& dist,
                          std::size_t n, std::size_t m, int w, rng_stream& rng);

// One replicate of an entropy estimate (grid-based for hve_r / hw_r).
double simulate_estimate(estimator_kind est, const distribution_spec& dist,
                         std::size_t n, std::size_t m, int w, rng_stream& rng);

// Observed statistic of a data vector. RSS statistics consume either a
// bootstrap grid built from the data (mode bootstrap) or fail when no grid is
// available. Optional jitter breaks ties with uniform noise of
// 1e-9 * sample range before estimation.
double observed_statistic(test_kind kind, std::span<const double> data,
                          std::size_t m, int w, grid_mode mode,
                          std::uint64_t seed, bool jitter);

// Lower-tail empirical quantile (order statistic at ceil(alpha * R)) plus an
// order-statistic standard error; `values` is consumed and sorted.
struct quantile_result {
  double value = 0.0;
  double std_error = 0.0;
};
quantile_result empirical_quantile(std::vector<double> values, double alpha,
                                   bool lower_tail);

struct critical_value_result {
  double value = 0.0;
  double std_error = 0.0;
};
critical_value_result critical_value(test_kind kind, const mc_config& cfg);
report critical_value_report(test_kind kind, const mc_config& cfg);

struct error_table_result {
  double bias = 0.0;
  double sd = 0.0;
  double rmse = 0.0;
  double rmse_std_error = 0.0;
};
error_table_result estimator_error(estimator_kind est,
                                   const distribution_spec& dist,
                                   const mc_config& cfg);
report estimator_error_report(estimator_kind est, const distribution_spec& dist,
                              const mc_config& cfg);

report mse_trend_report(estimator_kind est, const distribution_spec& dist,
                        std::span<const long long> ns, double b,
                        const mc_config& cfg);

struct power_result {
  double power = 0.0;
  double std_error = 0.0;
  double critical = 0.0;
};
power_result power(test_kind kind, const distribution_spec& alt,
                   const mc_config& cfg, double critical);
report power_report(test_kind kind, const distribution_spec& alt,
                    const mc_config& cfg);

// Lower-tail Monte Carlo p-value with add-one smoothing.
double mc_p_value(test_kind kind, double observed, const mc_config& cfg);
report p_value_report(test_kind kind, double observed, const mc_config& cfg);

// Empirical power of `kind` at size n_fit against the inverse Gaussian
// fitted (moment rule) to the data: mean of I(TEST_sim <= TEST_observed).
double empirical_power_real_data(std::span<const double> data, test_kind kind,
                                 std::size_t n_fit, const mc_config& cfg);

report normality_test_report(test_kind kind, std::span<const double> data,
                             const mc_config& cfg);

// Point estimate of one estimator on a data vector (bootstrap grids for the
// RSS estimators), one report row.
report estimate_report(estimator_kind est, std::span<const double> data,
                       const mc_config& cfg);

report real_data_report(test_kind kind, const mc_config& cfg,
                        std::span<const long long> n_fits);

report empirical_power_report(test_kind kind, std::span<const double> data,
                              std::size_t n_fit, const mc_config& cfg);

report smooth_demo_report(std::size_t n, int w, std::uint64_t seed);

}  // namespace entrss
