#include "entrss/entrss.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "../core/dataset.hpp"
#include "../core/distributions.hpp"
#include "../core/errors.hpp"
#include "../core/estimators.hpp"
#include "../core/monte_carlo.hpp"
#include "../core/normality.hpp"
#include "../core/report.hpp"
#include "../core/smoothing.hpp"

struct entrss_dist {
  entrss::distribution_spec spec;
  std::string name;
};

struct entrss_report {
  entrss::report table;
};

namespace {

thread_local std::string g_last_error = "ok";

entrss_status fail(entrss_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Maps core exceptions onto the C status codes.
template <typename Fn>
entrss_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const entrss::tied_spacing_error& e) {
    return fail(ENTRSS_ETIED, e.what());
  } catch (const entrss::degenerate_sample_error& e) {
    return fail(ENTRSS_EDEGENERATE, e.what());
  } catch (const entrss::mc_abort_error& e) {
    return fail(ENTRSS_EFAILED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ENTRSS_EPARSE, e.what());
  } catch (const std::domain_error& e) {
    return fail(ENTRSS_EDOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(ENTRSS_EFAILED, e.what());
  }
}

entrss_status require_args(bool ok) {
  if (!ok) return fail(ENTRSS_EINVAL, "null pointer or empty argument");
  return ENTRSS_OK;
}

entrss::mc_config to_core(const entrss_mc_config& cfg) {
  entrss::mc_config out;
  out.replicates = cfg.replicates;
  out.alpha = cfg.alpha;
  out.master_seed = cfg.seed;
  out.n = cfg.n > 0 ? static_cast<std::size_t>(cfg.n) : 0;
  out.m = cfg.m > 0 ? static_cast<std::size_t>(cfg.m) : 0;
  out.w = cfg.w > 0 ? static_cast<int>(cfg.w) : 3;
  out.mode = cfg.mode == 1 ? entrss::grid_mode::bootstrap
                           : entrss::grid_mode::full_grid;
  out.threads = cfg.threads;
  out.jitter = cfg.jitter != 0;
  return out;
}

entrss_status parse_estimator_checked(const char* name,
                                      entrss::estimator_kind* out) {
  const auto kind = entrss::parse_estimator(name);
  if (!kind) return fail(ENTRSS_EINVAL, std::string("unknown estimator '") +
                                            name + "'");
  *out = *kind;
  return ENTRSS_OK;
}

entrss_status parse_test_checked(const char* name, entrss::test_kind* out) {
  const auto kind = entrss::parse_test(name);
  if (!kind)
    return fail(ENTRSS_EINVAL, std::string("unknown statistic '") + name + "'");
  *out = *kind;
  return ENTRSS_OK;
}

entrss_status make_report(entrss::report&& table, entrss_report** out) {
  *out = new (std::nothrow) entrss_report{std::move(table)};
  if (!*out) return fail(ENTRSS_EFAILED, "out of memory");
  return ENTRSS_OK;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* entrss_version(void) { return "1.0.0"; }

const char* entrss_last_error(void) { return g_last_error.c_str(); }

entrss_status entrss_entropy(const char* estimator, const double* x, size_t n,
                             int m, double* out) {
  if (auto rc = require_args(estimator && x && out && n > 0 && m > 0); rc)
    return rc;
  entrss::estimator_kind kind;
  if (auto rc = parse_estimator_checked(estimator, &kind); rc) return rc;
  return guarded([&] {
    if (entrss::is_rss_estimator(kind))
      throw std::domain_error("RSS estimators need a grid or bootstrap input");
    entrss::sorted_sample s(std::vector<double>(x, x + n));
    *out = entrss::estimate_plain(kind, s, static_cast<std::size_t>(m));
    return ENTRSS_OK;
  });
}

entrss_status entrss_entropy_rss_grid(const char* estimator, const double* grid,
                                      size_t n, int m, int w, double* out) {
  if (auto rc = require_args(estimator && grid && out && n > 0 && m > 0); rc)
    return rc;
  entrss::estimator_kind kind;
  if (auto rc = parse_estimator_checked(estimator, &kind); rc) return rc;
  return guarded([&] {
    if (!entrss::is_rss_estimator(kind))
      throw std::domain_error("grid input is only for hve_r / hw_r");
    entrss::sample_grid g;
    g.n = n;
    g.values.assign(grid, grid + n * n);
    const auto diag = entrss::build_rss_diagonal(g, w);
    *out = entrss::estimate_rss(kind, diag, static_cast<std::size_t>(m));
    return ENTRSS_OK;
  });
}

entrss_status entrss_entropy_rss_bootstrap(const char* estimator,
                                           const double* x, size_t n, int m,
                                           int w, uint64_t seed, double* out) {
  if (auto rc = require_args(estimator && x && out && n > 0 && m > 0); rc)
    return rc;
  entrss::estimator_kind kind;
  if (auto rc = parse_estimator_checked(estimator, &kind); rc) return rc;
  return guarded([&] {
    if (!entrss::is_rss_estimator(kind))
      throw std::domain_error("bootstrap input is only for hve_r / hw_r");
    const auto grid = entrss::bootstrap_grid({x, n}, seed);
    const auto diag =
        entrss::build_rss_diagonal(grid, w, entrss::rss_source::bootstrap);
    *out = entrss::estimate_rss(kind, diag, static_cast<std::size_t>(m));
    return ENTRSS_OK;
  });
}

entrss_status entrss_default_window(size_t n, int* out) {
  if (auto rc = require_args(out != nullptr); rc) return rc;
  return guarded([&] {
    *out = static_cast<int>(entrss::default_window(n));
    return ENTRSS_OK;
  });
}

entrss_status entrss_testing_window(size_t n, int* out, int* warned) {
  if (auto rc = require_args(out != nullptr); rc) return rc;
  return guarded([&] {
    const auto res = entrss::testing_window(n);
    *out = static_cast<int>(res.m);
    if (warned) *warned = res.extrapolated ? 1 : 0;
    return ENTRSS_OK;
  });
}

entrss_status entrss_smooth(const double* x, size_t n, int w, double* out) {
  if (auto rc = require_args(x && out && n > 0); rc) return rc;
  return guarded([&] {
    entrss::sorted_sample s(std::vector<double>(x, x + n));
    const auto path = entrss::moving_average_smooth(s, w);
    std::memcpy(out, path.values.data(), n * sizeof(double));
    return ENTRSS_OK;
  });
}

entrss_status entrss_rss_diagonal(const double* grid, size_t n, int w,
                                  double* out) {
  if (auto rc = require_args(grid && out && n > 0); rc) return rc;
  return guarded([&] {
    entrss::sample_grid g;
    g.n = n;
    g.values.assign(grid, grid + n * n);
    const auto diag = entrss::build_rss_diagonal(g, w);
    std::memcpy(out, diag.values.data(), n * sizeof(double));
    return ENTRSS_OK;
  });
}

entrss_status entrss_bootstrap_grid(const double* x, size_t n, uint64_t seed,
                                    double* out_grid) {
  if (auto rc = require_args(x && out_grid && n > 0); rc) return rc;
  return guarded([&] {
    const auto grid = entrss::bootstrap_grid({x, n}, seed);
    std::memcpy(out_grid, grid.values.data(), n * n * sizeof(double));
    return ENTRSS_OK;
  });
}

entrss_status entrss_test_statistic(const char* statistic, const double* x,
                                    size_t n, int m, int w, int mode,
                                    uint64_t seed, double* out) {
  if (auto rc = require_args(statistic && x && out && n > 0); rc) return rc;
  entrss::test_kind kind;
  if (auto rc = parse_test_checked(statistic, &kind); rc) return rc;
  return guarded([&] {
    const std::size_t mm =
        m > 0 ? static_cast<std::size_t>(m) : entrss::testing_window(n).m;
    const int ww = w > 0 ? w : 3;
    if (mode == 1) {
      if (!entrss::is_rss_test(kind))
        throw std::domain_error("grid mode is only for tve_r / tw_r");
      entrss::sample_grid g;
      g.n = n;
      g.values.assign(x, x + n * n);
      const auto diag = entrss::build_rss_diagonal(g, ww);
      *out = entrss::test_statistic_rss(kind, diag, mm);
      return ENTRSS_OK;
    }
    const entrss::grid_mode gm =
        mode == 2 ? entrss::grid_mode::bootstrap : entrss::grid_mode::full_grid;
    *out = entrss::observed_statistic(kind, {x, n}, mm, ww, gm, seed, false);
    return ENTRSS_OK;
  });
}

entrss_status entrss_sample_sigma(const double* x, size_t n, double* out) {
  if (auto rc = require_args(x && out && n > 0); rc) return rc;
  return guarded([&] {
    *out = entrss::sample_sigma({x, n});
    return ENTRSS_OK;
  });
}

entrss_status entrss_dist_parse(const char* spec, entrss_dist** out) {
  if (auto rc = require_args(spec && out); rc) return rc;
  return guarded([&] {
    auto parsed = entrss::distribution_spec::parse(spec);
    *out = new entrss_dist{parsed, parsed.name()};
    return ENTRSS_OK;
  });
}

void entrss_dist_free(entrss_dist* dist) { delete dist; }

const char* entrss_dist_name(const entrss_dist* dist) {
  return dist ? dist->name.c_str() : "";
}

entrss_status entrss_dist_sample(const entrss_dist* dist, size_t n,
                                 uint64_t seed, uint64_t stream, double* out) {
  if (auto rc = require_args(dist && out && n > 0); rc) return rc;
  return guarded([&] {
    const auto values = dist->spec.sample(n, seed, stream);
    std::memcpy(out, values.data(), n * sizeof(double));
    return ENTRSS_OK;
  });
}

entrss_status entrss_dist_cdf(const entrss_dist* dist, double x, double* out) {
  if (auto rc = require_args(dist && out); rc) return rc;
  return guarded([&] {
    *out = dist->spec.cdf(x);
    return ENTRSS_OK;
  });
}

entrss_status entrss_dist_true_entropy(const entrss_dist* dist, double* out) {
  if (auto rc = require_args(dist && out); rc) return rc;
  return guarded([&] {
    const auto h = dist->spec.true_entropy();
    if (!h)
      throw std::domain_error("no closed-form entropy for " + dist->name);
    *out = *h;
    return ENTRSS_OK;
  });
}

entrss_status entrss_fit_normal(const double* x, size_t n, double* mu,
                                double* sigma) {
  if (auto rc = require_args(x && mu && sigma && n > 0); rc) return rc;
  return guarded([&] {
    const auto fit = entrss::fit_normal({x, n});
    *mu = fit.mu;
    *sigma = fit.sigma;
    return ENTRSS_OK;
  });
}

entrss_status entrss_fit_inverse_gaussian(const double* x, size_t n, double* mu,
                                          double* lambda) {
  if (auto rc = require_args(x && mu && lambda && n > 0); rc) return rc;
  return guarded([&] {
    const auto fit = entrss::fit_inverse_gaussian({x, n});
    *mu = fit.mu;
    *lambda = fit.lambda;
    return ENTRSS_OK;
  });
}

entrss_status entrss_fit_inverse_gaussian_mle(const double* x, size_t n,
                                              double* mu, double* lambda) {
  if (auto rc = require_args(x && mu && lambda && n > 0); rc) return rc;
  return guarded([&] {
    const auto fit = entrss::fit_inverse_gaussian_mle({x, n});
    *mu = fit.mu;
    *lambda = fit.lambda;
    return ENTRSS_OK;
  });
}

entrss_status entrss_ks_statistic(const double* x, size_t n,
                                  const entrss_dist* dist, double* out) {
  if (auto rc = require_args(x && dist && out && n > 0); rc) return rc;
  return guarded([&] {
    entrss::sorted_sample s(std::vector<double>(x, x + n));
    *out = entrss::ks_statistic(
        s, [dist](double v) { return dist->spec.cdf(v); });
    return ENTRSS_OK;
  });
}

entrss_status entrss_ad_statistic(const double* x, size_t n,
                                  const entrss_dist* dist, double* out) {
  if (auto rc = require_args(x && dist && out && n > 0); rc) return rc;
  return guarded([&] {
    entrss::sorted_sample s(std::vector<double>(x, x + n));
    *out = entrss::ad_statistic(
        s, [dist](double v) { return dist->spec.cdf(v); });
    return ENTRSS_OK;
  });
}

const double* entrss_repair_times(size_t* n) {
  const auto data = entrss::repair_times();
  if (n) *n = data.size();
  return data.data();
}

entrss_status entrss_mc_critical_value(const char* statistic,
                                       const entrss_mc_config* cfg,
                                       entrss_report** out) {
  if (auto rc = require_args(statistic && cfg && out); rc) return rc;
  entrss::test_kind kind;
  if (auto rc = parse_test_checked(statistic, &kind); rc) return rc;
  return guarded([&] {
    auto rep = entrss::critical_value_report(kind, to_core(*cfg));
    return make_report(std::move(rep), out);
  });
}

entrss_status entrss_mc_estimator_error(const char* estimator, const char* dist,
                                        const entrss_mc_config* cfg,
                                        entrss_report** out) {
  if (auto rc = require_args(estimator && dist && cfg && out); rc) return rc;
  entrss::estimator_kind kind;
  if (auto rc = parse_estimator_checked(estimator, &kind); rc) return rc;
  return guarded([&] {
    const auto spec = entrss::distribution_spec::parse(dist);
    auto rep = entrss::estimator_error_report(kind, spec, to_core(*cfg));
    return make_report(std::move(rep), out);
  });
}

entrss_status entrss_mc_mse_trend(const char* estimator, const char* dist,
                                  const long long* ns, size_t n_count, double b,
                                  const entrss_mc_config* cfg,
                                  entrss_report** out) {
  if (auto rc = require_args(estimator && dist && ns && cfg && out && n_count);
      rc)
    return rc;
  entrss::estimator_kind kind;
  if (auto rc = parse_estimator_checked(estimator, &kind); rc) return rc;
  return guarded([&] {
    const auto spec = entrss::distribution_spec::parse(dist);
    auto rep = entrss::mse_trend_report(kind, spec, {ns, n_count}, b,
                                        to_core(*cfg));
    return make_report(std::move(rep), out);
  });
}

entrss_status entrss_mc_power(const char* statistic, const char* alt,
                              const entrss_mc_config* cfg,
                              entrss_report** out) {
  if (auto rc = require_args(statistic && alt && cfg && out); rc) return rc;
  entrss::test_kind kind;
  if (auto rc = parse_test_checked(statistic, &kind); rc) return rc;
  return guarded([&] {
    const auto spec = entrss::distribution_spec::parse(alt);
    auto rep = entrss::power_report(kind, spec, to_core(*cfg));
    return make_report(std::move(rep), out);
  });
}

entrss_status entrss_mc_p_value(const char* statistic, double observed,
                                const entrss_mc_config* cfg,
                                entrss_report** out) {
  if (auto rc = require_args(statistic && cfg && out); rc) return rc;
  entrss::test_kind kind;
  if (auto rc = parse_test_checked(statistic, &kind); rc) return rc;
  return guarded([&] {
    auto rep = entrss::p_value_report(kind, observed, to_core(*cfg));
    return make_report(std::move(rep), out);
  });
}

entrss_status entrss_estimate(const char* estimator, const double* x, size_t n,
                              const entrss_mc_config* cfg,
                              entrss_report** out) {
  if (auto rc = require_args(estimator && x && cfg && out && n > 0); rc)
    return rc;
  entrss::estimator_kind kind;
  if (auto rc = parse_estimator_checked(estimator, &kind); rc) return rc;
  return guarded([&] {
    auto rep = entrss::estimate_report(kind, {x, n}, to_core(*cfg));
    return make_report(std::move(rep), out);
  });
}

entrss_status entrss_normality_test(const char* statistic, const double* x,
                                    size_t n, const entrss_mc_config* cfg,
                                    entrss_report** out) {
  if (auto rc = require_args(statistic && x && cfg && out && n > 0); rc)
    return rc;
  entrss::test_kind kind;
  if (auto rc = parse_test_checked(statistic, &kind); rc) return rc;
  return guarded([&] {
    auto rep = entrss::normality_test_report(kind, {x, n}, to_core(*cfg));
    return make_report(std::move(rep), out);
  });
}

entrss_status entrss_real_data(const char* statistic,
                               const entrss_mc_config* cfg,
                               const long long* n_fits, size_t n_fit_count,
                               entrss_report** out) {
  if (auto rc = require_args(statistic && cfg && out); rc) return rc;
  entrss::test_kind kind;
  if (auto rc = parse_test_checked(statistic, &kind); rc) return rc;
  return guarded([&] {
    std::span<const long long> fits;
    if (n_fits && n_fit_count) fits = {n_fits, n_fit_count};
    auto rep = entrss::real_data_report(kind, to_core(*cfg), fits);
    return make_report(std::move(rep), out);
  });
}

entrss_status entrss_empirical_power(const char* statistic, const double* x,
                                     size_t n, long long n_fit,
                                     const entrss_mc_config* cfg,
                                     entrss_report** out) {
  if (auto rc = require_args(statistic && x && cfg && out && n > 0 && n_fit > 2);
      rc)
    return rc;
  entrss::test_kind kind;
  if (auto rc = parse_test_checked(statistic, &kind); rc) return rc;
  return guarded([&] {
    auto rep = entrss::empirical_power_report(
        kind, {x, n}, static_cast<std::size_t>(n_fit), to_core(*cfg));
    return make_report(std::move(rep), out);
  });
}

entrss_status entrss_smooth_demo(size_t n, int w, uint64_t seed,
                                 entrss_report** out) {
  if (auto rc = require_args(out != nullptr); rc) return rc;
  return guarded([&] {
    auto rep = entrss::smooth_demo_report(n, w > 0 ? w : 3, seed);
    return make_report(std::move(rep), out);
  });
}

size_t entrss_report_rows(const entrss_report* report) {
  return report ? report->table.rows.size() : 0;
}

size_t entrss_report_columns(const entrss_report* report) {
  return report ? report->table.columns.size() : 0;
}

const char* entrss_report_column_name(const entrss_report* report,
                                      size_t column) {
  if (!report || column >= report->table.columns.size()) return "";
  return report->table.columns[column].c_str();
}

entrss_status entrss_report_value(const entrss_report* report, size_t row,
                                  const char* column, double* out) {
  if (auto rc = require_args(report && column && out); rc) return rc;
  return guarded([&] {
    *out = report->table.value_at(row, column);
    return ENTRSS_OK;
  });
}

entrss_status entrss_report_csv(const entrss_report* report, char** out) {
  if (auto rc = require_args(report && out); rc) return rc;
  return guarded([&] {
    *out = dup_string(entrss::to_csv(report->table));
    if (!*out) throw std::bad_alloc();
    return ENTRSS_OK;
  });
}

entrss_status entrss_report_json(const entrss_report* report, char** out) {
  if (auto rc = require_args(report && out); rc) return rc;
  return guarded([&] {
    *out = dup_string(entrss::to_json(report->table));
    if (!*out) throw std::bad_alloc();
    return ENTRSS_OK;
  });
}

void entrss_report_free(entrss_report* report) { delete report; }

void entrss_string_free(char* s) { std::free(s); }

}  // extern "C"
