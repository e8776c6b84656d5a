/* entrss — spacing-based entropy estimation and entropy-based normality
 * testing behind a C ABI.
 *
 * All functions return entrss_status; outputs go through pointers. On any
 * failure entrss_last_error() carries a human-readable message for the
 * calling thread. Opaque handles (entrss_dist, entrss_report) are created
 * and destroyed by this library only.
 */
#ifndef ENTRSS_H
#define ENTRSS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ENTRSS_API __declspec(dllexport)
#else
#define ENTRSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum entrss_status {
  ENTRSS_OK = 0,
  ENTRSS_EINVAL = 1,      /* bad argument / null pointer / unknown name */
  ENTRSS_EDOMAIN = 2,     /* precondition violated (n too small, m >= n/2, ...) */
  ENTRSS_ETIED = 3,       /* zero spacing: log of a tied spacing is undefined */
  ENTRSS_EDEGENERATE = 4, /* degenerate sample (zero variance) */
  ENTRSS_EPARSE = 5,      /* unparsable distribution spec */
  ENTRSS_EFAILED = 6      /* computation aborted (e.g. too many tied replicates) */
} entrss_status;

ENTRSS_API const char* entrss_version(void);

/* Message for the last error raised on the calling thread; never NULL. */
ENTRSS_API const char* entrss_last_error(void);

/* ---- entropy estimators --------------------------------------------------
 * Estimator names: hv, hve, hc, he, hw, hz1, hz2, hve_r, hw_r.
 * Plain estimators sort the input internally. RSS estimators (hve_r, hw_r)
 * take either a full n*n grid (row-major, n samples of size n) or a single
 * sample resampled into a bootstrap grid.
 */
ENTRSS_API entrss_status entrss_entropy(const char* estimator, const double* x,
                                        size_t n, int m, double* out);
ENTRSS_API entrss_status entrss_entropy_rss_grid(const char* estimator,
                                                 const double* grid, size_t n,
                                                 int m, int w, double* out);
ENTRSS_API entrss_status entrss_entropy_rss_bootstrap(const char* estimator,
                                                      const double* x, size_t n,
                                                      int m, int w,
                                                      uint64_t seed, double* out);

/* m = [sqrt(n)+0.5] clamped below n/2 (estimation heuristic). */
ENTRSS_API entrss_status entrss_default_window(size_t n, int* out);
/* Step rule for normality testing; *warned = 1 when extrapolating past n=100. */
ENTRSS_API entrss_status entrss_testing_window(size_t n, int* out, int* warned);

/* ---- smoothing / ranked-set diagonal ------------------------------------ */
/* Sorts x, applies the moving-average smoother of odd width w; out has n values. */
ENTRSS_API entrss_status entrss_smooth(const double* x, size_t n, int w,
                                       double* out);
/* Sorts each grid row, smooths it, extracts the k-th element of row k, sorts. */
ENTRSS_API entrss_status entrss_rss_diagonal(const double* grid, size_t n, int w,
                                             double* out);
/* n*n grid of draws with replacement from x; row k uses substream (seed, k). */
ENTRSS_API entrss_status entrss_bootstrap_grid(const double* x, size_t n,
                                               uint64_t seed, double* out_grid);

/* ---- normality test statistics -------------------------------------------
 * Statistic names: tv, tve, tc, tw, tz1, tz2, tve_r, tw_r, ks, ad.
 * mode: 0 = plain sample (tv..tz2, ks, ad), 1 = full grid input (n*n values),
 * 2 = bootstrap grid built from the sample with `seed` (tve_r / tw_r only).
 * ks/ad are evaluated against the normal fit of the sample.
 */
ENTRSS_API entrss_status entrss_test_statistic(const char* statistic,
                                               const double* x, size_t n, int m,
                                               int w, int mode, uint64_t seed,
                                               double* out);

/* sqrt((1/n) sum (x_i - mean)^2); EDEGENERATE when all values are equal. */
ENTRSS_API entrss_status entrss_sample_sigma(const double* x, size_t n,
                                             double* out);

/* ---- distributions -------------------------------------------------------
 * Specs parse from "family:params" (case-insensitive), e.g. "norm:0,1",
 * "exp:1", "t:3", "ev:0,2", "chi:4", "ln:0,0.6", "gamma:1.5", "weibull:2",
 * "beta:0.5,3", "gexp:0.5", "ig:3.6,2.0", "laplace", "logistic", "unif:0,1".
 */
typedef struct entrss_dist entrss_dist;

ENTRSS_API entrss_status entrss_dist_parse(const char* spec, entrss_dist** out);
ENTRSS_API void entrss_dist_free(entrss_dist* dist);
/* Canonical name of a parsed spec (owned by the handle). */
ENTRSS_API const char* entrss_dist_name(const entrss_dist* dist);
ENTRSS_API entrss_status entrss_dist_sample(const entrss_dist* dist, size_t n,
                                            uint64_t seed, uint64_t stream,
                                            double* out);
ENTRSS_API entrss_status entrss_dist_cdf(const entrss_dist* dist, double x,
                                         double* out);
/* EDOMAIN when no closed form is implemented (only exp/normal/uniform have one). */
ENTRSS_API entrss_status entrss_dist_true_entropy(const entrss_dist* dist,
                                                  double* out);

ENTRSS_API entrss_status entrss_fit_normal(const double* x, size_t n,
                                           double* mu, double* sigma);
/* Moment rule: mu = mean, lambda = mu^3 / sigma^2. */
ENTRSS_API entrss_status entrss_fit_inverse_gaussian(const double* x, size_t n,
                                                     double* mu, double* lambda);
/* Maximum likelihood: mu = mean, 1/lambda = mean(1/x_i) - 1/mean. */
ENTRSS_API entrss_status entrss_fit_inverse_gaussian_mle(const double* x,
                                                         size_t n, double* mu,
                                                         double* lambda);

/* Classical one-sample statistics against an arbitrary parsed distribution. */
ENTRSS_API entrss_status entrss_ks_statistic(const double* x, size_t n,
                                             const entrss_dist* dist,
                                             double* out);
ENTRSS_API entrss_status entrss_ad_statistic(const double* x, size_t n,
                                             const entrss_dist* dist,
                                             double* out);

/* ---- embedded dataset ---------------------------------------------------- */
/* Active repair times (hours), 45 values; pointer is static storage. */
ENTRSS_API const double* entrss_repair_times(size_t* n);

/* ---- Monte Carlo ---------------------------------------------------------
 * A report is an opaque table: '#' header comments, named columns, rows.
 * Monte Carlo tables use the fixed column schema
 *   kind,n,m,w,alpha,replicates,seed,value,std_error,bias,sd,rmse,power
 * with empty cells where a field does not apply.
 */
typedef struct entrss_report entrss_report;

typedef struct entrss_mc_config {
  long long replicates; /* >= 100 */
  double alpha;         /* in (0,1) */
  uint64_t seed;
  long long n;
  long long m; /* 0 = choose automatically (testing window / heuristic) */
  long long w; /* smoothing width; 0 = 3 */
  int mode;    /* 0 full_grid, 1 bootstrap (observed RSS statistics only) */
  int threads; /* 0 = hardware concurrency */
  int jitter;  /* tie-break uniform noise of 1e-9 * range on observed data */
} entrss_mc_config;

ENTRSS_API entrss_status entrss_mc_critical_value(const char* statistic,
                                                  const entrss_mc_config* cfg,
                                                  entrss_report** out);
ENTRSS_API entrss_status entrss_mc_estimator_error(const char* estimator,
                                                   const char* dist,
                                                   const entrss_mc_config* cfg,
                                                   entrss_report** out);
ENTRSS_API entrss_status entrss_mc_mse_trend(const char* estimator,
                                             const char* dist,
                                             const long long* ns, size_t n_count,
                                             double b,
                                             const entrss_mc_config* cfg,
                                             entrss_report** out);
ENTRSS_API entrss_status entrss_mc_power(const char* statistic, const char* alt,
                                         const entrss_mc_config* cfg,
                                         entrss_report** out);
ENTRSS_API entrss_status entrss_mc_p_value(const char* statistic,
                                           double observed,
                                           const entrss_mc_config* cfg,
                                           entrss_report** out);

/* One-row estimate report for a data vector (bootstrap grid for hve_r / hw_r
 * when cfg->mode == 1); cfg->m = 0 selects the estimation heuristic window. */
ENTRSS_API entrss_status entrss_estimate(const char* estimator, const double* x,
                                         size_t n, const entrss_mc_config* cfg,
                                         entrss_report** out);

/* Full normality test of a data vector: observed statistic, Monte Carlo
 * critical value, rejection flag and p-value, one row. cfg->n is ignored
 * (taken from the data); cfg->m = 0 selects the testing window. */
ENTRSS_API entrss_status entrss_normality_test(const char* statistic,
                                               const double* x, size_t n,
                                               const entrss_mc_config* cfg,
                                               entrss_report** out);

/* Real-data pipeline on the embedded dataset for one statistic: normal and
 * inverse-Gaussian fits, KS/AD against the MLE-fitted IG, the observed
 * statistic, its Monte Carlo p-value, and the empirical powers at the given
 * fit sizes (defaults when n_fits is NULL: 15 and 45 for plain statistics,
 * 15 for tw_r). */
ENTRSS_API entrss_status entrss_real_data(const char* statistic,
                                          const entrss_mc_config* cfg,
                                          const long long* n_fits,
                                          size_t n_fit_count,
                                          entrss_report** out);

/* Steps-style empirical power for an arbitrary sample (power of `statistic`
 * at size n_fit against the inverse Gaussian fitted to x). */
ENTRSS_API entrss_status entrss_empirical_power(const char* statistic,
                                                const double* x, size_t n,
                                                long long n_fit,
                                                const entrss_mc_config* cfg,
                                                entrss_report** out);

/* Sorted N(0,1) sample of size n with its smoothed path; columns
 * index,raw,smoothed. */
ENTRSS_API entrss_status entrss_smooth_demo(size_t n, int w, uint64_t seed,
                                            entrss_report** out);

/* ---- report access ------------------------------------------------------- */
ENTRSS_API size_t entrss_report_rows(const entrss_report* report);
ENTRSS_API size_t entrss_report_columns(const entrss_report* report);
ENTRSS_API const char* entrss_report_column_name(const entrss_report* report,
                                                 size_t column);
/* Numeric cell by row index and column name; EDOMAIN when empty/non-numeric. */
ENTRSS_API entrss_status entrss_report_value(const entrss_report* report,
                                             size_t row, const char* column,
                                             double* out);
/* Serialized forms; *out is malloc'd, release with entrss_string_free. */
ENTRSS_API entrss_status entrss_report_csv(const entrss_report* report,
                                           char** out);
ENTRSS_API entrss_status entrss_report_json(const entrss_report* report,
                                            char** out);
ENTRSS_API void entrss_report_free(entrss_report* report);
ENTRSS_API void entrss_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ENTRSS_H */
