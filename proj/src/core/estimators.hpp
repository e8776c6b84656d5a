#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smoothing.hpp"

namespace entrss {

enum class estimator_kind { hv, hve, hc, he, hw, hz1, hz2, hve_r, hw_r };

std::optional<estimator_kind> parse_estimator(std::string_view name);
std::string_view estimator_name(estimator_kind kind);
// hve_r / hw_r consume an RSS diagonal; the rest take a plain sample.
bool is_rss_estimator(estimator_kind kind);

// Estimation-window heuristic m = [sqrt(n)+0.5], clamped below n/2.
std::size_t default_window(std::size_t n);

// Gaussian-kernel density estimate with the h = 1.06 sigma n^{-1/5} bandwidth.
class kde_model {
 public:
  // Throws degenerate_sample_error when the sample variance is zero.
  explicit kde_model(std::span<const double> sample);
  // Test-only constructor with a forced bandwidth.
  kde_model(std::span<const double> sample, double forced_bandwidth);

  double operator()(double x) const;
  double bandwidth() const { return h_; }
  double sigma() const { return sigma_; }

 private:
  std::vector<double> sample_;
  double h_ = 0.0;
  double sigma_ = 0.0;
};

// Vasicek: (1/n) sum log((n/2m)(X_(i+m) - X_(i-m))), indices clamped to
// [1, n]. Throws tied_spacing_error when a clamped spacing vanishes.
double hv(const sorted_sample& s, std::size_t m);

// Van Es: (1/(n-m)) sum_{i<=n-m} log(((n+1)/m)(X_(i+m) - X_(i)))
//         + sum_{k=m}^{n} 1/k + log m - log(n+1). Requires m < n.
double hve(const sorted_sample& s, std::size_t m);

// Correa: -(1/n) sum log a_i with the local linear slope over 2m+1 clamped
// points. Throws tied_window_error when a window is constant.
double hc(const sorted_sample& s, std::size_t m);

// Ebrahimi et al.: Vasicek weights adjusted by the three-branch c_i.
double he(const sorted_sample& s, std::size_t m);
// The c_i vector (boundary weights in [1,2]); exposed for tests.
std::vector<double> he_weights(std::size_t n, std::size_t m);

// Wieczorkowski-Grzegorzewski: hv - log n + log 2m + c.
double hw(const sorted_sample& s, std::size_t m);

// Zamanzadeh-Arghami: variant 1 is the plain mean of log b_i, variant 2 the
// w_i-weighted sum; b_i divides the clamped 2m-spacing by a trapezoid sum of
// KDE values over the order-statistic gaps.
double hz(const sorted_sample& s, std::size_t m, int variant);
// Normalized weights w_i (sum to one); exposed for tests.
std::vector<double> hz_weights(std::size_t n, std::size_t m);

// Baseline-free RSS estimators over the sorted diagonal.
double hve_r(const rss_diagonal& d, std::size_t m);
double hw_r(const rss_diagonal& d, std::size_t m);

// Dispatch helpers used by the C API and the Monte Carlo engine.
double estimate_plain(estimator_kind kind, const sorted_sample& s, std::size_t m);
double estimate_rss(estimator_kind kind, const rss_diagonal& d, std::size_t m);

}  // namespace entrss
