#include "estimators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "special_functions.hpp"

namespace entrss {

namespace {

// 1-based order statistic with boundary clamping X_(i) = X_(1) / X_(n).
double clamped(std::span<const double> x, long long i) {
  const long long n = static_cast<long long>(x.size());
  if (i < 1) i = 1;
  if (i > n) i = n;
  return x[static_cast<std::size_t>(i - 1)];
}

double checked_log_spacing(double d, std::size_t index, const char* which) {
  if (!(d > 0.0))
    throw tied_spacing_error(index, std::string(which) +
                                        ": zero spacing at i=" +
                                        std::to_string(index));
  return std::log(d);
}

}  // namespace

std::optional<estimator_kind> parse_estimator(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "hv") return estimator_kind::hv;
  if (s == "hve") return estimator_kind::hve;
  if (s == "hc") return estimator_kind::hc;
  if (s == "he") return estimator_kind::he;
  if (s == "hw") return estimator_kind::hw;
  if (s == "hz1") return estimator_kind::hz1;
  if (s == "hz2") return estimator_kind::hz2;
  if (s == "hve_r" || s == "hver") return estimator_kind::hve_r;
  if (s == "hw_r" || s == "hwr") return estimator_kind::hw_r;
  return std::nullopt;
}

std::string_view estimator_name(estimator_kind kind) {
  switch (kind) {
    case estimator_kind::hv: return "hv";
    case estimator_kind::hve: return "hve";
    case estimator_kind::hc: return "hc";
    case estimator_kind::he: return "he";
    case estimator_kind::hw: return "hw";
    case estimator_kind::hz1: return "hz1";
    case estimator_kind::hz2: return "hz2";
    case estimator_kind::hve_r: return "hve_r";
    case estimator_kind::hw_r: return "hw_r";
  }
  return "?";
}

bool is_rss_estimator(estimator_kind kind) {
  return kind == estimator_kind::hve_r || kind == estimator_kind::hw_r;
}

std::size_t default_window(std::size_t n) {
  if (n < 3) throw std::domain_error("default_window requires n >= 3");
  auto m = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n)) + 0.5));
  if (m < 1) m = 1;
  // Keep the window admissible: m < n/2.
  while (m > 1 && 2 * m >= n) --m;
  return m;
}

kde_model::kde_model(std::span<const double> sample)
    : sample_(sample.begin(), sample.end()) {
  const std::size_t n = sample_.size();
  if (n == 0) throw std::domain_error("kde_model: empty sample");
  double mean = 0.0;
  for (double v : sample_) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : sample_) ss += (v - mean) * (v - mean);
  sigma_ = std::sqrt(ss / static_cast<double>(n));
  if (!(sigma_ > 0.0))
    throw degenerate_sample_error("kde_model: degenerate sample (sigma = 0)");
  h_ = 1.06 * sigma_ * std::pow(static_cast<double>(n), -0.2);
}

kde_model::kde_model(std::span<const double> sample, double forced_bandwidth)
    : sample_(sample.begin(), sample.end()), h_(forced_bandwidth) {
  if (sample_.empty()) throw std::domain_error("kde_model: empty sample");
  if (!(h_ > 0.0)) throw std::domain_error("kde_model: bandwidth must be positive");
  sigma_ = h_;  // placeholder, not meaningful with a forced bandwidth
}

double kde_model::operator()(double x) const {
  double s = 0.0;
  for (double v : sample_) s += normal_pdf((x - v) / h_);
  return s / (static_cast<double>(sample_.size()) * h_);
}

double hv(const sorted_sample& s, std::size_t m) {
  const std::size_t n = s.size();
  validate_window({n, m});
  const auto x = s.values();
  const double scale = static_cast<double>(n) / (2.0 * static_cast<double>(m));
  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double d = clamped(x, static_cast<long long>(i + m)) -
                     clamped(x, static_cast<long long>(i) - static_cast<long long>(m));
    acc += checked_log_spacing(scale * d, i, "hv");
  }
  return acc / static_cast<double>(n);
}

double hve(const sorted_sample& s, std::size_t m) {
  const std::size_t n = s.size();
  if (m < 1 || m >= n)
    throw std::domain_error("hve requires 1 <= m < n");
  const auto x = s.values();
  const double scale = static_cast<double>(n + 1) / static_cast<double>(m);
  double acc = 0.0;
  for (std::size_t i = 1; i + m <= n; ++i) {
    acc += checked_log_spacing(scale * (x[i + m - 1] - x[i - 1]), i, "hve");
  }
  acc /= static_cast<double>(n - m);
  return acc + harmonic_tail(m, n) + std::log(static_cast<double>(m)) -
         std::log(static_cast<double>(n + 1));
}

double hc(const sorted_sample& s, std::size_t m) {
  const std::size_t n = s.size();
  validate_window({n, m});
  const auto x = s.values();
  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    double mean = 0.0;
    for (long long j = static_cast<long long>(i) - static_cast<long long>(m);
         j <= static_cast<long long>(i + m); ++j)
      mean += clamped(x, j);
    mean /= static_cast<double>(2 * m + 1);
    double num = 0.0;
    double den = 0.0;
    for (long long j = static_cast<long long>(i) - static_cast<long long>(m);
         j <= static_cast<long long>(i + m); ++j) {
      const double dev = clamped(x, j) - mean;
      num += dev * static_cast<double>(j - static_cast<long long>(i));
      den += dev * dev;
    }
    if (!(den > 0.0))
      throw tied_window_error(i, "hc: constant window at i=" + std::to_string(i));
    acc += std::log(num / (static_cast<double>(n) * den));
  }
  return -acc / static_cast<double>(n);
}

std::vector<double> he_weights(std::size_t n, std::size_t m) {
  std::vector<double> c(n);
  const double md = static_cast<double>(m);
  for (std::size_t i = 1; i <= n; ++i) {
    if (i <= m)
      c[i - 1] = 1.0 + static_cast<double>(i - 1) / md;
    else if (i <= n - m)
      c[i - 1] = 2.0;
    else
      c[i - 1] = 1.0 + static_cast<double>(n - i) / md;
  }
  return c;
}

double he(const sorted_sample& s, std::size_t m) {
  const std::size_t n = s.size();
  validate_window({n, m});
  const auto x = s.values();
  const auto c = he_weights(n, m);
  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double d = clamped(x, static_cast<long long>(i + m)) -
                     clamped(x, static_cast<long long>(i) - static_cast<long long>(m));
    const double scale = static_cast<double>(n) / (c[i - 1] * static_cast<double>(m));
    acc += checked_log_spacing(scale * d, i, "he");
  }
  return acc / static_cast<double>(n);
}

double hw(const sorted_sample& s, std::size_t m) {
  const std::size_t n = s.size();
  return hv(s, m) - std::log(static_cast<double>(n)) +
         std::log(2.0 * static_cast<double>(m)) + bias_correction_c({n, m});
}

std::vector<double> hz_weights(std::size_t n, std::size_t m) {
  std::vector<double> w(n);
  double total = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    double raw;
    if (i <= m)
      raw = static_cast<double>(m + i - 1);
    else if (i <= n - m)
      raw = static_cast<double>(2 * m);
    else
      raw = static_cast<double>(n - i + m);
    w[i - 1] = raw;
    total += raw;
  }
  for (double& v : w) v /= total;
  return w;
}

double hz(const sorted_sample& s, std::size_t m, int variant) {
  const std::size_t n = s.size();
  validate_window({n, m});
  if (variant != 1 && variant != 2)
    throw std::domain_error("hz variant must be 1 or 2");
  const auto x = s.values();
  const kde_model kde(x);
  std::vector<double> fx(n);
  for (std::size_t j = 0; j < n; ++j) fx[j] = kde(x[j]);

  const auto w = hz_weights(n, m);
  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    // k1(i) = 1 for i <= m else i-m; k2(i) = i+m for i <= n-m else n.
    const std::size_t k1 = (i <= m) ? 1 : i - m;
    const std::size_t k2 = (i <= n - m) ? i + m : n;
    double denom = 0.0;
    for (std::size_t j = k1; j < k2; ++j)
      denom += 0.5 * (fx[j] + fx[j - 1]) * (x[j] - x[j - 1]);
    const double num = clamped(x, static_cast<long long>(i + m)) -
                       clamped(x, static_cast<long long>(i) - static_cast<long long>(m));
    if (!(num > 0.0))
      throw tied_spacing_error(i, "hz: zero spacing at i=" + std::to_string(i));
    if (!(denom > 0.0))
      throw degenerate_sample_error("hz: vanishing density mass at i=" +
                                    std::to_string(i));
    const double term = std::log(num / denom);
    acc += (variant == 1) ? term / static_cast<double>(n) : w[i - 1] * term;
  }
  return acc;
}

double hve_r(const rss_diagonal& d, std::size_t m) {
  const std::size_t n = d.size();
  if (m < 1 || m >= n) throw std::domain_error("hve_r requires 1 <= m < n");
  const auto& y = d.values;
  double acc = 0.0;
  for (std::size_t i = 1; i + m <= n; ++i)
    acc += checked_log_spacing(y[i + m - 1] - y[i - 1], i, "hve_r");
  return acc / static_cast<double>(n - m) + harmonic_tail(m, n);
}

double hw_r(const rss_diagonal& d, std::size_t m) {
  const std::size_t n = d.size();
  validate_window({n, m});
  const std::span<const double> y(d.values);
  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double sp = clamped(y, static_cast<long long>(i + m)) -
                      clamped(y, static_cast<long long>(i) - static_cast<long long>(m));
    acc += checked_log_spacing(sp, i, "hw_r");
  }
  return acc / static_cast<double>(n) + bias_correction_c({n, m});
}

double estimate_plain(estimator_kind kind, const sorted_sample& s, std::size_t m) {
  switch (kind) {
    case estimator_kind::hv: return hv(s, m);
    case estimator_kind::hve: return hve(s, m);
    case estimator_kind::hc: return hc(s, m);
    case estimator_kind::he: return he(s, m);
    case estimator_kind::hw: return hw(s, m);
    case estimator_kind::hz1: return hz(s, m, 1);
    case estimator_kind::hz2: return hz(s, m, 2);
    default:
      throw std::domain_error("estimator requires an RSS diagonal input");
  }
}

double estimate_rss(estimator_kind kind, const rss_diagonal& d, std::size_t m) {
  switch (kind) {
    case estimator_kind::hve_r: return hve_r(d, m);
    case estimator_kind::hw_r: return hw_r(d, m);
    default:
      throw std::domain_error("estimator requires a plain sample input");
  }
}

}  // namespace entrss
