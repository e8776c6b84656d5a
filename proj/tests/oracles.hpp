// Independent reference implementations used only by tests. These are kept
// deliberately naive (literal formula transcriptions) so they can serve as
// oracles for the production code paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace oracle {

// Literal three-branch moving average of a sorted vector (1-based branches).
inline std::vector<double> smooth_naive(const std::vector<double>& x, int w) {
  const std::size_t n = x.size();
  const std::size_t half = static_cast<std::size_t>((w - 1) / 2);
  std::vector<double> y(n);
  for (std::size_t i = 1; i <= n; ++i) {
    double s = 0.0;
    if (i <= half) {
      for (std::size_t j = 1; j <= i; ++j) s += x[j - 1];
      y[i - 1] = s / static_cast<double>(i);
    } else if (i + half <= n) {
      for (std::size_t j = i - half; j <= i + half; ++j) s += x[j - 1];
      y[i - 1] = s / static_cast<double>(w);
    } else {
      for (std::size_t j = i; j <= n; ++j) s += x[j - 1];
      y[i - 1] = s / static_cast<double>(n - i + 1);
    }
  }
  return y;
}

// Row-wise sort + smooth + diagonal + sort, straight from the construction.
inline std::vector<double> rss_diagonal_naive(std::vector<std::vector<double>> rows,
                                              int w) {
  const std::size_t n = rows.size();
  std::vector<double> diag(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::sort(rows[k].begin(), rows[k].end());
    diag[k] = smooth_naive(rows[k], w)[k];
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

inline double mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double sigma_n(std::span<const double> v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

// Literal trapezoid-denominator evaluation of the KDE-spacing estimator.
inline double hz_naive(std::vector<double> x, std::size_t m, int variant) {
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  const double sig = sigma_n(x);
  const double h = 1.06 * sig * std::pow(static_cast<double>(n), -0.2);
  auto kde = [&](double t) {
    double s = 0.0;
    for (double v : x)
      s += std::exp(-0.5 * (t - v) * (t - v) / (h * h)) /
           std::sqrt(2.0 * 3.14159265358979323846);
    return s / (static_cast<double>(n) * h);
  };
  std::vector<double> f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = kde(x[j]);

  std::vector<double> raw(n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (i <= m)
      raw[i - 1] = static_cast<double>(m + i - 1);
    else if (i <= n - m)
      raw[i - 1] = static_cast<double>(2 * m);
    else
      raw[i - 1] = static_cast<double>(n - i + m);
  }
  double wsum = 0.0;
  for (double v : raw) wsum += v;

  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t k1 = (i <= m) ? 1 : i - m;
    const std::size_t k2 = (i <= n - m) ? i + m : n;
    double denom = 0.0;
    for (std::size_t j = k1; j < k2; ++j)
      denom += 0.5 * (f[j] + f[j - 1]) * (x[j] - x[j - 1]);
    const std::size_t hi = std::min(i + m, n);
    const std::size_t lo = (i > m) ? i - m : 1;
    const double term = std::log((x[hi - 1] - x[lo - 1]) / denom);
    acc += (variant == 1) ? term / static_cast<double>(n)
                          : (raw[i - 1] / wsum) * term;
  }
  return acc;
}

// Brute-force one-sample KS over both one-sided gaps.
inline double ks_naive(std::vector<double> x,
                       const std::function<double(double)>& cdf) {
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  double d = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double f = cdf(x[i - 1]);
    d = std::max(d, static_cast<double>(i) / static_cast<double>(n) - f);
    d = std::max(d, f - static_cast<double>(i - 1) / static_cast<double>(n));
  }
  return d;
}

inline double ad_naive(std::vector<double> x,
                       const std::function<double(double)>& cdf) {
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i)
    acc += (2.0 * static_cast<double>(i) - 1.0) *
           (std::log(cdf(x[i - 1])) + std::log(1.0 - cdf(x[n - i])));
  return -static_cast<double>(n) - acc / static_cast<double>(n);
}

// Composite Simpson quadrature of a density on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int intervals) {
  if (intervals % 2) ++intervals;
  const double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    s += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Inverse-Gaussian density for the quadrature oracle.
inline double ig_pdf(double x, double mu, double lambda) {
  if (x <= 0.0) return 0.0;
  return std::sqrt(lambda / (2.0 * 3.14159265358979323846 * x * x * x)) *
         std::exp(-lambda * (x - mu) * (x - mu) / (2.0 * mu * mu * x));
}

}  // namespace oracle
