#include "smoothing.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rng.hpp"

namespace entrss {

namespace {
constexpr std::uint64_t kBootstrapRowTag = 0x9272535bULL;

void validate_width(std::size_t n, int w) {
  if (n < 3) throw std::domain_error("smoothing requires n >= 3");
  if (w < 3 || w % 2 == 0)
    throw std::domain_error("smoothing width must be an odd integer >= 3, got " +
                            std::to_string(w));
  if (static_cast<std::size_t>(w) >= n)
    throw std::domain_error("smoothing width w=" + std::to_string(w) +
                            " must be smaller than n=" + std::to_string(n));
}

// Smooth a sorted range in place into `out` (both length n).
void smooth_sorted(std::span<const double> x, int w, double* out) {
  const std::size_t n = x.size();
  const std::size_t half = static_cast<std::size_t>((w - 1) / 2);
  double prefix = 0.0;
  for (std::size_t i = 1; i <= half; ++i) {
    prefix += x[i - 1];
    out[i - 1] = prefix / static_cast<double>(i);
  }
  // Centered branch, (w+1)/2 <= i <= n-(w-1)/2 in 1-based indexing. Each
  // window is summed directly, left to right.
  for (std::size_t i = half + 1; i + half <= n; ++i) {
    double window = 0.0;
    for (std::size_t j = i - half; j <= i + half; ++j) window += x[j - 1];
    out[i - 1] = window / static_cast<double>(w);
  }
  double suffix = 0.0;
  for (std::size_t i = n; i + half > n; --i) {
    suffix += x[i - 1];
    out[i - 1] = suffix / static_cast<double>(n - i + 1);
  }
}
}  // namespace

sorted_sample::sorted_sample(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 3)
    throw std::domain_error("sample size must be at least 3, got " +
                            std::to_string(values_.size()));
  std::sort(values_.begin(), values_.end());
}

smoothed_path moving_average_smooth(const sorted_sample& s, int w) {
  validate_width(s.size(), w);
  smoothed_path path;
  path.width = w;
  path.values.resize(s.size());
  smooth_sorted(s.values(), w, path.values.data());
  return path;
}

rss_diagonal build_rss_diagonal(const sample_grid& grid, int w,
                                rss_source source) {
  const std::size_t n = grid.n;
  if (grid.values.size() != n * n)
    throw std::domain_error("grid must hold exactly n rows of n values");
  validate_width(n, w);

  rss_diagonal diag;
  diag.source = source;
  diag.values.resize(n);
  std::vector<double> row(n);
  std::vector<double> smoothed(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto r = grid.row(k);
    row.assign(r.begin(), r.end());
    std::sort(row.begin(), row.end());
    smooth_sorted(row, w, smoothed.data());
    diag.values[k] = smoothed[k];
  }
  std::sort(diag.values.begin(), diag.values.end());
  return diag;
}

sample_grid bootstrap_grid(std::span<const double> sample, std::uint64_t seed) {
  const std::size_t n = sample.size();
  if (n < 3) throw std::domain_error("bootstrap_grid requires n >= 3");
  sample_grid grid;
  grid.n = n;
  grid.values.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    rng_stream rng = substream(seed, kBootstrapRowTag, k);
    double* row = grid.values.data() + k * n;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t idx =
          static_cast<std::size_t>(rng.uniform01() * static_cast<double>(n));
      row[j] = sample[idx < n ? idx : n - 1];
    }
  }
  return grid;
}

}  // namespace entrss
