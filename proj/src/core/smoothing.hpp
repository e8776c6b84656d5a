#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace entrss {

// A finite real sample held in nondecreasing order; n >= 3.
class sorted_sample {
 public:
  explicit sorted_sample(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

// n samples of size n, row-major; rows are independent samples.
struct sample_grid {
  std::size_t n = 0;
  std::vector<double> values;  // n * n

  std::span<const double> row(std::size_t k) const {
    return {values.data() + k * n, n};
  }
};

// The moving-average smoothed order-statistic path; same length as the input.
struct smoothed_path {
  std::vector<double> values;
  int width = 3;
};

enum class rss_source { full_grid, bootstrap };

// Sorted diagonal Y^R_1 <= ... <= Y^R_n of a smoothed sample grid.
struct rss_diagonal {
  std::vector<double> values;
  rss_source source = rss_source::full_grid;

  std::size_t size() const { return values.size(); }
};

// Three-branch moving average of odd width w over a sorted path: prefix means
// for i <= (w-1)/2, centered w-means in the interior, suffix means for
// i >= n-(w-3)/2. The output of a sorted input is sorted and stays inside
// [min, max].
smoothed_path moving_average_smooth(const sorted_sample& s, int w);

// Sorts each grid row, smooths it with width w, takes element k of row k and
// sorts the collected diagonal.
rss_diagonal build_rss_diagonal(const sample_grid& grid, int w,
                                rss_source source = rss_source::full_grid);

// n*n grid of draws with replacement from the empirical distribution of
// `sample`; row k is generated from substream (seed, k), so the grid is a pure
// function of (sample, seed).
sample_grid bootstrap_grid(std::span<const double> sample, std::uint64_t seed);

}  // namespace entrss
