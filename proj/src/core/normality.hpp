#pragma once

#include <functional>
#include <optional>
#include <string>

#include "estimators.hpp"
#include "smoothing.hpp"

namespace entrss {

enum class test_kind { tv, tve, tc, tw, tz1, tz2, tve_r, tw_r, ks, ad };

std::optional<test_kind> parse_test(std::string_view name);
std::string_view test_name(test_kind kind);
// tve_r / tw_r need an RSS diagonal; ks / ad need a fitted null; the rest act
// on the plain sample.
bool is_rss_test(test_kind kind);
bool is_entropy_test(test_kind kind);
// Entropy statistics reject below the critical value, ks/ad above it.
bool rejects_low(test_kind kind);

// Table of proposed testing windows: n<=8 -> 1, 9-15 -> 2, 16-35 -> 3,
// 36-60 -> 4, 61-80 -> 5, 81-100 -> 6. Past n=100 the last step is kept and
// `extrapolated` is set.
struct testing_window_result {
  std::size_t m = 1;
  bool extrapolated = false;
};
testing_window_result testing_window(std::size_t n);

// exp(entropy estimate) / sigma-hat for the plain entropy statistics.
// ks / ad are evaluated against the sample's own normal fit.
double test_statistic_plain(test_kind kind, const sorted_sample& s, std::size_t m);

// RSS statistics over a diagonal; sigma-hat comes from the diagonal values so
// the statistic stays exactly location/scale invariant.
//   tve_r = exp(hve_r) / sigma
//   tw_r  = (n/2m) * geomean of clamped 2m-spacings / sigma
double test_statistic_rss(test_kind kind, const rss_diagonal& d, std::size_t m);

// Classical one-sample statistics against an arbitrary distribution function.
using cdf_fn = std::function<double(double)>;
double ks_statistic(const sorted_sample& s, const cdf_fn& cdf);
double ad_statistic(const sorted_sample& s, const cdf_fn& cdf);

struct test_outcome {
  test_kind kind;
  double statistic = 0.0;
  double critical_value = 0.0;
  double alpha = 0.05;
  bool reject = false;
  std::size_t n = 0;
  std::size_t m = 0;
};

test_outcome make_outcome(test_kind kind, double statistic, double critical,
                          double alpha, std::size_t n, std::size_t m);

}  // namespace entrss
