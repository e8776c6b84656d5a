#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/dataset.hpp"
#include "core/distributions.hpp"
#include "core/normality.hpp"
#include "core/rng.hpp"
#include "core/special_functions.hpp"
#include "oracles.hpp"

using namespace entrss;

namespace {
rss_diagonal as_diagonal(std::vector<double> values) {
  rss_diagonal d;
  std::sort(values.begin(), values.end());
  d.values = std::move(values);
  return d;
}
}  // namespace

TEST_CASE("testing window table") {
  CHECK(testing_window(5).m == 1);
  CHECK(testing_window(8).m == 1);
  CHECK(testing_window(10).m == 2);
  CHECK(testing_window(15).m == 2);
  CHECK(testing_window(16).m == 3);
  CHECK(testing_window(45).m == 4);
  CHECK(testing_window(80).m == 5);
  CHECK(testing_window(100).m == 6);
  CHECK(!testing_window(100).extrapolated);
  const auto past = testing_window(140);
  CHECK(past.m == 6);
  CHECK(past.extrapolated);
}

TEST_CASE("tv on {1..5} composes hv and sigma") {
  const sorted_sample s({1, 2, 3, 4, 5});
  CHECK(test_statistic_plain(test_kind::tv, s, 1) ==
        doctest::Approx(2.679433656340733).epsilon(1e-12));
}

TEST_CASE("tve_r on the unit diagonal") {
  const auto d = as_diagonal({1, 2, 3, 4, 5});
  CHECK(test_statistic_rss(test_kind::tve_r, d, 1) ==
        doctest::Approx(6.93623932092572).epsilon(1e-11));
}

TEST_CASE("tw_r uses the Vasicek normalization") {
  const auto d = as_diagonal({1, 2, 3, 4, 5});
  // (n/2m) * geomean{1,2,2,2,1} / sigma
  const double geo = std::exp((3.0 * std::log(2.0)) / 5.0);
  const double expected = 2.5 * geo / std::sqrt(2.0);
  CHECK(test_statistic_rss(test_kind::tw_r, d, 1) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("location-scale invariance of every entropy statistic") {
  rng_stream rng(31, 4);
  const std::vector<test_kind> plain = {test_kind::tv,  test_kind::tve,
                                        test_kind::tc,  test_kind::tw,
                                        test_kind::tz1, test_kind::tz2};
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t n = 10 + (rng.next_u64() % 20);
    const std::size_t m = 1 + (rng.next_u64() % 3);
    std::vector<double> base(n);
    for (double& v : base) v = rng.normal();
    const double a = rng.normal() * 5.0;
    const double b = 0.5 + 2.0 * rng.uniform01();
    std::vector<double> moved(n);
    for (std::size_t i = 0; i < n; ++i) moved[i] = a + b * base[i];

    const sorted_sample s0(base);
    const sorted_sample s1(moved);
    for (auto kind : plain) {
      CHECK(test_statistic_plain(kind, s1, m) ==
            doctest::Approx(test_statistic_plain(kind, s0, m)).epsilon(1e-10));
    }
    const auto d0 = as_diagonal(base);
    const auto d1 = as_diagonal(moved);
    for (auto kind : {test_kind::tve_r, test_kind::tw_r}) {
      CHECK(test_statistic_rss(kind, d1, m) ==
            doctest::Approx(test_statistic_rss(kind, d0, m)).epsilon(1e-10));
    }
  }
}

TEST_CASE("ks single point at the uniform median") {
  const sorted_sample s1({0.5, 0.5, 0.5});
  // single distinct value: brute force over the three order statistics
  const auto unif = [](double x) { return std::min(1.0, std::max(0.0, x)); };
  CHECK(ks_statistic(s1, unif) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("ad single-term formula") {
  // n=1 at the uniform median: -1 - (log 0.5 + log 0.5)
  const auto unif = [](double x) { return std::min(1.0, std::max(0.0, x)); };
  CHECK(oracle::ad_naive({0.5}, unif) ==
        doctest::Approx(0.3862943611198906).epsilon(1e-12));
}

TEST_CASE("ks/ad match the brute-force oracles on random data") {
  rng_stream rng(17, 9);
  const auto normal01 = [](double x) { return normal_cdf(x); };
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = 5 + (rng.next_u64() % 40);
    std::vector<double> x(n);
    for (double& v : x) v = rng.normal();
    const sorted_sample s(x);
    CHECK(ks_statistic(s, normal01) ==
          doctest::Approx(oracle::ks_naive(x, normal01)).epsilon(1e-13));
    CHECK(ad_statistic(s, normal01) ==
          doctest::Approx(oracle::ad_naive(x, normal01)).epsilon(1e-12));
  }
}

TEST_CASE("ks/ad invariance under a monotone transform to uniforms") {
  rng_stream rng(23, 5);
  std::vector<double> x(25);
  for (double& v : x) v = 2.0 * rng.normal() + 1.0;
  const auto f = [](double v) { return normal_cdf((v - 1.0) / 2.0); };
  const sorted_sample s(x);
  std::vector<double> u(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) u[i] = f(x[i]);
  const sorted_sample su(u);
  const auto ident = [](double v) { return std::min(1.0, std::max(0.0, v)); };
  CHECK(ks_statistic(s, f) == doctest::Approx(ks_statistic(su, ident)).epsilon(1e-12));
  CHECK(ad_statistic(s, f) == doctest::Approx(ad_statistic(su, ident)).epsilon(1e-12));
}

TEST_CASE("repair times against the quoted baselines") {
  const auto data = repair_times();
  REQUIRE(data.size() == 45);
  CHECK(data.front() == doctest::Approx(0.2));
  CHECK(data.back() == doctest::Approx(24.5));
  CHECK(repair_times_digest() == kRepairTimesDigest);

  const auto ig = fit_inverse_gaussian_mle(data);
  CHECK(ig.mu == doctest::Approx(3.62666666666667).epsilon(1e-10));
  CHECK(ig.lambda == doctest::Approx(1.62418469973933).epsilon(1e-10));

  const sorted_sample s(std::vector<double>(data.begin(), data.end()));
  const auto cdf = [&](double x) {
    return inverse_gaussian_cdf(x, ig.mu, ig.lambda);
  };
  CHECK(ks_statistic(s, cdf) == doctest::Approx(0.07245267).epsilon(1e-6));
  CHECK(ad_statistic(s, cdf) == doctest::Approx(0.2392647).epsilon(1e-6));
}

TEST_CASE("rejection direction") {
  const auto low = make_outcome(test_kind::tv, 1.0, 2.0, 0.05, 20, 3);
  CHECK(low.reject);
  const auto high = make_outcome(test_kind::ks, 0.4, 0.2, 0.05, 20, 3);
  CHECK(high.reject);
  const auto keep = make_outcome(test_kind::tv, 3.0, 2.0, 0.05, 20, 3);
  CHECK(!keep.reject);
}

TEST_CASE("test name round trip") {
  for (auto kind : {test_kind::tv, test_kind::tve, test_kind::tc, test_kind::tw,
                    test_kind::tz1, test_kind::tz2, test_kind::tve_r,
                    test_kind::tw_r, test_kind::ks, test_kind::ad}) {
    const auto parsed = parse_test(test_name(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK(!parse_test("tq").has_value());
}
