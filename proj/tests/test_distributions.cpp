#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/distributions.hpp"
#include "core/errors.hpp"
#include "oracles.hpp"

using namespace entrss;

namespace {
// All families exercised by the power tables.
const std::vector<const char*> kSpecs = {
    "norm:0,1",   "exp:1",     "unif:0,1",  "t:3",       "t:1",
    "laplace",    "logistic",  "ev:0,2",    "chi:4",     "chi:1",
    "ln:0,0.6",   "gamma:1.5", "gamma:0.5", "weibull:2", "beta:0.5,3",
    "gexp:0.5",   "ig:3.6,2.0"};
}  // namespace

TEST_CASE("parsing and canonical names") {
  CHECK(distribution_spec::parse("exp:1").fam() == family::exponential);
  CHECK(distribution_spec::parse("EV:0,2").fam() == family::gumbel);
  CHECK(distribution_spec::parse("ev:2").p2() == doctest::Approx(2.0));
  CHECK(distribution_spec::parse("t:3").p1() == doctest::Approx(3.0));
  CHECK(distribution_spec::parse("beta:0.5,3").p2() == doctest::Approx(3.0));
  CHECK(distribution_spec::parse("ln:0.6").p2() == doctest::Approx(0.6));
  CHECK_THROWS_AS(distribution_spec::parse("nope:1"), std::invalid_argument);
  CHECK_THROWS_AS(distribution_spec::parse("exp:0"), std::invalid_argument);
  CHECK_THROWS_AS(distribution_spec::parse("beta:1"), std::invalid_argument);
  CHECK_THROWS_AS(distribution_spec::parse("t:junk"), std::invalid_argument);

  for (const char* text : kSpecs) {
    const auto spec = distribution_spec::parse(text);
    const auto again = distribution_spec::parse(spec.name());
    CHECK(again.fam() == spec.fam());
    CHECK(again.p1() == doctest::Approx(spec.p1()));
    CHECK(again.p2() == doctest::Approx(spec.p2()));
  }
}

TEST_CASE("sampling determinism and support") {
  const auto spec = distribution_spec::parse("exp:1");
  const auto a = spec.sample(64, 7, 3);
  const auto b = spec.sample(64, 7, 3);
  CHECK(a == b);
  const auto c = spec.sample(64, 7, 4);
  CHECK(a != c);

  const auto u = distribution_spec::parse("unif:0,1").sample(4096, 11, 0);
  for (double v : u) {
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
  for (const char* text : {"exp:1", "chi:1", "gamma:0.5", "weibull:2",
                           "ln:0,0.6", "gexp:0.5", "ig:3.6,2.0"}) {
    const auto pos = distribution_spec::parse(text).sample(2048, 5, 1);
    for (double v : pos) CHECK(v > 0.0);
  }
  const auto be = distribution_spec::parse("beta:0.5,3").sample(2048, 5, 2);
  for (double v : be) {
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("law of large numbers for the exponential mean") {
  const auto spec = distribution_spec::parse("exp:1");
  const auto x = spec.sample(100000, 123, 0);
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  CHECK(mean == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("cdf reference values") {
  CHECK(distribution_spec::parse("t:3").cdf(1.3) ==
        doctest::Approx(0.857766245636052).epsilon(1e-10));
  CHECK(distribution_spec::parse("t:1").cdf(-2.0) ==
        doctest::Approx(0.147583617650433).epsilon(1e-10));
  CHECK(distribution_spec::parse("chi:4").cdf(2.5) ==
        doctest::Approx(0.355364207064572).epsilon(1e-10));
  CHECK(distribution_spec::parse("chi:1").cdf(0.8) ==
        doctest::Approx(0.628906630477302).epsilon(1e-10));
  CHECK(distribution_spec::parse("beta:0.5,3").cdf(0.2) ==
        doctest::Approx(0.733430296619931).epsilon(1e-10));
  CHECK(distribution_spec::parse("gamma:1.5").cdf(2.0) ==
        doctest::Approx(0.738535870050889).epsilon(1e-10));
  CHECK(distribution_spec::parse("ev:0,2").cdf(1.0) ==
        doctest::Approx(0.545239211892605).epsilon(1e-10));
  CHECK(distribution_spec::parse("logistic").cdf(0.7) ==
        doctest::Approx(0.668187772168166).epsilon(1e-10));
  CHECK(distribution_spec::parse("laplace").cdf(-0.4) ==
        doctest::Approx(0.33516002301782).epsilon(1e-10));
  CHECK(distribution_spec::parse("ln:0,0.6").cdf(2.0) ==
        doctest::Approx(0.876005005747136).epsilon(1e-10));
  CHECK(distribution_spec::parse("weibull:2").cdf(1.5) ==
        doctest::Approx(0.894600775438136).epsilon(1e-10));
  CHECK(distribution_spec::parse("ig:3.5,2").cdf(3.5) ==
        doctest::Approx(0.704715166742547).epsilon(1e-10));
}

TEST_CASE("draws agree with the family cdf (KS band at alpha=0.01)") {
  const std::size_t n = 100000;
  const double band = 1.63 / std::sqrt(static_cast<double>(n));
  for (const char* text : kSpecs) {
    CAPTURE(text);
    const auto spec = distribution_spec::parse(text);
    auto x = spec.sample(n, 20240607, 1);
    std::sort(x.begin(), x.end());
    double d = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      const double f = spec.cdf(x[i - 1]);
      d = std::max(d, std::max(static_cast<double>(i) / n - f,
                               f - static_cast<double>(i - 1) / n));
    }
    CHECK(d < band);
  }
}

TEST_CASE("true entropies") {
  CHECK(*distribution_spec::parse("exp:1").true_entropy() == doctest::Approx(1.0));
  CHECK(*distribution_spec::parse("norm:0,1").true_entropy() ==
        doctest::Approx(1.4189385332046727).epsilon(1e-12));
  CHECK(*distribution_spec::parse("unif:0,1").true_entropy() ==
        doctest::Approx(0.0));
  CHECK(*distribution_spec::parse("unif:0,2").true_entropy() ==
        doctest::Approx(std::log(2.0)));
  CHECK(!distribution_spec::parse("t:3").true_entropy().has_value());
  CHECK(!distribution_spec::parse("beta:2,2").true_entropy().has_value());
}

TEST_CASE("sample sigma") {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  CHECK(sample_sigma(x) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  const std::vector<double> pm = {-1, 1};
  CHECK(sample_sigma(pm) == doctest::Approx(1.0));
  const std::vector<double> cc = {3, 3};
  CHECK_THROWS_AS(sample_sigma(cc), degenerate_sample_error);
}

TEST_CASE("normal and inverse-Gaussian fits") {
  const std::vector<double> pm = {-1, 1};
  const auto nf = fit_normal(pm);
  CHECK(nf.mu == doctest::Approx(0.0));
  CHECK(nf.sigma == doctest::Approx(1.0));
  const std::vector<double> flat = {5, 5, 5};
  CHECK_THROWS_AS(fit_normal(flat), degenerate_sample_error);

  // mean 2, sigma 1 -> lambda = 8/1 = 8 by the moment rule
  const std::vector<double> two = {1.0, 3.0};
  const auto ig = fit_inverse_gaussian(two);
  CHECK(ig.mu == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ig.lambda == doctest::Approx(8.0).epsilon(1e-12));

  const std::vector<double> with_zero = {0.0, 1.0, 2.0};
  CHECK_THROWS_AS(fit_inverse_gaussian(with_zero), std::domain_error);
  CHECK_THROWS_AS(fit_inverse_gaussian_mle(with_zero), std::domain_error);
}

TEST_CASE("inverse-Gaussian cdf against Simpson quadrature") {
  const double mu = 3.5644;
  const double lambda = 2.0063;
  for (double x : {0.5, 1.0, 2.0, mu, 6.0, 12.0}) {
    const double q = oracle::simpson(
        [&](double t) { return oracle::ig_pdf(t, mu, lambda); }, 1e-12, x,
        20000);
    CHECK(inverse_gaussian_cdf(x, mu, lambda) == doctest::Approx(q).epsilon(1e-8));
  }
  CHECK(inverse_gaussian_cdf(1e-9, mu, lambda) == doctest::Approx(0.0));
  CHECK(inverse_gaussian_cdf(1e9, mu, lambda) == doctest::Approx(1.0));
}

TEST_CASE("inverse-Gaussian cdf is monotone into [0,1]") {
  double prev = 0.0;
  for (int i = 1; i <= 10000; ++i) {
    const double x = 0.003 * i;
    const double f = inverse_gaussian_cdf(x, 2.0, 1.5);
    CHECK(f >= prev);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    prev = f;
  }
}
