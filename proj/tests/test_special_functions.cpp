#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "core/special_functions.hpp"

using namespace entrss;

TEST_CASE("digamma at small integers") {
  CHECK(digamma_int(1) == doctest::Approx(-0.5772156649015329).epsilon(1e-12));
  CHECK(digamma_int(2) == doctest::Approx(0.4227843350984671).epsilon(1e-12));
  CHECK(digamma_int(5) == doctest::Approx(1.5061176684318003).epsilon(1e-12));
  CHECK_THROWS_AS(digamma_int(0), std::domain_error);
  CHECK_THROWS_AS(digamma_int(-3), std::domain_error);
}

TEST_CASE("digamma recurrence psi(k+1) - psi(k) = 1/k") {
  for (long long k = 1; k <= 10000; k += (k < 100 ? 1 : 97)) {
    const double diff = digamma_int(k + 1) - digamma_int(k);
    CHECK(diff == doctest::Approx(1.0 / static_cast<double>(k)).epsilon(1e-11));
  }
}

TEST_CASE("bias correction constant") {
  CHECK(bias_correction_c({5, 1}) ==
        doctest::Approx(1.6833333333333333).epsilon(1e-12));
  CHECK(bias_correction_c({10, 3}) ==
        doctest::Approx(0.9323015873015873).epsilon(1e-12));
  CHECK(bias_correction_c({4, 1}) ==
        doctest::Approx(1.5833333333333333).epsilon(1e-12));
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(bias_correction_c({10, 5}), std::domain_error);
  CHECK_THROWS_AS(bias_correction_c({10, 0}), std::domain_error);
  CHECK_NOTHROW(bias_correction_c({10, 4}));
}

TEST_CASE("harmonic tail") {
  CHECK(harmonic_tail(1, 5) ==
        doctest::Approx(1.0 + 0.5 + 1.0 / 3 + 0.25 + 0.2).epsilon(1e-15));
  CHECK(harmonic_tail(3, 3) == doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("normal cdf against frozen references") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(normal_cdf(1.96) == doctest::Approx(0.97500210485178).epsilon(1e-12));
  CHECK(normal_cdf(-1.96) == doctest::Approx(1.0 - 0.97500210485178).epsilon(1e-10));
}

TEST_CASE("incomplete gamma against frozen references") {
  // chi2_k(x) = P(k/2, x/2)
  CHECK(gamma_p(2.0, 1.25) == doctest::Approx(0.355364207064572).epsilon(1e-10));
  CHECK(gamma_p(0.5, 0.4) == doctest::Approx(0.628906630477302).epsilon(1e-10));
  CHECK(gamma_p(1.5, 2.0) == doctest::Approx(0.738535870050889).epsilon(1e-10));
  CHECK(gamma_p(0.5, 0.3) == doctest::Approx(0.561421973919).epsilon(1e-10));
  CHECK(gamma_p(3.0, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("incomplete beta against frozen references") {
  CHECK(beta_inc(0.5, 3.0, 0.2) ==
        doctest::Approx(0.733430296619931).epsilon(1e-10));
  CHECK(beta_inc(3.0, 0.5, 0.9) ==
        doctest::Approx(0.445415555347971).epsilon(1e-10));
  CHECK(beta_inc(2.0, 2.0, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
}
