#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rng.hpp"

namespace entrss {

enum class family {
  normal,            // (mu, sigma)
  exponential,       // (rate)
  uniform,           // (a, b)
  student_t,         // (nu)
  laplace,           // standard (0, 1)
  logistic,          // standard (0, 1)
  gumbel,            // (location 0, scale); "EV(0,k)" labels
  chi_square,        // (df)
  log_normal,        // (0, sigma)
  gamma,             // (shape, scale 1)
  weibull,           // (shape, scale 1)
  beta,              // (a, b)
  gexp,              // generalized exponential, cdf (1 - e^{-x})^alpha
  inverse_gaussian,  // (mu, lambda)
};

// A tagged, validated member of one of the families above.
class distribution_spec {
 public:
  distribution_spec(family f, double p1, double p2);

  // Parses "family:params" labels such as "exp:1", "t:3", "ev:0,2",
  // "beta:0.5,3" (case-insensitive). Throws std::invalid_argument.
  static distribution_spec parse(std::string_view text);

  family fam() const { return family_; }
  double p1() const { return p1_; }
  double p2() const { return p2_; }
  std::string name() const;

  // Seeded, stream-addressed sampling; the output is a pure function of
  // (spec, n, seed, stream).
  std::vector<double> sample(std::size_t n, std::uint64_t seed,
                             std::uint64_t stream) const;
  double sample_one(rng_stream& rng) const;

  double cdf(double x) const;

  // Closed-form differential entropy where the Monte Carlo tables need it.
  std::optional<double> true_entropy() const;

 private:
  family family_;
  double p1_ = 0.0;
  double p2_ = 0.0;
};

// Divisor-n standard deviation; throws degenerate_sample_error when zero.
double sample_sigma(std::span<const double> x);

struct normal_fit {
  double mu = 0.0;
  double sigma = 0.0;
};
normal_fit fit_normal(std::span<const double> x);

struct inverse_gaussian_fit {
  double mu = 0.0;
  double lambda = 0.0;
};
// Moment rule lambda = mu^3 / sigma^2.
inverse_gaussian_fit fit_inverse_gaussian(std::span<const double> x);
// Maximum likelihood: 1/lambda = mean(1/x_i) - 1/mean.
inverse_gaussian_fit fit_inverse_gaussian_mle(std::span<const double> x);

// Inverse-Gaussian distribution function via the normal-cdf composition.
double inverse_gaussian_cdf(double x, double mu, double lambda);

}  // namespace entrss
