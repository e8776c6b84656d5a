#pragma once

#include <cstddef>

namespace entrss {

// Euler-Mascheroni constant to 20 digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

struct window_pair {
  std::size_t n = 0;
  std::size_t m = 0;
};

// Throws std::domain_error unless 1 <= m < n/2.
void validate_window(const window_pair& w);

// Digamma at a positive integer: sum_{i=1}^{k-1} 1/i - gamma. Exact harmonic
// summation; no series approximation involved.
double digamma_int(long long k);

// Harmonic tail sum_{k=m}^{n} 1/k.
double harmonic_tail(std::size_t m, std::size_t n);

// Bias-correction constant
//   c = -(1 - 2m/n) psi(2m) + psi(n+1) - (2/n) sum_{i=1}^{m} psi(i+m-1).
// Depends only on (n, m).
double bias_correction_c(const window_pair& w);

// Standard normal density and distribution function.
double normal_pdf(double x);
double normal_cdf(double x);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

// Regularized incomplete beta I_x(a, b), 0 <= x <= 1.
double beta_inc(double a, double b, double x);

}  // namespace entrss
