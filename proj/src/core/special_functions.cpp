#include "special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace entrss {

void validate_window(const window_pair& w) {
  if (w.m < 1) throw std::domain_error("window size m must be positive");
  if (2 * w.m >= w.n)
    throw std::domain_error("window size m=" + std::to_string(w.m) +
                            " must be smaller than n/2 for n=" +
                            std::to_string(w.n));
}

double digamma_int(long long k) {
  if (k <= 0) throw std::domain_error("digamma_int requires a positive integer");
  double h = 0.0;
  for (long long i = k - 1; i >= 1; --i) h += 1.0 / static_cast<double>(i);
  return h - kEulerGamma;
}

double harmonic_tail(std::size_t m, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = n; k >= m && k > 0; --k) s += 1.0 / static_cast<double>(k);
  return s;
}

double bias_correction_c(const window_pair& w) {
  validate_window(w);
  const double n = static_cast<double>(w.n);
  const double m = static_cast<double>(w.m);
  double tail = 0.0;
  for (std::size_t i = 1; i <= w.m; ++i)
    tail += digamma_int(static_cast<long long>(i + w.m - 1));
  return -(1.0 - 2.0 * m / n) * digamma_int(static_cast<long long>(2 * w.m)) +
         digamma_int(static_cast<long long>(w.n + 1)) - (2.0 / n) * tail;
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) * 0.39894228040143267794;
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * 0.70710678118654752440);
}

namespace {

// Continued fraction for the incomplete gamma Q(a,x), Lentz's method.
double gamma_q_cf(double a, double x) {
  const double eps = 1e-15;
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// Series for the incomplete gamma P(a,x).
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for the incomplete beta, Lentz's method.
double betacf(double a, double b, double x) {
  const double eps = 1e-15;
  const double tiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace

double gamma_p(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw std::domain_error("gamma_p: a > 0, x >= 0 required");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double beta_inc(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0) throw std::domain_error("beta_inc: a, b > 0 required");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) -
                                std::lgamma(b) + a * std::log(x) +
                                b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

}  // namespace entrss
