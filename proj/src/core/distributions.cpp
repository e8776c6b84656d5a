#include "distributions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "special_functions.hpp"

namespace entrss {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error(msg);
}

// Marsaglia-Tsang gamma(shape, scale 1) for shape >= 1; the shape < 1 case is
// boosted through gamma(shape+1) * U^{1/shape}.
double sample_gamma(rng_stream& rng, double shape) {
  if (shape < 1.0) {
    const double u = rng.uniform_pos();
    return sample_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_pos();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

// Michael-Schucany-Haas inverse Gaussian sampler.
double sample_inverse_gaussian(rng_stream& rng, double mu, double lambda) {
  const double z = rng.normal();
  const double nu = z * z;
  const double x = mu + mu * mu * nu / (2.0 * lambda) -
                   (mu / (2.0 * lambda)) *
                       std::sqrt(4.0 * mu * lambda * nu + mu * mu * nu * nu);
  const double u = rng.uniform01();
  return (u <= mu / (mu + x)) ? x : mu * mu / x;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string trim_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

distribution_spec::distribution_spec(family f, double p1, double p2)
    : family_(f), p1_(p1), p2_(p2) {
  switch (f) {
    case family::normal:
      require(p2 > 0.0, "normal: sigma must be positive");
      break;
    case family::exponential:
      require(p1 > 0.0, "exponential: rate must be positive");
      break;
    case family::uniform:
      require(p2 > p1, "uniform: requires a < b");
      break;
    case family::student_t:
      require(p1 >= 1.0, "t: degrees of freedom must be >= 1");
      break;
    case family::laplace:
    case family::logistic:
      break;
    case family::gumbel:
      require(p2 > 0.0, "ev: scale must be positive");
      break;
    case family::chi_square:
      require(p1 >= 1.0, "chi: degrees of freedom must be >= 1");
      break;
    case family::log_normal:
      require(p2 > 0.0, "ln: sigma must be positive");
      break;
    case family::gamma:
      require(p1 > 0.0, "gamma: shape must be positive");
      break;
    case family::weibull:
      require(p1 > 0.0, "weibull: shape must be positive");
      break;
    case family::beta:
      require(p1 > 0.0 && p2 > 0.0, "beta: both shapes must be positive");
      break;
    case family::gexp:
      require(p1 > 0.0, "gexp: alpha must be positive");
      break;
    case family::inverse_gaussian:
      require(p1 > 0.0 && p2 > 0.0, "ig: mu and lambda must be positive");
      break;
  }
}

distribution_spec distribution_spec::parse(std::string_view text) {
  const std::string s = lower(text);
  const auto colon = s.find(':');
  const std::string name = s.substr(0, colon);
  std::vector<double> p;
  if (colon != std::string::npos) {
    std::stringstream ss(s.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t pos = 0;
      double v;
      try {
        v = std::stod(item, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("unparsable parameter '" + item + "' in '" +
                                    std::string(text) + "'");
      }
      if (pos != item.size())
        throw std::invalid_argument("unparsable parameter '" + item + "' in '" +
                                    std::string(text) + "'");
      p.push_back(v);
    }
  }
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi)
      throw std::invalid_argument("wrong parameter count for '" +
                                  std::string(text) + "'");
  };
  try {
    if (name == "norm" || name == "normal" || name == "n") {
      arity(0, 2);
      return {family::normal, p.size() > 0 ? p[0] : 0.0,
              p.size() > 1 ? p[1] : 1.0};
    }
    if (name == "exp" || name == "exponential") {
      arity(0, 1);
      return {family::exponential, p.empty() ? 1.0 : p[0], 0.0};
    }
    if (name == "unif" || name == "uniform" || name == "u") {
      arity(0, 2);
      if (p.empty()) return {family::uniform, 0.0, 1.0};
      arity(2, 2);
      return {family::uniform, p[0], p[1]};
    }
    if (name == "t") {
      arity(1, 1);
      return {family::student_t, p[0], 0.0};
    }
    if (name == "laplace" || name == "de") {
      arity(0, 0);
      return {family::laplace, 0.0, 1.0};
    }
    if (name == "logistic") {
      arity(0, 0);
      return {family::logistic, 0.0, 1.0};
    }
    if (name == "ev" || name == "gumbel") {
      // EV(0, scale); a nonzero location is not part of the studied grid.
      arity(1, 2);
      const double loc = p.size() == 2 ? p[0] : 0.0;
      const double scale = p.size() == 2 ? p[1] : p[0];
      require(loc == 0.0, "ev: location must be 0");
      return {family::gumbel, 0.0, scale};
    }
    if (name == "chi" || name == "chisq" || name == "chi2") {
      arity(1, 1);
      return {family::chi_square, p[0], 0.0};
    }
    if (name == "ln" || name == "lognormal" || name == "lognorm") {
      arity(1, 2);
      const double loc = p.size() == 2 ? p[0] : 0.0;
      const double sigma = p.size() == 2 ? p[1] : p[0];
      require(loc == 0.0, "ln: location must be 0");
      return {family::log_normal, 0.0, sigma};
    }
    if (name == "gamma") {
      arity(1, 1);
      return {family::gamma, p[0], 1.0};
    }
    if (name == "weibull") {
      arity(1, 1);
      return {family::weibull, p[0], 1.0};
    }
    if (name == "beta") {
      arity(2, 2);
      return {family::beta, p[0], p[1]};
    }
    if (name == "gexp") {
      arity(1, 1);
      return {family::gexp, p[0], 0.0};
    }
    if (name == "ig" || name == "invgauss" || name == "inversegaussian") {
      arity(2, 2);
      return {family::inverse_gaussian, p[0], p[1]};
    }
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
  throw std::invalid_argument("unknown distribution family '" + name + "'");
}

std::string distribution_spec::name() const {
  switch (family_) {
    case family::normal:
      return "norm:" + trim_number(p1_) + "," + trim_number(p2_);
    case family::exponential: return "exp:" + trim_number(p1_);
    case family::uniform:
      return "unif:" + trim_number(p1_) + "," + trim_number(p2_);
    case family::student_t: return "t:" + trim_number(p1_);
    case family::laplace: return "laplace";
    case family::logistic: return "logistic";
    case family::gumbel: return "ev:0," + trim_number(p2_);
    case family::chi_square: return "chi:" + trim_number(p1_);
    case family::log_normal: return "ln:0," + trim_number(p2_);
    case family::gamma: return "gamma:" + trim_number(p1_);
    case family::weibull: return "weibull:" + trim_number(p1_);
    case family::beta: return "beta:" + trim_number(p1_) + "," + trim_number(p2_);
    case family::gexp: return "gexp:" + trim_number(p1_);
    case family::inverse_gaussian:
      return "ig:" + trim_number(p1_) + "," + trim_number(p2_);
  }
  return "?";
}

double distribution_spec::sample_one(rng_stream& rng) const {
  switch (family_) {
    case family::normal: return p1_ + p2_ * rng.normal();
    case family::exponential: return -std::log(rng.uniform_strict()) / p1_;
    case family::uniform: return p1_ + (p2_ - p1_) * rng.uniform01();
    case family::student_t: {
      const double z = rng.normal();
      const double v = 2.0 * sample_gamma(rng, p1_ / 2.0);
      return z / std::sqrt(v / p1_);
    }
    case family::laplace: {
      const double u = rng.uniform_strict();
      return (u < 0.5) ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
    }
    case family::logistic: {
      const double u = rng.uniform_strict();
      return std::log(u / (1.0 - u));
    }
    case family::gumbel: return -p2_ * std::log(-std::log(rng.uniform_strict()));
    case family::chi_square: return 2.0 * sample_gamma(rng, p1_ / 2.0);
    case family::log_normal: return std::exp(p2_ * rng.normal());
    case family::gamma: return sample_gamma(rng, p1_);
    case family::weibull:
      return std::pow(-std::log(rng.uniform_strict()), 1.0 / p1_);
    case family::beta: {
      const double x = sample_gamma(rng, p1_);
      const double y = sample_gamma(rng, p2_);
      return x / (x + y);
    }
    case family::gexp:
      return -std::log1p(-std::pow(rng.uniform_strict(), 1.0 / p1_));
    case family::inverse_gaussian:
      return sample_inverse_gaussian(rng, p1_, p2_);
  }
  return 0.0;
}

std::vector<double> distribution_spec::sample(std::size_t n, std::uint64_t seed,
                                              std::uint64_t stream) const {
  rng_stream rng(seed, stream);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = sample_one(rng);
  return out;
}

double distribution_spec::cdf(double x) const {
  switch (family_) {
    case family::normal: return normal_cdf((x - p1_) / p2_);
    case family::exponential: return x <= 0.0 ? 0.0 : -std::expm1(-p1_ * x);
    case family::uniform:
      if (x <= p1_) return 0.0;
      if (x >= p2_) return 1.0;
      return (x - p1_) / (p2_ - p1_);
    case family::student_t: {
      const double nu = p1_;
      const double t2 = x * x;
      const double ib = beta_inc(nu / 2.0, 0.5, nu / (nu + t2));
      return x >= 0.0 ? 1.0 - 0.5 * ib : 0.5 * ib;
    }
    case family::laplace:
      return x < 0.0 ? 0.5 * std::exp(x) : 1.0 - 0.5 * std::exp(-x);
    case family::logistic: return 1.0 / (1.0 + std::exp(-x));
    case family::gumbel: return std::exp(-std::exp(-x / p2_));
    case family::chi_square:
      return x <= 0.0 ? 0.0 : gamma_p(p1_ / 2.0, x / 2.0);
    case family::log_normal:
      return x <= 0.0 ? 0.0 : normal_cdf(std::log(x) / p2_);
    case family::gamma: return x <= 0.0 ? 0.0 : gamma_p(p1_, x);
    case family::weibull:
      return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x, p1_));
    case family::beta:
      if (x <= 0.0) return 0.0;
      if (x >= 1.0) return 1.0;
      return beta_inc(p1_, p2_, x);
    case family::gexp:
      return x <= 0.0 ? 0.0 : std::pow(-std::expm1(-x), p1_);
    case family::inverse_gaussian:
      return inverse_gaussian_cdf(x, p1_, p2_);
  }
  return 0.0;
}

std::optional<double> distribution_spec::true_entropy() const {
  switch (family_) {
    case family::exponential: return 1.0 - std::log(p1_);
    case family::normal:
      return 0.5 * std::log(2.0 * kPi * std::exp(1.0) * p2_ * p2_);
    case family::uniform: return std::log(p2_ - p1_);
    default: return std::nullopt;
  }
}

double sample_sigma(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw std::domain_error("sample_sigma requires n >= 2");
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double sigma = std::sqrt(ss / static_cast<double>(n));
  if (!(sigma > 0.0))
    throw degenerate_sample_error("sample_sigma: all values equal");
  return sigma;
}

normal_fit fit_normal(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw std::domain_error("fit_normal requires n >= 2");
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  return {mean, sample_sigma(x)};
}

inverse_gaussian_fit fit_inverse_gaussian(std::span<const double> x) {
  for (double v : x)
    if (!(v > 0.0))
      throw std::domain_error("fit_inverse_gaussian requires positive data");
  const auto nf = fit_normal(x);
  return {nf.mu, nf.mu * nf.mu * nf.mu / (nf.sigma * nf.sigma)};
}

inverse_gaussian_fit fit_inverse_gaussian_mle(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw std::domain_error("fit_inverse_gaussian_mle requires n >= 2");
  double mean = 0.0;
  double recip = 0.0;
  for (double v : x) {
    if (!(v > 0.0))
      throw std::domain_error("fit_inverse_gaussian_mle requires positive data");
    mean += v;
    recip += 1.0 / v;
  }
  mean /= static_cast<double>(n);
  recip /= static_cast<double>(n);
  const double inv_lambda = recip - 1.0 / mean;
  if (!(inv_lambda > 0.0))
    throw degenerate_sample_error("fit_inverse_gaussian_mle: degenerate sample");
  return {mean, 1.0 / inv_lambda};
}

double inverse_gaussian_cdf(double x, double mu, double lambda) {
  if (!(mu > 0.0) || !(lambda > 0.0))
    throw std::domain_error("inverse_gaussian_cdf: mu, lambda must be positive");
  if (x <= 0.0) return 0.0;
  const double s = std::sqrt(lambda / x);
  return normal_cdf(s * (x / mu - 1.0)) +
         std::exp(2.0 * lambda / mu) * normal_cdf(-s * (x / mu + 1.0));
}

}  // namespace entrss
