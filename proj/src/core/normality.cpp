#include "normality.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "distributions.hpp"
#include "errors.hpp"
#include "special_functions.hpp"

namespace entrss {

std::optional<test_kind> parse_test(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "tv") return test_kind::tv;
  if (s == "tve") return test_kind::tve;
  if (s == "tc") return test_kind::tc;
  if (s == "tw") return test_kind::tw;
  if (s == "tz1") return test_kind::tz1;
  if (s == "tz2") return test_kind::tz2;
  if (s == "tve_r" || s == "tver") return test_kind::tve_r;
  if (s == "tw_r" || s == "twr") return test_kind::tw_r;
  if (s == "ks") return test_kind::ks;
  if (s == "ad") return test_kind::ad;
  return std::nullopt;
}

std::string_view test_name(test_kind kind) {
  switch (kind) {
    case test_kind::tv: return "tv";
    case test_kind::tve: return "tve";
    case test_kind::tc: return "tc";
    case test_kind::tw: return "tw";
    case test_kind::tz1: return "tz1";
    case test_kind::tz2: return "tz2";
    case test_kind::tve_r: return "tve_r";
    case test_kind::tw_r: return "tw_r";
    case test_kind::ks: return "ks";
    case test_kind::ad: return "ad";
  }
  return "?";
}

bool is_rss_test(test_kind kind) {
  return kind == test_kind::tve_r || kind == test_kind::tw_r;
}

bool is_entropy_test(test_kind kind) {
  return kind != test_kind::ks && kind != test_kind::ad;
}

bool rejects_low(test_kind kind) { return is_entropy_test(kind); }

testing_window_result testing_window(std::size_t n) {
  if (n < 3) throw std::domain_error("testing_window requires n >= 3");
  if (n <= 8) return {1, false};
  if (n <= 15) return {2, false};
  if (n <= 35) return {3, false};
  if (n <= 60) return {4, false};
  if (n <= 80) return {5, false};
  if (n <= 100) return {6, false};
  return {6, true};
}

double test_statistic_plain(test_kind kind, const sorted_sample& s,
                            std::size_t m) {
  const double sigma = sample_sigma(s.values());
  switch (kind) {
    case test_kind::tv: return std::exp(hv(s, m)) / sigma;
    case test_kind::tve: return std::exp(hve(s, m)) / sigma;
    case test_kind::tc: return std::exp(hc(s, m)) / sigma;
    case test_kind::tw: return std::exp(hw(s, m)) / sigma;
    case test_kind::tz1: return std::exp(hz(s, m, 1)) / sigma;
    case test_kind::tz2: return std::exp(hz(s, m, 2)) / sigma;
    case test_kind::ks:
    case test_kind::ad: {
      const auto fit = fit_normal(s.values());
      const cdf_fn cdf = [fit](double x) {
        return normal_cdf((x - fit.mu) / fit.sigma);
      };
      return kind == test_kind::ks ? ks_statistic(s, cdf) : ad_statistic(s, cdf);
    }
    default:
      throw std::domain_error("statistic requires an RSS diagonal input");
  }
}

double test_statistic_rss(test_kind kind, const rss_diagonal& d, std::size_t m) {
  const std::size_t n = d.size();
  const double sigma = sample_sigma(d.values);
  if (kind == test_kind::tve_r) return std::exp(hve_r(d, m)) / sigma;
  if (kind != test_kind::tw_r)
    throw std::domain_error("statistic requires a plain sample input");
  // Vasicek normalization (n/2m); the critical-value tables are tabulated for
  // this constant rather than for exp(c).
  validate_window({n, m});
  const std::span<const double> y(d.values);
  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t hi = std::min(i + m, n);
    const std::size_t lo = (i > m) ? i - m : 1;
    const double sp = y[hi - 1] - y[lo - 1];
    if (!(sp > 0.0))
      throw tied_spacing_error(i, "tw_r: zero spacing at i=" + std::to_string(i));
    acc += std::log(sp);
  }
  const double geomean = std::exp(acc / static_cast<double>(n));
  return static_cast<double>(n) / (2.0 * static_cast<double>(m)) * geomean /
         sigma;
}

double ks_statistic(const sorted_sample& s, const cdf_fn& cdf) {
  const std::size_t n = s.size();
  const auto x = s.values();
  double d = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double f = cdf(x[i - 1]);
    if (f < 0.0 || f > 1.0)
      throw std::domain_error("ks_statistic: cdf value outside [0,1]");
    const double upper = static_cast<double>(i) / static_cast<double>(n) - f;
    const double lower = f - static_cast<double>(i - 1) / static_cast<double>(n);
    d = std::max(d, std::max(upper, lower));
  }
  return d;
}

double ad_statistic(const sorted_sample& s, const cdf_fn& cdf) {
  const std::size_t n = s.size();
  const auto x = s.values();
  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double fi = cdf(x[i - 1]);
    const double fr = cdf(x[n - i]);
    if (!(fi > 0.0) || !(fr < 1.0))
      throw std::domain_error("ad_statistic: cdf hit 0 or 1 at a sample point");
    acc += static_cast<double>(2 * i - 1) * (std::log(fi) + std::log1p(-fr));
  }
  return -static_cast<double>(n) - acc / static_cast<double>(n);
}

test_outcome make_outcome(test_kind kind, double statistic, double critical,
                          double alpha, std::size_t n, std::size_t m) {
  test_outcome out;
  out.kind = kind;
  out.statistic = statistic;
  out.critical_value = critical;
  out.alpha = alpha;
  out.n = n;
  out.m = m;
  out.reject = rejects_low(kind) ? statistic < critical : statistic > critical;
  return out;
}

}  // namespace entrss
