// entrss command-line tool. Talks to the library exclusively through the
// C API in entrss/entrss.h; every subcommand emits a CSV or JSON report.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entrss/entrss.h"

namespace {

struct output_options {
  std::string format = "csv";
  std::string path;
};

void add_output_flags(CLI::App* cmd, output_options& out) {
  cmd->add_option("--output", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", out.path, "Write the report to a file");
}

struct mc_flags {
  long long reps = 10000;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  bool seed_set = false;
  long long n = 0;
  long long m = 0;
  long long w = 3;
  std::string mode = "full";
  int threads = 0;
  bool jitter = false;
};

void add_seed_flag(CLI::App* cmd, mc_flags& f, bool required) {
  auto* opt = cmd->add_option("--seed", f.seed, "Master RNG seed");
  if (required) opt->required();
  opt->each([&f](const std::string&) { f.seed_set = true; });
}

entrss_mc_config to_config(const mc_flags& f) {
  entrss_mc_config cfg{};
  cfg.replicates = f.reps;
  cfg.alpha = f.alpha;
  cfg.seed = f.seed;
  cfg.n = f.n;
  cfg.m = f.m;
  cfg.w = f.w;
  cfg.mode = (f.mode == "bootstrap") ? 1 : 0;
  cfg.threads = f.threads;
  cfg.jitter = f.jitter ? 1 : 0;
  return cfg;
}

// One real per line; '#' starts a comment; blank lines are skipped.
std::vector<double> read_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::vector<double> data;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const char* s = line.c_str();
    char* end = nullptr;
    while (*s == ' ' || *s == '\t' || *s == '\r') ++s;
    if (*s == '\0') continue;
    const double v = std::strtod(s, &end);
    while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
    if (!end || *end != '\0')
      throw std::runtime_error("unparsable value at " + path + ":" +
                               std::to_string(lineno));
    data.push_back(v);
  }
  if (data.empty()) throw std::runtime_error("input file '" + path + "' is empty");
  return data;
}

int emit_report(entrss_report* rep, const output_options& out) {
  char* text = nullptr;
  const entrss_status rc = out.format == "json" ? entrss_report_json(rep, &text)
                                                : entrss_report_csv(rep, &text);
  if (rc != ENTRSS_OK) {
    std::cerr << "error: " << entrss_last_error() << "\n";
    entrss_report_free(rep);
    return 1;
  }
  int result = 0;
  if (out.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write '" << out.path << "'\n";
      result = 1;
    } else {
      f << text;
    }
  }
  entrss_string_free(text);
  entrss_report_free(rep);
  return result;
}

int run_or_fail(entrss_status rc, entrss_report* rep,
                const output_options& out) {
  if (rc != ENTRSS_OK) {
    std::cerr << "error: " << entrss_last_error() << "\n";
    return 1;
  }
  return emit_report(rep, out);
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoll(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spacing-based entropy estimation and normality testing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(entrss_version()));

  // ---- estimate ----
  struct {
    std::string input;
    std::string estimator;
    mc_flags mc;
    output_options out;
    bool n_from_data = false;
  } est;
  auto* c_est = app.add_subcommand("estimate", "Entropy estimate for a data file");
  c_est->add_option("--input", est.input, "Data file, one value per line")
      ->required();
  c_est->add_option("--estimator", est.estimator, "hv|hve|hc|he|hw|hz1|hz2|hve_r|hw_r")
      ->required();
  c_est->add_option("--m", est.mc.m, "Window size (default: [sqrt(n)+0.5])");
  c_est->add_option("--w", est.mc.w, "Smoothing width (odd, default 3)");
  c_est->add_option("--mode", est.mc.mode, "full|bootstrap")
      ->check(CLI::IsMember({"full", "bootstrap"}));
  c_est->add_flag("--n-from-data", est.n_from_data,
                  "Take n from the input length (always the case)");
  c_est->add_flag("--jitter", est.mc.jitter, "Break ties with 1e-9*range noise");
  add_seed_flag(c_est, est.mc, false);
  add_output_flags(c_est, est.out);

  // ---- critical-values ----
  struct {
    std::string stat;
    mc_flags mc;
    output_options out;
  } cv;
  auto* c_cv = app.add_subcommand("critical-values",
                                  "Monte Carlo critical value of a statistic");
  c_cv->add_option("--stat", cv.stat, "tv|tve|tc|tw|tz1|tz2|tve_r|tw_r|ks|ad")
      ->required();
  c_cv->add_option("--n", cv.mc.n, "Sample size")->required();
  c_cv->add_option("--m", cv.mc.m, "Window size (default: testing window)");
  c_cv->add_option("--w", cv.mc.w, "Smoothing width");
  c_cv->add_option("--alpha", cv.mc.alpha, "Significance level");
  c_cv->add_option("--reps", cv.mc.reps, "Monte Carlo replicates");
  c_cv->add_option("--threads", cv.mc.threads, "Worker threads (0 = all)");
  add_seed_flag(c_cv, cv.mc, true);
  add_output_flags(c_cv, cv.out);

  // ---- power ----
  struct {
    std::string stat;
    std::string alt;
    mc_flags mc;
    output_options out;
  } pw;
  auto* c_pw = app.add_subcommand("power", "Monte Carlo power against an alternative");
  c_pw->add_option("--stat", pw.stat, "Test statistic")->required();
  c_pw->add_option("--alt", pw.alt, "Alternative, family:params (e.g. exp:1)")
      ->required();
  c_pw->add_option("--n", pw.mc.n, "Sample size")->required();
  c_pw->add_option("--m", pw.mc.m, "Window size (default: testing window)");
  c_pw->add_option("--w", pw.mc.w, "Smoothing width");
  c_pw->add_option("--alpha", pw.mc.alpha, "Significance level");
  c_pw->add_option("--reps", pw.mc.reps, "Monte Carlo replicates");
  c_pw->add_option("--threads", pw.mc.threads, "Worker threads");
  add_seed_flag(c_pw, pw.mc, true);
  add_output_flags(c_pw, pw.out);

  // ---- rmse-table ----
  struct {
    std::string estimator;
    std::string alt;
    mc_flags mc;
    output_options out;
  } rt;
  auto* c_rt = app.add_subcommand("rmse-table",
                                  "RMSE/SD/bias of an estimator under a distribution");
  c_rt->add_option("--estimator", rt.estimator, "Estimator")->required();
  c_rt->add_option("--alt", rt.alt, "Sampled distribution, family:params")
      ->required();
  c_rt->add_option("--n", rt.mc.n, "Sample size")->required();
  c_rt->add_option("--m", rt.mc.m, "Window size (default: [sqrt(n)+0.5])");
  c_rt->add_option("--w", rt.mc.w, "Smoothing width");
  c_rt->add_option("--reps", rt.mc.reps, "Monte Carlo replicates");
  c_rt->add_option("--threads", rt.mc.threads, "Worker threads");
  add_seed_flag(c_rt, rt.mc, true);
  add_output_flags(c_rt, rt.out);

  // ---- mse-trend ----
  struct {
    std::string estimator;
    std::string alt;
    std::string ns = "10,20,30,40,50";
    double b = 1.0;
    mc_flags mc;
    output_options out;
  } mt;
  auto* c_mt = app.add_subcommand("mse-trend", "MSE * n^b across sample sizes");
  c_mt->add_option("--estimator", mt.estimator, "Estimator")->required();
  c_mt->add_option("--alt", mt.alt, "Sampled distribution")->required();
  c_mt->add_option("--ns", mt.ns, "Comma-separated sample sizes");
  c_mt->add_option("--b", mt.b, "Scaling exponent");
  c_mt->add_option("--reps", mt.mc.reps, "Monte Carlo replicates");
  c_mt->add_option("--threads", mt.mc.threads, "Worker threads");
  add_seed_flag(c_mt, mt.mc, true);
  add_output_flags(c_mt, mt.out);

  // ---- normality-test ----
  struct {
    std::string input;
    std::string stat;
    mc_flags mc;
    output_options out;
  } nt;
  auto* c_nt = app.add_subcommand("normality-test",
                                  "Entropy-based normality test of a data file");
  c_nt->add_option("--input", nt.input, "Data file")->required();
  c_nt->add_option("--stat", nt.stat, "Test statistic")->required();
  c_nt->add_option("--m", nt.mc.m, "Window size (default: testing window)");
  c_nt->add_option("--w", nt.mc.w, "Smoothing width");
  c_nt->add_option("--alpha", nt.mc.alpha, "Significance level");
  c_nt->add_option("--reps", nt.mc.reps, "Monte Carlo replicates");
  c_nt->add_option("--mode", nt.mc.mode, "full|bootstrap for RSS statistics")
      ->check(CLI::IsMember({"full", "bootstrap"}));
  c_nt->add_flag("--jitter", nt.mc.jitter, "Break ties with 1e-9*range noise");
  c_nt->add_option("--threads", nt.mc.threads, "Worker threads");
  add_seed_flag(c_nt, nt.mc, true);
  add_output_flags(c_nt, nt.out);

  // ---- real-data ----
  struct {
    std::string stat = "tw_r";
    std::string n_fits;
    mc_flags mc;
    output_options out;
  } rd;
  auto* c_rd = app.add_subcommand("real-data",
                                  "Repair-times pipeline: fits, KS/AD, p-value, powers");
  c_rd->add_option("--stat", rd.stat, "Test statistic (default tw_r)");
  c_rd->add_option("--m", rd.mc.m, "Window size (default: testing window of 45)");
  c_rd->add_option("--w", rd.mc.w, "Smoothing width");
  c_rd->add_option("--alpha", rd.mc.alpha, "Significance level");
  c_rd->add_option("--reps", rd.mc.reps, "Monte Carlo replicates");
  c_rd->add_option("--n-fit", rd.n_fits,
                   "Comma-separated simulation sizes for the power rows");
  c_rd->add_option("--threads", rd.mc.threads, "Worker threads");
  add_seed_flag(c_rd, rd.mc, true);
  add_output_flags(c_rd, rd.out);

  // ---- smooth-demo ----
  struct {
    mc_flags mc;
    output_options out;
  } sd;
  auto* c_sd = app.add_subcommand("smooth-demo",
                                  "Sorted N(0,1) sample and its smoothed path");
  c_sd->add_option("--n", sd.mc.n, "Sample size")->required();
  c_sd->add_option("--w", sd.mc.w, "Smoothing width");
  add_seed_flag(c_sd, sd.mc, true);
  add_output_flags(c_sd, sd.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    entrss_report* rep = nullptr;
    if (c_est->parsed()) {
      if ((est.mc.mode == "bootstrap" || est.mc.jitter) && !est.mc.seed_set) {
        std::cerr << "error: --seed is required with --mode bootstrap or --jitter\n";
        return 2;
      }
      const auto data = read_data_file(est.input);
      const auto cfg = to_config(est.mc);
      const entrss_status rc = entrss_estimate(est.estimator.c_str(), data.data(), data.size(), &cfg,
                          &rep);
      return run_or_fail(rc, rep, est.out);
    }
    if (c_cv->parsed()) {
      const auto cfg = to_config(cv.mc);
      const entrss_status rc = entrss_mc_critical_value(cv.stat.c_str(), &cfg, &rep);
      return run_or_fail(rc, rep, cv.out);
    }
    if (c_pw->parsed()) {
      const auto cfg = to_config(pw.mc);
      const entrss_status rc = entrss_mc_power(pw.stat.c_str(), pw.alt.c_str(), &cfg, &rep);
      return run_or_fail(rc, rep, pw.out);
    }
    if (c_rt->parsed()) {
      const auto cfg = to_config(rt.mc);
      const entrss_status rc = entrss_mc_estimator_error(rt.estimator.c_str(),
                                                   rt.alt.c_str(), &cfg, &rep);
      return run_or_fail(rc, rep, rt.out);
    }
    if (c_mt->parsed()) {
      const auto ns = parse_int_list(mt.ns);
      const auto cfg = to_config(mt.mc);
      const entrss_status rc = entrss_mc_mse_trend(mt.estimator.c_str(), mt.alt.c_str(), ns.data(),
                              ns.size(), mt.b, &cfg, &rep);
      return run_or_fail(rc, rep, mt.out);
    }
    if (c_nt->parsed()) {
      const auto data = read_data_file(nt.input);
      mc_flags flags = nt.mc;
      // RSS statistics on a plain data file need a resampled grid.
      if ((nt.stat == "tve_r" || nt.stat == "tw_r") && flags.mode == "full")
        flags.mode = "bootstrap";
      const auto cfg = to_config(flags);
      const entrss_status rc = entrss_normality_test(nt.stat.c_str(), data.data(),
                                               data.size(), &cfg, &rep);
      return run_or_fail(rc, rep, nt.out);
    }
    if (c_rd->parsed()) {
      const auto cfg = to_config(rd.mc);
      std::vector<long long> fits;
      if (!rd.n_fits.empty()) fits = parse_int_list(rd.n_fits);
      const entrss_status rc = entrss_real_data(rd.stat.c_str(), &cfg,
                           fits.empty() ? nullptr : fits.data(), fits.size(),
                           &rep);
      return run_or_fail(rc, rep, rd.out);
    }
    if (c_sd->parsed()) {
      const entrss_status rc = entrss_smooth_demo(static_cast<size_t>(sd.mc.n),
                             static_cast<int>(sd.mc.w), sd.mc.seed, &rep);
      return run_or_fail(rc, rep, sd.out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
