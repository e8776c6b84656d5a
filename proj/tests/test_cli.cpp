// End-to-end checks of the command-line tool. The binary path comes in via
// ENTRSS_CLI_PATH (set by CMake); commands run through popen.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef ENTRSS_CLI_PATH
#error "ENTRSS_CLI_PATH must be defined"
#endif

namespace {

struct run_result {
  int exit_code = -1;
  std::string output;
};

run_result run_cli(const std::string& args) {
  const std::string cmd = std::string(ENTRSS_CLI_PATH) + " " + args + " 2>&1";
  run_result res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string write_temp_data() {
  const std::string path = "cli_test_data.txt";
  std::ofstream f(path);
  f << "# comment line\n";
  for (int i = 1; i <= 12; ++i) f << 0.37 * i * i << "\n";
  return path;
}

}  // namespace

TEST_CASE("estimate emits one csv row with a header comment") {
  const auto path = write_temp_data();
  const auto res = run_cli("estimate --input " + path + " --estimator hw --m 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("# seed=0 n=12 m=2 w=3 mode=full") != std::string::npos);
  CHECK(res.output.find("kind,n,m,w,alpha,replicates,seed,value") !=
        std::string::npos);
  CHECK(res.output.find("\nhw,12,2,3,") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  const auto res = run_cli("estimate --estimator hv");
  CHECK(res.exit_code == 2);  // missing --input
  const auto unknown = run_cli("no-such-command");
  CHECK(unknown.exit_code == 2);
  const auto badflag = run_cli("critical-values --stat tv --n 10 --seed 1 --bogus 3");
  CHECK(badflag.exit_code == 2);
}

TEST_CASE("computation errors exit with 1 and name the module error") {
  const std::string path = "cli_tied_data.txt";
  {
    std::ofstream f(path);
    for (int i = 0; i < 10; ++i) f << (i < 5 ? 1.0 : 2.0) << "\n";
  }
  const auto res = run_cli("estimate --input " + path + " --estimator hv --m 1");
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("zero spacing") != std::string::npos);

  // --jitter with a seed resolves the ties
  const auto ok = run_cli("estimate --input " + path +
                          " --estimator hv --m 1 --jitter --seed 4");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("missing seed for randomized runs is a usage error") {
  const auto path = write_temp_data();
  const auto res = run_cli("estimate --input " + path +
                           " --estimator hw_r --mode bootstrap");
  CHECK(res.exit_code == 2);
  const auto cv = run_cli("critical-values --stat tv --n 10");
  CHECK(cv.exit_code == 2);
}

TEST_CASE("critical-values reruns are byte identical across thread counts") {
  const std::string args =
      "critical-values --stat tve_r --n 10 --m 3 --reps 400 --seed 9";
  const auto a = run_cli(args + " --threads 1");
  const auto b = run_cli(args + " --threads 2");
  const auto c = run_cli(args + " --threads 2");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(b.output == c.output);
}

TEST_CASE("smooth demo emits a monotone smoothed column") {
  const auto res = run_cli("smooth-demo --n 20 --w 3 --seed 5");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("index,raw,smoothed") != std::string::npos);
  double prev = -1e300;
  std::size_t pos = res.output.find("index,raw,smoothed");
  std::istringstream rows(res.output.substr(pos));
  std::string line;
  std::getline(rows, line);  // header
  int count = 0;
  while (std::getline(rows, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double sm = std::strtod(line.c_str() + c2 + 1, nullptr);
    CHECK(sm >= prev);
    prev = sm;
    ++count;
  }
  CHECK(count == 20);
}

TEST_CASE("json output carries the same values as csv") {
  const auto path = write_temp_data();
  const std::string base =
      "estimate --input " + path + " --estimator hve --m 2 ";
  const auto csv = run_cli(base + "--output csv");
  const auto json = run_cli(base + "--output json");
  CHECK(csv.exit_code == 0);
  CHECK(json.exit_code == 0);
  // extract value from csv row (8th column) and find it inside the json
  std::istringstream rows(csv.output);
  std::string line;
  std::string row;
  while (std::getline(rows, line))
    if (!line.empty() && line[0] != '#' && line.find("kind,") != 0) row = line;
  std::size_t start = 0;
  for (int i = 0; i < 7; ++i) start = row.find(',', start) + 1;
  const std::string value = row.substr(start, row.find(',', start) - start);
  const double csv_value = std::strtod(value.c_str(), nullptr);
  // json parse-free check: locate "value": and compare numerically
  const auto vpos = json.output.find("\"value\":");
  REQUIRE(vpos != std::string::npos);
  const double json_value =
      std::strtod(json.output.c_str() + vpos + 8, nullptr);
  CHECK(csv_value == json_value);
}

TEST_CASE("normality-test emits statistic, critical value, p and verdict") {
  const std::string path = "cli_skewed.txt";
  {
    std::ofstream f(path);
    for (int i = 1; i <= 25; ++i) f << 0.05 * i * i << "\n";
  }
  const auto res = run_cli("normality-test --input " + path +
                           " --stat tw --reps 400 --seed 12");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("statistic:tw") != std::string::npos);
  CHECK(res.output.find("critical_value") != std::string::npos);
  CHECK(res.output.find("p_value") != std::string::npos);
  CHECK(res.output.find("reject") != std::string::npos);
}

TEST_CASE("real-data pipeline emits fits, baselines, p-value and power rows") {
  const auto res = run_cli("real-data --stat tw_r --m 4 --reps 300 --seed 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("# seed=3 n=45 m=4 w=3 mode=bootstrap") !=
        std::string::npos);
  for (const char* kind :
       {"fit_mu", "fit_sigma", "fit_lambda_moment", "fit_lambda_mle", "ks_ig",
        "ad_ig", "statistic:tw_r", "p_value", "power:tw_r"}) {
    CAPTURE(kind);
    CHECK(res.output.find(kind) != std::string::npos);
  }
  // tw_r power row defaults to the n=15 column only
  CHECK(res.output.find("power:tw_r,15,") != std::string::npos);
  CHECK(res.output.find("power:tw_r,45,") == std::string::npos);
}

TEST_CASE("write to --out file") {
  const auto path = write_temp_data();
  const auto res = run_cli("estimate --input " + path +
                           " --estimator hv --m 2 --out cli_out.csv");
  CHECK(res.exit_code == 0);
  std::ifstream f("cli_out.csv");
  REQUIRE(f.good());
  std::string first;
  std::getline(f, first);
  CHECK(first.rfind("# seed=", 0) == 0);
  std::remove("cli_out.csv");
}
