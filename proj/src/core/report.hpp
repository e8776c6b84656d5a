#pragma once

#include <string>
#include <variant>
#include <vector>

namespace entrss {

// A small column-oriented result table. Monte Carlo results use the fixed
// schema kind,n,m,w,alpha,replicates,seed,value,std_error,bias,sd,rmse,power;
// other commands (smooth-demo) define their own columns. Comments render as
// leading '#' lines in CSV and as a "comments" array in JSON.
struct report {
  using cell = std::variant<std::monostate, double, long long, std::string>;

  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<cell>> rows;

  std::vector<cell>& add_row() {
    rows.emplace_back(columns.size());
    return rows.back();
  }
  void set(std::vector<cell>& row, const std::string& column, cell value);
  // Numeric cell access; throws std::domain_error for empty/string cells or
  // unknown columns.
  double value_at(std::size_t row, const std::string& column) const;
};

// Standard Monte Carlo column set.
report make_mc_report();

// Full-precision CSV (17 significant digits for doubles).
std::string to_csv(const report& r);
std::string to_json(const report& r);

}  // namespace entrss
