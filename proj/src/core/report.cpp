#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace entrss {

namespace {
std::size_t column_index(const report& r, const std::string& column) {
  const auto it = std::find(r.columns.begin(), r.columns.end(), column);
  if (it == r.columns.end())
    throw std::domain_error("unknown report column '" + column + "'");
  return static_cast<std::size_t>(it - r.columns.begin());
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

void report::set(std::vector<cell>& row, const std::string& column, cell value) {
  row[column_index(*this, column)] = std::move(value);
}

double report::value_at(std::size_t row, const std::string& column) const {
  const auto& c = rows.at(row).at(column_index(*this, column));
  if (std::holds_alternative<double>(c)) return std::get<double>(c);
  if (std::holds_alternative<long long>(c))
    return static_cast<double>(std::get<long long>(c));
  throw std::domain_error("report cell '" + column + "' is not numeric");
}

report make_mc_report() {
  report r;
  r.columns = {"kind", "n",     "m",         "w",    "alpha", "replicates",
               "seed", "value", "std_error", "bias", "sd",    "rmse",
               "power"};
  return r;
}

std::string to_csv(const report& r) {
  std::string out;
  for (const auto& c : r.comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    if (i) out += ',';
    out += r.columns[i];
  }
  out += '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      const auto& c = row[i];
      if (std::holds_alternative<double>(c))
        out += format_double(std::get<double>(c));
      else if (std::holds_alternative<long long>(c))
        out += std::to_string(std::get<long long>(c));
      else if (std::holds_alternative<std::string>(c))
        out += std::get<std::string>(c);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const report& r) {
  nlohmann::json j;
  j["comments"] = r.comments;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& c = row[i];
      if (std::holds_alternative<double>(c))
        obj[r.columns[i]] = std::get<double>(c);
      else if (std::holds_alternative<long long>(c))
        obj[r.columns[i]] = std::get<long long>(c);
      else if (std::holds_alternative<std::string>(c))
        obj[r.columns[i]] = std::get<std::string>(c);
    }
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

}  // namespace entrss
