#pragma once

#include "dunkl/setup_file.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dunkl::cli {

using Json = nlohmann::ordered_json;

/// Everything that determines a run; serialized into every report.
struct RunConfig {
  std::string subcommand;
  std::string setup_path;
  SetupFile setup;
  std::uint64_t seed = 1;
  std::string out = ".";
  std::optional<double> tol;
  Json params = Json::object();

  double tolerance(double fallback) const { return tol.value_or(fallback); }
  Json to_json() const;
};

struct Assertion {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// CSV table with fixed-precision numeric cells.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  Table& row();
  Table& cell(const std::string& text);
  Table& cell(double value);
  Table& cell(long long value);
  Table& cell(int value) { return cell(static_cast<long long>(value)); }
  Table& cell(std::size_t value) { return cell(static_cast<long long>(value)); }

  std::string str() const;
  bool empty() const { return rows_.empty(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string format_number(double value);
std::string format_point(const std::vector<double>& x);

/// Output of one subcommand: `<name>.csv`, `<name>.json`, plus a summary.
struct Report {
  explicit Report(std::string n) : name(std::move(n)) {}

  std::string name;
  Table table{std::vector<std::string>{}};
  /// Further tables, written as `<name>_<suffix>.csv`.
  std::vector<std::pair<std::string, Table>> extra;
  Json json = Json::object();
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;

  /// Records value <= bound (NaN fails).
  void check(const std::string& what, double value, double bound);
  bool passed() const;
};

/// Writes the CSV and JSON files and `<name>_summary.txt`; returns the summary text.
std::string write_report(const RunConfig& config, const Report& report, double seconds);

}  // namespace dunkl::cli
