#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dunkl::cli {

Json RunConfig::to_json() const {
  Json j;
  j["subcommand"] = subcommand;
  j["setup_file"] = setup_path;
  j["setup"] = {{"name", setup.name},
                {"multiplicities", setup.multiplicities},
                {"grid", {{"radius", setup.grid.radius}, {"half_points", setup.grid.half_points}}}};
  j["seed"] = seed;
  j["tol"] = tol ? Json(*tol) : Json(nullptr);
  j["params"] = params;
  return j;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", value);
  return buf;
}

std::string format_point(const std::vector<double>& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ';';
    s += format_number(x[i]);
  }
  return s;
}

Table& Table::row() {
  rows_.emplace_back();
  return *this;
}

Table& Table::cell(const std::string& text) {
  rows_.back().push_back(text);
  return *this;
}

Table& Table::cell(double value) { return cell(format_number(value)); }

Table& Table::cell(long long value) { return cell(std::to_string(value)); }

std::string Table::str() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return os.str();
}

void Report::check(const std::string& what, double value, double bound) {
  assertions.push_back({what, value, bound, value <= bound});
}

bool Report::passed() const {
  for (const auto& a : assertions)
    if (!a.pass) return false;
  return true;
}

std::string write_report(const RunConfig& config, const Report& report, double seconds) {
  namespace fs = std::filesystem;
  const fs::path dir(config.out);
  fs::create_directories(dir);

  Json doc;
  doc["config"] = config.to_json();
  doc["results"] = report.json;
  Json checks = Json::array();
  for (const auto& a : report.assertions)
    checks.push_back({{"name", a.name}, {"value", a.value}, {"bound", a.bound}, {"pass", a.pass}});
  doc["assertions"] = checks;
  doc["pass"] = report.passed();

  std::ofstream(dir / (report.name + ".json")) << doc.dump(2) << '\n';
  if (!report.table.empty()) std::ofstream(dir / (report.name + ".csv")) << report.table.str();
  for (const auto& [suffix, t] : report.extra)
    std::ofstream(dir / (report.name + "_" + suffix + ".csv")) << t.str();

  std::ostringstream os;
  os << report.name << " [" << config.setup.name << ", seed " << config.seed << "]\n";
  for (const auto& a : report.assertions)
    os << "  " << (a.pass ? "ok   " : "FAIL ") << a.name << ": " << format_number(a.value)
       << " (bound " << format_number(a.bound) << ")\n";
  for (const auto& n : report.notes) os << "  note: " << n << '\n';
  char t[64];
  std::snprintf(t, sizeof t, "%.2f", seconds);
  os << "  " << (report.passed() ? "PASS" : "FAIL") << " in " << t << " s\n";
  std::ofstream(dir / (report.name + "_summary.txt")) << os.str();
  return os.str();
}

}  // namespace dunkl::cli
