#include "dunkl/setup_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace dunkl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  std::ostringstream os;
  os << source << ":" << line << ": " << what;
  throw DomainError(os.str());
}

template <class T>
T parse_number(const std::string& text, const std::string& source, int line) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) fail(source, line, "not a number: '" + text + "'");
  return value;
}

}  // namespace

std::string SetupFile::canonical() const {
  std::ostringstream os;
  os.precision(17);
  os << "name = " << name << "\nmultiplicities =";
  for (double k : multiplicities) os << ' ' << k;
  os << "\ngrid.radius = " << grid.radius << "\ngrid.half_points = " << grid.half_points << "\nseed = " << seed
     << '\n';
  return os.str();
}

SetupFile parse_setup(std::istream& in, const std::string& source) {
  SetupFile out;
  bool have_radius = false, have_points = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) fail(source, line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq)), value = trim(text.substr(eq + 1));
    if (value.empty()) fail(source, line, "empty value for '" + key + "'");
    if (key == "name") {
      out.name = value;
    } else if (key == "multiplicities") {
      std::istringstream ws(value);
      std::string tok;
      out.multiplicities.clear();
      while (ws >> tok) {
        const double k = parse_number<double>(tok, source, line);
        if (!(k >= 0.0)) fail(source, line, "multiplicities must be nonnegative");
        out.multiplicities.push_back(k);
      }
    } else if (key == "grid.radius") {
      out.grid.radius = parse_number<double>(value, source, line);
      if (!(out.grid.radius > 0.0)) fail(source, line, "grid.radius must be positive");
      have_radius = true;
    } else if (key == "grid.half_points") {
      out.grid.half_points = parse_number<int>(value, source, line);
      if (out.grid.half_points < 2) fail(source, line, "grid.half_points must be >= 2");
      have_points = true;
    } else if (key == "seed") {
      out.seed = parse_number<std::uint64_t>(value, source, line);
    } else {
      fail(source, line, "unknown key '" + key + "'");
    }
  }
  if (out.multiplicities.empty()) fail(source, line, "missing 'multiplicities'");
  const GridSpec d = GridSpec::defaults(static_cast<int>(out.multiplicities.size()));
  if (!have_radius) out.grid.radius = d.radius;
  if (!have_points) out.grid.half_points = d.half_points;
  if (out.name.empty()) out.name = ReflectionSetup::product(out.multiplicities).describe();
  return out;
}

SetupFile load_setup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open setup file '" + path + "'");
  return parse_setup(in, path);
}

}  // namespace dunkl
