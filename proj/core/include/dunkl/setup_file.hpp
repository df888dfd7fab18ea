#pragma once

#include "dunkl/rootsys.hpp"
#include "dunkl/transform.hpp"

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace dunkl {

/// Contents of a setup file: `key = value` lines, `#` starts a comment.
///
///   name = n2
///   multiplicities = 0.5 1.0
///   grid.radius = 12          # optional, default 12
///   grid.half_points = 96     # optional, default depends on N
///   seed = 7                  # optional, default 1
struct SetupFile {
  std::string name;
  std::vector<double> multiplicities;
  GridSpec grid;
  std::uint64_t seed = 1;

  ReflectionSetup setup() const { return ReflectionSetup::product(multiplicities); }
  /// Canonical `key = value` text; parse_setup(canonical()) round-trips.
  std::string canonical() const;
};

/// Throws DomainError naming the source and line on malformed or unknown keys.
SetupFile parse_setup(std::istream& in, const std::string& source = "<input>");
SetupFile load_setup_file(const std::string& path);

}  // namespace dunkl
