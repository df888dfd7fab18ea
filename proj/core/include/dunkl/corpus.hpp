#pragma once

#include "dunkl/kernel.hpp"
#include "dunkl/rootsys.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dunkl {

/// A smooth, rapidly decaying test function on R^N.
struct TestFunction {
  std::string name;
  std::function<cplx(const Point&)> fn;
};

/// The 12 fixed families: Gaussians of several widths, shifted and modulated
/// Gaussians, odd and mixed-parity factors, a smoothed indicator and a
/// super-Gaussian. All are negligible beyond |x| = 9.
std::vector<TestFunction> deterministic_corpus(int dimension);

/// Random superpositions of 1 to 4 Gaussians with complex amplitudes, centres
/// in [-1.5, 1.5]^N and widths in [0.6, 1.0]. Reproducible from the seed.
std::vector<TestFunction> random_corpus(int dimension, std::uint64_t seed, int count);

/// deterministic_corpus followed by 38 random members.
std::vector<TestFunction> standard_corpus(int dimension, std::uint64_t seed);

/// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
double unit_uniform(std::uint64_t bits);

}  // namespace dunkl
