#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fvlt/path.hpp"

namespace fvlt {

// Named deterministic fixture. Recognized names (case-insensitive):
//   const     constant path; params: value (default 1), horizon (default 1)
//   drift     V(t) = t on [0, 2]
//   zigzag    linear 0 -> 2 -> 1 -> 3 on unit intervals
//   stair     flat path with unit up-jumps at t = 1, 2, 3
//   jumpmid   0 -> 2 linear, jump to 0.5 at t = 1, linear to 1.5 at t = 2
//   parab     (t-1)^2 on [0, 2]
//   negparab  -(t-1)^2 on [0, 2]
//   cantor    n-th piecewise-linear Cantor-function approximation on [0, 1];
//             params: n (default 4, range 0..12)
struct FixtureSpec {
  std::string name;
  std::map<std::string, double> params;
};

FvPath make_fixture(const FixtureSpec& spec);
FvPath make_fixture(const std::string& name);

// The eight canonical fixtures with default parameters, in a fixed order.
std::vector<std::pair<std::string, FvPath>> default_fixture_corpus();

// Seeded random path generation. The draw order over splitmix64 is frozen and
// documented in the README; identical params give bit-identical paths.
struct RandomPathParams {
  std::uint64_t seed = 0;
  int max_breakpoints = 20;
  int max_degree = 3;
  double jump_probability = 0.5;
  double value_scale = 10.0;
};

FvPath random_path(const RandomPathParams& params);

}  // namespace fvlt
