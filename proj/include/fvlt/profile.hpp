#pragma once

#include <vector>

#include "fvlt/levels.hpp"
#include "fvlt/path.hpp"
#include "fvlt/polynomial.hpp"

namespace fvlt {

// Integer level counts at one level up to a horizon.
struct LevelCounts {
  int net_passages;  // continuous up-passages minus down-passages
  int abs_passages;  // continuous up-passages plus down-passages
  int crossings;     // every passage: continuous, jump and touch alike
};

// Exact piecewise-constant-in-level record of the counts: cells[j] holds the
// counts on the open interval (cell_boundaries[j], cell_boundaries[j+1]).
// Complex levels lie only on boundaries.
struct LocalTimeProfile {
  std::vector<double> cell_boundaries;
  std::vector<LevelCounts> cells;
  double horizon = 0.0;
};

// Counts at a simple level; throws ComplexLevel otherwise.
LevelCounts local_times_at(const FvPath& path, double level, double t);

LocalTimeProfile build_profile(const FvPath& path, double t);

struct ProfileIntegral {
  double net;
  double abs;
  double crossings;
};

// Integrals of weight(x) * counts over the part of [a, b] covered by cells,
// exact via the weight's antiderivative. Throws EmptyInterval when a >= b.
ProfileIntegral integrate_against_profile(const LocalTimeProfile& profile,
                                          const Polynomial& weight, double a, double b);

}  // namespace fvlt
