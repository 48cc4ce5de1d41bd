#include "fvlt/profile.hpp"

#include <algorithm>

#include "fvlt/errors.hpp"

namespace fvlt {

LevelCounts local_times_at(const FvPath& path, double level, double t) {
  LevelCounts counts{0, 0, 0};
  for (const CrossingEvent& ev : level_events(path, level, t)) {
    ++counts.crossings;
    if (ev.kind == CrossingKind::ContinuousUp) {
      ++counts.net_passages;
      ++counts.abs_passages;
    } else if (ev.kind == CrossingKind::ContinuousDown) {
      --counts.net_passages;
      ++counts.abs_passages;
    }
  }
  return counts;
}

LocalTimeProfile build_profile(const FvPath& path, double t) {
  LocalTimeProfile profile;
  profile.horizon = t;
  profile.cell_boundaries = critical_values(path, t);
  const std::size_t m = profile.cell_boundaries.size();
  if (m < 2) return profile;
  profile.cells.reserve(m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const double mid = 0.5 * (profile.cell_boundaries[j] + profile.cell_boundaries[j + 1]);
    profile.cells.push_back(local_times_at(path, mid, t));
  }
  return profile;
}

ProfileIntegral integrate_against_profile(const LocalTimeProfile& profile,
                                          const Polynomial& weight, double a, double b) {
  if (!(a < b)) throw EmptyInterval("integrate_against_profile: requires a < b");
  ProfileIntegral acc{0.0, 0.0, 0.0};
  const Polynomial anti = weight.antiderivative();
  for (std::size_t j = 0; j < profile.cells.size(); ++j) {
    const double lo = std::max(a, profile.cell_boundaries[j]);
    const double hi = std::min(b, profile.cell_boundaries[j + 1]);
    if (!(hi > lo)) continue;
    const double mass = anti(hi) - anti(lo);
    acc.net += mass * profile.cells[j].net_passages;
    acc.abs += mass * profile.cells[j].abs_passages;
    acc.crossings += mass * profile.cells[j].crossings;
  }
  return acc;
}

}  // namespace fvlt
