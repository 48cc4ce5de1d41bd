#pragma once

#include <vector>

#include "fvlt/path.hpp"

namespace fvlt {

enum class CrossingKind { ContinuousUp, ContinuousDown, JumpUp, JumpDown, Touch };

// One passage of the path through a level. Continuous passages carry the index
// of the segment they happen in (breakpoint passages are attributed to the
// right-hand segment, or to the last one at the path end); jump passages carry
// the breakpoint index. touch_side is -1 when the path touches the level from
// below, +1 from above, 0 for non-touch events. one_sided marks an event at
// exactly the path end, classified from the left side only.
struct CrossingEvent {
  double time;
  CrossingKind kind;
  int segment_index;
  int touch_side = 0;
  bool one_sided = false;
};

// Level classification: a level is complex when a jump starts or ends at it,
// or when the path sits identically at it on a subinterval.
struct LevelClass {
  bool jump_endpoint = false;
  bool non_discrete_level_set = false;
  bool simple() const { return !jump_endpoint && !non_discrete_level_set; }
};

LevelClass classify_level(const FvPath& path, double level, double t);

// All passages through a simple level with time in (0, t], sorted by time.
// Throws ComplexLevel when the level is not simple.
std::vector<CrossingEvent> level_events(const FvPath& path, double level, double t);

// Number of passages (continuous crossings, jump crossings and touches alike).
int crossing_count(const FvPath& path, double level, double t);

// The finite set of levels off which the local-time profile is locally
// constant: endpoint values, jump start/end values, segment endpoint values
// and local-extremum values, restricted to [0, t]. Sorted ascending.
std::vector<double> critical_values(const FvPath& path, double t);

}  // namespace fvlt
