#include "fvlt/levels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fvlt/errors.hpp"
#include "fvlt/roots.hpp"

namespace fvlt {

namespace {

void check_horizon(const FvPath& path, double t, const char* op) {
  if (!(t > 0.0) || t > path.horizon()) {
    std::ostringstream os;
    os << op << ": t=" << t << " outside (0, " << path.horizon() << "]";
    throw OutOfDomain(os.str());
  }
}

}  // namespace

LevelClass classify_level(const FvPath& path, double level, double t) {
  check_horizon(path, t, "classify_level");
  const double tol = path.level_tolerance();
  LevelClass cls;
  for (const TimedJump& j : path.jumps_up_to(t)) {
    const Evaluation v = path.eval(j.time);
    if (std::abs(v.value - level) <= tol || std::abs(v.left_limit - level) <= tol) {
      cls.jump_endpoint = true;
      break;
    }
  }
  for (std::size_t i = 0; i < path.segment_count(); ++i) {
    if (path.breakpoints()[i] >= t) break;
    const Polynomial& p = path.segment(i);
    if (p.degree() <= 0 && std::abs(p(0.0) - level) <= tol) {
      cls.non_discrete_level_set = true;
      break;
    }
  }
  return cls;
}

std::vector<CrossingEvent> level_events(const FvPath& path, double level, double t) {
  const LevelClass cls = classify_level(path, level, t);
  if (!cls.simple()) {
    std::ostringstream os;
    os << "level_events: level " << level << " is complex ("
       << (cls.jump_endpoint ? "jump endpoint" : "non-discrete level set") << ")";
    throw ComplexLevel(os.str());
  }

  const double tol_level = path.level_tolerance();
  const double tol_time = 1e-10 * (1.0 + path.horizon());
  const std::size_t n = path.segment_count();
  const auto bps = path.breakpoints();
  std::vector<CrossingEvent> events;

  // Jump crossings. The level is simple, so no jump endpoint equals it and
  // strict comparisons are unambiguous.
  for (const TimedJump& j : path.jumps_up_to(t)) {
    const Evaluation v = path.eval(j.time);
    const std::size_t index =
        static_cast<std::size_t>(std::lower_bound(bps.begin(), bps.end(), j.time) - bps.begin());
    if (v.left_limit < level && level < v.value) {
      events.push_back({j.time, CrossingKind::JumpUp, static_cast<int>(index), 0, false});
    } else if (v.value < level && level < v.left_limit) {
      events.push_back({j.time, CrossingKind::JumpDown, static_cast<int>(index), 0, false});
    }
  }

  // Passages exactly at a breakpoint, classified from both sides (or from the
  // left only at the path end).
  std::vector<double> breakpoint_event_times;
  for (std::size_t i = 1; i <= n; ++i) {
    const double time = bps[i];
    if (time > t) break;
    if (path.jumps().count(i) != 0) continue;  // jump breakpoints handled above
    if (std::abs(path.eval(time).value - level) > tol_level) continue;

    if (i == n) {
      const double len = path.segment_length(n - 1);
      const Polynomial q = path.segment(n - 1).minus(level);
      const int sl = one_sided_sign(q, len, -1, 0.0, len);
      if (sl == 0) continue;  // constant tail at the level would be complex
      breakpoint_event_times.push_back(time);
      events.push_back({time,
                        sl < 0 ? CrossingKind::ContinuousUp : CrossingKind::ContinuousDown,
                        static_cast<int>(n - 1), 0, true});
      continue;
    }
    const double len_l = path.segment_length(i - 1);
    const double len_r = path.segment_length(i);
    const int sl = one_sided_sign(path.segment(i - 1).minus(level), len_l, -1, 0.0, len_l);
    const int sr = one_sided_sign(path.segment(i).minus(level), 0.0, +1, 0.0, len_r);
    if (sl == 0 || sr == 0) continue;  // adjoining constant stretch: complex, filtered above
    breakpoint_event_times.push_back(time);
    if (sl != sr) {
      events.push_back({time,
                        sr > 0 ? CrossingKind::ContinuousUp : CrossingKind::ContinuousDown,
                        static_cast<int>(i), 0, false});
    } else {
      events.push_back({time, CrossingKind::Touch, static_cast<int>(i), sl, false});
    }
  }

  // Interior passages, segment by segment.
  for (std::size_t i = 0; i < n; ++i) {
    if (bps[i] >= t) break;
    const double len = path.segment_length(i);
    const Polynomial q = path.segment(i).minus(level);
    if (q.degree() < 1) continue;  // constant segment away from the level
    for (const PolyRoot& r : isolate_roots(q, 0.0, len)) {
      const double time = bps[i] + r.position;
      if (time > t + tol_time) continue;
      const bool merged = std::any_of(
          breakpoint_event_times.begin(), breakpoint_event_times.end(),
          [&](double bt) { return std::abs(time - bt) <= 1e-8 * len; });
      if (merged) continue;
      CrossingEvent ev{std::min(time, t), CrossingKind::Touch, static_cast<int>(i), 0, false};
      if (r.crosses()) {
        ev.kind = r.sign_after > 0 ? CrossingKind::ContinuousUp : CrossingKind::ContinuousDown;
      } else {
        ev.touch_side = r.sign_before;
      }
      events.push_back(ev);
    }
  }

  std::stable_sort(events.begin(), events.end(),
                   [](const CrossingEvent& a, const CrossingEvent& b) { return a.time < b.time; });
  return events;
}

int crossing_count(const FvPath& path, double level, double t) {
  return static_cast<int>(level_events(path, level, t).size());
}

std::vector<double> critical_values(const FvPath& path, double t) {
  check_horizon(path, t, "critical_values");
  std::vector<double> values;
  values.push_back(path.eval(0.0).value);
  values.push_back(path.eval(t).value);
  for (const TimedJump& j : path.jumps_up_to(t)) {
    const Evaluation v = path.eval(j.time);
    values.push_back(v.value);
    values.push_back(v.left_limit);
  }
  const std::size_t n = path.segment_count();
  const auto bps = path.breakpoints();
  for (std::size_t i = 0; i < n; ++i) {
    if (bps[i] > t) break;
    values.push_back(path.segment(i)(0.0));
    if (bps[i + 1] <= t) {
      values.push_back(path.segment(i)(path.segment_length(i)));
    }
    if (bps[i] < t) {
      const double u_max = std::min(path.segment_length(i), t - bps[i]);
      const Polynomial dp = path.segment(i).derivative();
      if (dp.degree() >= 1) {
        for (double u : sign_change_points(dp, 0.0, u_max)) {
          values.push_back(path.segment(i)(u));
        }
      }
    }
  }
  std::sort(values.begin(), values.end());
  const double tol = path.level_tolerance();
  std::vector<double> out;
  for (double v : values) {
    if (out.empty() || v - out.back() > tol) out.push_back(v);
  }
  return out;
}

}  // namespace fvlt
