#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "fvlt/polynomial.hpp"

namespace fvlt {

// Unvalidated path description, as it arrives from documents or generators.
// Segment i is a polynomial in the local coordinate u = t - breakpoints[i],
// defining the path on [breakpoints[i], breakpoints[i+1]). Jumps map a
// breakpoint index in {1, ..., n} to a declared jump size.
struct RawPathSpec {
  std::vector<double> breakpoints;
  std::vector<std::vector<double>> segments;
  std::map<std::size_t, double> jumps;
};

struct ValidationConfig {
  int max_degree = 6;
};

struct Evaluation {
  double value;       // V(t), right-continuous
  double left_limit;  // V(t-)
};

struct TimedJump {
  double time;
  double size;
};

struct Variation {
  double total;       // W(t)
  double continuous;  // W_c(t)
};

// Maximal sub-interval of a segment on which the segment is monotone.
// direction is +1 (increasing), -1 (decreasing) or 0 (constant).
struct MonotonePiece {
  double u_begin;
  double u_end;
  int direction;
};

// Right-continuous pure-jump step function, 0 before the first jump time.
class StepFunction {
 public:
  StepFunction() = default;
  StepFunction(std::vector<double> times, std::vector<double> cumulative);

  double operator()(double t) const;
  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& cumulative() const { return cumulative_; }

 private:
  std::vector<double> times_;
  std::vector<double> cumulative_;
};

// Piecewise-polynomial cadlag path of finite variation on [0, T].
// Immutable after validation; every operation is a pure function, so
// concurrent reads are safe.
class FvPath {
 public:
  static FvPath validate(const RawPathSpec& spec, const ValidationConfig& config = {});

  double horizon() const { return breakpoints_.back(); }
  std::span<const double> breakpoints() const { return breakpoints_; }
  std::size_t segment_count() const { return segments_.size(); }
  const Polynomial& segment(std::size_t i) const { return segments_[i]; }
  double segment_length(std::size_t i) const {
    return breakpoints_[i + 1] - breakpoints_[i];
  }

  // Jump sizes keyed by breakpoint index. For interior breakpoints these are
  // the exact segment-data differences p_i(0) - p_{i-1}(len), so decomposition
  // and variation identities hold to rounding; at the final breakpoint the
  // declared size is kept (it defines V(T)).
  const std::map<std::size_t, double>& jumps() const { return jumps_; }

  Evaluation eval(double t) const;
  std::vector<TimedJump> jumps_up_to(double t) const;
  Variation total_variation(double t) const;

  double min_value() const { return min_value_; }
  double max_value() const { return max_value_; }

  // Equality tolerance for comparing path values with levels.
  double level_tolerance() const;

  const std::vector<MonotonePiece>& monotone_pieces(std::size_t i) const {
    return monotone_[i];
  }

  RawPathSpec raw() const;

 private:
  FvPath() = default;

  std::vector<double> breakpoints_;
  std::vector<Polynomial> segments_;
  std::map<std::size_t, double> jumps_;
  std::vector<std::vector<MonotonePiece>> monotone_;
  double min_value_ = 0.0;
  double max_value_ = 0.0;
};

// Canonical split into the continuous part (same breakpoints, no jumps) and
// the cumulative-jump step function; the two add back to the original path
// pointwise.
struct PathDecomposition {
  FvPath continuous;
  StepFunction discontinuous;
};

PathDecomposition decompose(const FvPath& path);

}  // namespace fvlt
