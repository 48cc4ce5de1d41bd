#include "fvlt/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace fvlt {

namespace {

// |q| below kZeroRel * coefficient_scale counts as a zero value.
constexpr double kZeroRel = 1e-12;
// Bisection target width relative to the interval length.
constexpr double kWidthRel = 1e-13;

int sign_with_tol(double v, double tol) {
  if (v > tol) return 1;
  if (v < -tol) return -1;
  return 0;
}

// Bisection on [lo, hi] where q has strictly opposite signs at the ends,
// followed by two clamped Newton polish steps.
double refine_root(const Polynomial& q, double lo, double hi, int sign_lo, double width) {
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double v = q(mid);
    if (v == 0.0) return mid;
    if ((v > 0.0 ? 1 : -1) == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double r = 0.5 * (lo + hi);
  const Polynomial dq = q.derivative();
  for (int step = 0; step < 2; ++step) {
    const double d = dq(r);
    if (d == 0.0) break;
    const double next = r - q(r) / d;
    if (!(next > lo) || !(next < hi)) break;
    r = next;
  }
  return r;
}

}  // namespace

double coefficient_scale(const Polynomial& q, double a, double b) {
  const double m = std::max(std::abs(a), std::abs(b));
  double scale = 0.0;
  double mk = 1.0;
  for (double c : q.coefficients()) {
    scale += std::abs(c) * mk;
    mk *= m;
  }
  return scale;
}

std::vector<PolyRoot> isolate_roots(const Polynomial& q, double a, double b) {
  std::vector<PolyRoot> roots;
  if (!(b > a) || q.degree() < 1) return roots;

  const double width = kWidthRel * (b - a);
  const double edge = 4.0 * width;  // roots this close to a or b belong to the endpoints
  const double ztol = kZeroRel * std::max(coefficient_scale(q, a, b), 1e-300);

  if (q.degree() == 1) {
    const auto& c = q.coefficients();
    const double r = -c[0] / c[1];
    if (r > a + edge && r < b - edge) {
      const int s = c[1] > 0.0 ? 1 : -1;
      roots.push_back({r, -s, s});
    }
    return roots;
  }

  // Between consecutive critical points q is strictly monotone, so each gap
  // holds at most one root, and multiple roots sit exactly on critical points.
  std::vector<double> nodes;
  nodes.push_back(a);
  for (const PolyRoot& cr : isolate_roots(q.derivative(), a, b)) {
    if (nodes.empty() || cr.position - nodes.back() > edge) {
      nodes.push_back(cr.position);
    }
  }
  if (b - nodes.back() <= edge) nodes.pop_back();
  nodes.push_back(b);

  const std::size_t m = nodes.size();
  std::vector<double> value(m);
  std::vector<int> sign(m);
  for (std::size_t i = 0; i < m; ++i) {
    value[i] = q(nodes[i]);
    sign[i] = sign_with_tol(value[i], ztol);
  }

  // Sign of q adjacent to each node, looking right (right_adj) or left
  // (left_adj), plus bisection roots in strictly sign-changing gaps.
  std::vector<int> right_adj(m, 0), left_adj(m, 0);
  std::vector<PolyRoot> gap_roots;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const int sl = sign[j], sr = sign[j + 1];
    if (sl != 0 && sr != 0 && sl != sr) {
      const double r = refine_root(q, nodes[j], nodes[j + 1], sl, width);
      if (r > a + edge && r < b - edge) gap_roots.push_back({r, sl, sr});
      right_adj[j] = sl;
      left_adj[j + 1] = sr;
      continue;
    }
    int s = 0;
    if (sl != 0) {
      s = sl;  // same sign across, or a root at the far node
    } else if (sr != 0) {
      s = sr;
    } else {
      s = sign_with_tol(q(0.5 * (nodes[j] + nodes[j + 1])), ztol);
    }
    right_adj[j] = s;
    left_adj[j + 1] = s;
  }

  // Critical points that are themselves roots.
  for (std::size_t j = 1; j + 1 < m; ++j) {
    if (sign[j] != 0) continue;
    if (nodes[j] <= a + edge || nodes[j] >= b - edge) continue;
    roots.push_back({nodes[j], left_adj[j], right_adj[j]});
  }
  roots.insert(roots.end(), gap_roots.begin(), gap_roots.end());
  std::sort(roots.begin(), roots.end(),
            [](const PolyRoot& x, const PolyRoot& y) { return x.position < y.position; });

  // Merge accidental near-duplicates from clustered critical points.
  std::vector<PolyRoot> merged;
  for (const PolyRoot& r : roots) {
    if (!merged.empty() && r.position - merged.back().position <= 2.0 * edge) {
      merged.back().sign_after = r.sign_after;
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

std::vector<double> sign_change_points(const Polynomial& q, double a, double b) {
  std::vector<double> out;
  for (const PolyRoot& r : isolate_roots(q, a, b)) {
    if (r.crosses()) out.push_back(r.position);
  }
  return out;
}

ValueRange value_range(const Polynomial& q, double a, double b) {
  double lo = q(a), hi = lo;
  auto take = [&](double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  };
  take(q(b));
  if (q.degree() >= 2) {
    for (const PolyRoot& cr : isolate_roots(q.derivative(), a, b)) {
      take(q(cr.position));
    }
  }
  return {lo, hi};
}

int one_sided_sign(const Polynomial& q, double u0, int dir, double a, double b) {
  Polynomial d = q;
  const int max_order = std::max(1, q.degree());
  for (int order = 1; order <= max_order; ++order) {
    d = d.derivative();
    if (d.is_zero()) return 0;
    const double ztol = kZeroRel * std::max(coefficient_scale(d, a, b), 1e-300);
    const double v = d(u0);
    if (std::abs(v) > ztol) {
      const int s = v > 0.0 ? 1 : -1;
      // q(u0 + dir*eps) ~ d(u0) * (dir*eps)^order / order!
      if (dir > 0 || order % 2 == 0) return s;
      return -s;
    }
  }
  return 0;
}

}  // namespace fvlt
