#include "mbg/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mbg/rng.hpp"

namespace mbg {

double distance(const Point& a, const Point& b) { return (a - b).norm(); }

std::optional<int> Pattern::find_point(const Point& x) const {
  for (int i = 0; i < size(); ++i)
    if (distance(points[i], x) <= match_tol) return i;
  return std::nullopt;
}

double diameter(const std::vector<Point>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      d = std::max(d, distance(pts[i], pts[j]));
  return d;
}

namespace {

double dist_to_set(const Point& x, const std::vector<Point>& s,
                   std::optional<double> boundary_radius) {
  double best = std::numeric_limits<double>::infinity();
  if (boundary_radius) best = std::abs(*boundary_radius - x.norm());
  for (const Point& p : s) best = std::min(best, distance(x, p));
  return best;
}

}  // namespace

double hausdorff(const std::vector<Point>& a, const std::vector<Point>& b,
                 std::optional<double> boundary_radius) {
  if (!boundary_radius && (a.empty() || b.empty()))
    throw std::invalid_argument("empty set");
  double sup = 0.0;
  for (const Point& x : a) sup = std::max(sup, dist_to_set(x, b, boundary_radius));
  for (const Point& x : b) sup = std::max(sup, dist_to_set(x, a, boundary_radius));
  // The shared boundary sphere contributes zero to both directed distances.
  return sup;
}

double hausdorff(const TruncatedPattern& a, const TruncatedPattern& b) {
  if (std::abs(a.radius - b.radius) > 1e-12)
    throw std::invalid_argument("truncation radii differ");
  return hausdorff(a.points, b.points, a.radius);
}

TruncatedPattern truncate(const Pattern& p, double rho) {
  if (rho <= 0.0) throw std::invalid_argument("truncation radius must be positive");
  if (rho > p.window_radius + p.match_tol)
    throw std::invalid_argument("window exhausted");
  TruncatedPattern t;
  t.radius = rho;
  for (const Point& x : p.points)
    if (x.norm() <= rho) t.points.push_back(x);
  return t;
}

namespace {

bool metric_condition(const Pattern& a, const Pattern& b, double r) {
  TruncatedPattern ta = truncate(a, r), tb = truncate(b, r);
  return hausdorff(ta, tb) < 1.0 / r;
}

}  // namespace

double pattern_metric(const Pattern& a, const Pattern& b, int grid) {
  if (a.dim != b.dim) throw std::invalid_argument("pattern dimension mismatch");
  if (grid < 2) throw std::invalid_argument("grid must be >= 2");
  const double r_max = std::min(a.window_radius, b.window_radius);
  const double r_min = std::min(1e-3, r_max / 2);
  // Geometric scan for the largest radius satisfying d_H(L[r],L'[r]) < 1/r;
  // the infimum of 1/(1+r) over the satisfying set is 1/(1+sup r).
  const double ratio = std::pow(r_max / r_min, 1.0 / (grid - 1));
  std::vector<double> radii;
  std::vector<bool> ok;
  double rr = r_min;
  for (int i = 0; i < grid; ++i, rr *= ratio) {
    double rg = std::min(rr, r_max);
    radii.push_back(rg);
    ok.push_back(metric_condition(a, b, rg));
    if (rg >= r_max) break;
  }
  int last_ok = -1;
  for (int i = static_cast<int>(ok.size()) - 1; i >= 0; --i)
    if (ok[i]) { last_ok = i; break; }
  if (last_ok < 0) return 1.0;
  double best = radii[last_ok];
  // One bisection refinement pass towards the next (failing) grid radius.
  if (last_ok + 1 < static_cast<int>(radii.size())) {
    double lo = best, hi = radii[last_ok + 1];
    for (int it = 0; it < 48; ++it) {
      double mid = 0.5 * (lo + hi);
      if (metric_condition(a, b, mid)) lo = mid; else hi = mid;
    }
    best = lo;
  }
  return 1.0 / (1.0 + best);
}

DeloneReport validate_delone(const Pattern& p) {
  DeloneReport rep;
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double d = distance(p.points[i], p.points[j]);
      if (d <= p.match_tol) {
        rep.valid = false;
        rep.violations.push_back({DeloneViolation::Kind::Duplicate,
                                  "points " + std::to_string(i) + "," + std::to_string(j) +
                                      " closer than match_tol"});
      } else if (d < 2.0 * p.r - p.match_tol) {
        rep.valid = false;
        rep.violations.push_back({DeloneViolation::Kind::Discreteness,
                                  "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") at distance " + std::to_string(d) + " < 2r"});
      }
    }
  }
  // Density: every ball B(x, R) with x at least R inside the window must
  // contain a point. Scanned on a cubic grid of spacing R/2.
  const double interior = p.window_radius - p.R;
  if (interior > 0.0 && p.R > 0.0) {
    const double h = p.R / 2.0;
    const int m = static_cast<int>(std::floor(interior / h));
    std::vector<int> idx(p.dim, -m);
    while (true) {
      Point x(p.dim);
      for (int k = 0; k < p.dim; ++k) x[k] = idx[k] * h;
      if (x.norm() <= interior) {
        bool covered = false;
        for (const Point& q : p.points)
          if (distance(x, q) <= p.R + p.match_tol) { covered = true; break; }
        if (!covered) {
          rep.valid = false;
          std::string s = "empty ball at (";
          for (int k = 0; k < p.dim; ++k) s += std::to_string(x[k]) + (k + 1 < p.dim ? "," : ")");
          rep.violations.push_back({DeloneViolation::Kind::Density, s});
        }
      }
      int k = 0;
      for (; k < p.dim; ++k) {
        if (++idx[k] <= m) break;
        idx[k] = -m;
      }
      if (k == p.dim) break;
    }
  }
  return rep;
}

Pattern make_pattern(int dim, double r, double R, double window,
                     std::vector<Point> points, double match_tol) {
  Pattern p;
  p.dim = dim;
  p.r = r;
  p.R = R;
  p.window_radius = window;
  p.match_tol = match_tol;
  p.points = std::move(points);
  return p;
}

namespace {

/// Enumerate Z^d nodes in the closed ball B(0, window).
std::vector<Point> lattice_nodes(int dim, double window) {
  std::vector<Point> out;
  const int m = static_cast<int>(std::floor(window));
  std::vector<int> idx(dim, -m);
  while (true) {
    Point x(dim);
    for (int k = 0; k < dim; ++k) x[k] = idx[k];
    if (x.norm() <= window + 1e-12) out.push_back(x);
    int k = 0;
    for (; k < dim; ++k) {
      if (++idx[k] <= m) break;
      idx[k] = -m;
    }
    if (k == dim) break;
  }
  std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  });
  return out;
}

}  // namespace

Pattern generate_periodic(int dim, double window) {
  double R = 0.5 * std::sqrt(static_cast<double>(dim)) + 0.25;
  return make_pattern(dim, 0.4, R, window, lattice_nodes(dim, window));
}

Pattern generate_random_displaced(int dim, double lambda, std::uint64_t seed, double window) {
  if (lambda >= 1.0 || lambda < 0.0)
    throw std::invalid_argument("random_displaced requires 0 <= lambda < 1");
  SplitMix64 rng(seed);
  std::vector<Point> nodes = lattice_nodes(dim, window + 1.0);
  std::vector<Point> pts;
  for (const Point& n : nodes) {
    Point x = n;
    for (int k = 0; k < dim; ++k) x[k] += lambda * (rng.uniform() - 0.5);
    if (x.norm() <= window) pts.push_back(x);
  }
  double r = 0.45 * (1.0 - lambda);
  double R = 0.55 * std::sqrt(static_cast<double>(dim)) * (1.0 + lambda) + 0.2;
  return make_pattern(dim, r, R, window, std::move(pts));
}

Pattern generate_triplet_rotation(double theta, double D, double r, int count) {
  if (D <= 2.0 * r) throw std::invalid_argument("triplet_rotation requires D > 2r");
  if (count < 1) throw std::invalid_argument("triplet_rotation requires count >= 1");
  std::vector<Point> pts;
  // Triplet k sits at center (k*D, 0) with its axis rotated by k*theta.
  const int half = count / 2;
  for (int k = -half; k < count - half; ++k) {
    double cx = k * D;
    double ca = std::cos(k * theta), sa = std::sin(k * theta);
    for (int j = -1; j <= 1; ++j) {
      Point p(2);
      p[0] = cx + j * r * ca;
      p[1] = j * r * sa;
      pts.push_back(p);
    }
  }
  double window = (count - half - 1) * D + r + 1.0;
  window = std::max(window, half * D + r + 1.0);
  // The infinite chain is not relatively dense in the plane; within the
  // window the sample is Delone for a window-scaled density radius.
  double rd = 0.45 * std::min(r, D - 2.0 * r);
  double R = window / 2.0 + D;
  return make_pattern(2, rd, R, window, std::move(pts));
}

Pattern generate_perturbed_periodic(int dim, double epsilon, std::uint64_t seed, double window) {
  if (epsilon >= 0.5 || epsilon < 0.0)
    throw std::invalid_argument("perturbed_periodic requires 0 <= epsilon < 1/2");
  SplitMix64 rng(seed);
  std::vector<Point> nodes = lattice_nodes(dim, window + 1.0);
  std::vector<Point> pts;
  for (const Point& n : nodes) {
    // Uniform draw from the Euclidean ball B(0, epsilon) by rejection.
    Point u(dim);
    do {
      for (int k = 0; k < dim; ++k) u[k] = 2.0 * rng.uniform() - 1.0;
    } while (u.norm() > 1.0);
    Point x = n + epsilon * u;
    if (x.norm() <= window) pts.push_back(x);
  }
  double r = 0.45 * (1.0 - 2.0 * epsilon);
  double R = 1.1 * (0.5 * std::sqrt(static_cast<double>(dim)) + epsilon) + 0.1;
  return make_pattern(dim, r, R, window, std::move(pts));
}

Pattern generate(const std::string& kind, const GeneratorParams& q, std::uint64_t seed) {
  if (kind == "periodic") return generate_periodic(q.dim, q.window);
  if (kind == "random_displaced")
    return generate_random_displaced(q.dim, q.lambda, seed, q.window);
  if (kind == "triplet_rotation")
    return generate_triplet_rotation(q.theta, q.D, q.r, q.count);
  if (kind == "perturbed_periodic")
    return generate_perturbed_periodic(q.dim, q.epsilon, seed, q.window);
  throw std::invalid_argument("unknown pattern kind: " + kind);
}

Pattern translated(const Pattern& p, const Point& x) {
  Pattern out = p;
  for (Point& q : out.points) q -= x;
  return out;
}

}  // namespace mbg
