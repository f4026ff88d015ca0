#ifndef MBG_PATTERN_HPP
#define MBG_PATTERN_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mbg {

using Point = Eigen::VectorXd;

/// Finite windowed sample of a Delone set in R^d. Points live in the closed
/// ball B(0, window_radius). Immutable after construction.
struct Pattern {
  int dim = 1;
  double r = 0.0;              // uniform-discreteness radius
  double R = 0.0;              // relative-density radius
  double window_radius = 0.0;  // extent of the finite sample
  double match_tol = 1e-9;     // point-identification tolerance
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }

  /// Index of the point within match_tol of x, if any.
  std::optional<int> find_point(const Point& x) const;
};

using PatternPtr = std::shared_ptr<const Pattern>;

/// Truncation Lambda[rho]: the points inside B(0, rho) plus the boundary
/// sphere, which is kept implicit and handled analytically.
struct TruncatedPattern {
  std::vector<Point> points;
  double radius = 0.0;
};

struct DeloneViolation {
  enum class Kind { Discreteness, Density, Duplicate } kind;
  std::string detail;
};

struct DeloneReport {
  bool valid = true;
  std::vector<DeloneViolation> violations;
};

double distance(const Point& a, const Point& b);

/// Hausdorff distance between finite sets. When boundary_radius is given,
/// both sets are augmented with the sphere dB(0, rho) whose distance to a
/// point x is |rho - |x||, computed analytically.
double hausdorff(const std::vector<Point>& a, const std::vector<Point>& b,
                 std::optional<double> boundary_radius = std::nullopt);

double hausdorff(const TruncatedPattern& a, const TruncatedPattern& b);

/// Truncate to B(0, rho). Throws "window exhausted" if rho > window_radius.
TruncatedPattern truncate(const Pattern& p, double rho);

/// Approximates D(L, L') = inf{1/(1+r) : d_H(L[r], L'[r]) < 1/r} by scanning
/// `grid` geometrically spaced radii in (0, min window] followed by one
/// bisection refinement pass. Result is in [0, 1] and symmetric.
double pattern_metric(const Pattern& a, const Pattern& b, int grid = 256);

DeloneReport validate_delone(const Pattern& p);

Pattern make_pattern(int dim, double r, double R, double window,
                     std::vector<Point> points, double match_tol = 1e-9);

// Generators. All are deterministic given the seed and pass validate_delone
// for the (r, R) they document.
Pattern generate_periodic(int dim, double window);
Pattern generate_random_displaced(int dim, double lambda, std::uint64_t seed, double window);
Pattern generate_triplet_rotation(double theta, double D, double r, int count);
Pattern generate_perturbed_periodic(int dim, double epsilon, std::uint64_t seed, double window);

/// Dispatch on kind name: periodic | random_displaced | triplet_rotation |
/// perturbed_periodic. Parameters not used by a kind are ignored.
struct GeneratorParams {
  int dim = 1;
  double window = 10.0;
  double lambda = 0.3;
  double epsilon = 0.2;
  double theta = 0.61803398874989484820;  // defaults to an irrational angle
  double D = 1.0;
  double r = 0.2;
  int count = 8;
};
Pattern generate(const std::string& kind, const GeneratorParams& params, std::uint64_t seed);

Pattern translated(const Pattern& p, const Point& x);

double diameter(const std::vector<Point>& pts);

}  // namespace mbg

#endif
