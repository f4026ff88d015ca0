#ifndef MBG_COVER_HPP
#define MBG_COVER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mbg/pattern.hpp"
#include "mbg/permutation.hpp"

namespace mbg {

/// A translate L = base - offset of a windowed base pattern. Translating only
/// rewrites the offset, so point identities stay exact index arithmetic.
struct PatternInstance {
  PatternPtr base;
  Point offset;

  static PatternInstance untranslated(PatternPtr p);
  Point point(int base_index) const { return base->points[base_index] - offset; }
  bool same_as(const PatternInstance& other) const;
};

/// One point xi = (L, V, chi) of the order cover: a pattern instance, a
/// subset V (sorted base indices) and an ordering chi of V. order[k] is the
/// base index of chi(k+1). Arity 0 is the empty-config sentinel.
struct OrderedConfig {
  PatternInstance pat;
  std::vector<int> subset;  // sorted ascending
  std::vector<int> order;   // permutation of subset

  int arity() const { return static_cast<int>(order.size()); }
  Point point(int k) const { return pat.point(order[k]); }  // chi(k+1)
  Point anchor() const { return point(0); }                 // chi(1)

  /// Parity of the stored order against the ascending (canonical) order.
  int canonical_sign() const;
  bool is_canonical() const;
  OrderedConfig canonicalized() const;
};

OrderedConfig make_config(PatternInstance pat, std::vector<int> order_of_base_indices);

bool config_equal(const OrderedConfig& a, const OrderedConfig& b);
bool same_pattern(const OrderedConfig& a, const OrderedConfig& b);

/// The pair (xi, zeta) with L_xi = L_zeta that the coefficient kernels and
/// the groupoid elements are built from.
struct OrderedPair {
  OrderedConfig left;   // xi
  OrderedConfig right;  // zeta
};

/// Canonical bijection of Prop 5.14: matches each v in V with the unique
/// point of Vp inside the open ball B(v, eps). Requires eps < r/2; throws
/// "not a cover neighborhood" when a point has zero or >= 2 candidates.
std::vector<std::pair<int, int>> canonical_bijection(const std::vector<Point>& v,
                                                     const std::vector<Point>& vp,
                                                     double eps, double r);

/// Deck transformation Lambda_s(xi) = (L, V, chi o s^{-1}).
OrderedConfig deck_transform(const OrderedConfig& xi, const Perm& s);

/// Translation t_x(xi) = (L - x, V - x, t_x o chi). Throws "window exhausted"
/// when a translated point leaves the window.
OrderedConfig translate_config(const OrderedConfig& xi, const Point& x);

/// Exact anchor translation by the config's own point chi(k+1): the new
/// offset is the base point itself, so no floating-point drift accumulates.
OrderedConfig anchor_at(const OrderedConfig& xi, int k = 0);

/// True when every config point is at least `margin` inside the window.
bool in_window(const OrderedConfig& xi, double margin);

/// True when the underlying base points sit at least `margin` inside the base
/// window, i.e. the sample still covers the margin-neighborhood of the
/// configuration. Fiber sums need this, not the frame-coordinate bound.
bool base_window_margin(const OrderedConfig& xi, double margin);

/// Concatenated order on the disjoint union; std::nullopt encodes the
/// sentinel value (overlapping subsets), which is not an error.
std::optional<OrderedConfig> wedge(const OrderedConfig& xi, const OrderedConfig& zeta);

/// When zeta <= xi (subset and order-prefix), returns xi \ zeta; otherwise
/// std::nullopt.
std::optional<OrderedConfig> leq_and_diff(const OrderedConfig& zeta, const OrderedConfig& xi);

}  // namespace mbg

#endif
