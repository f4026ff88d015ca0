#include "mbg/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbg {

PatternInstance PatternInstance::untranslated(PatternPtr p) {
  PatternInstance inst;
  inst.offset = Point::Zero(p->dim);
  inst.base = std::move(p);
  return inst;
}

bool PatternInstance::same_as(const PatternInstance& other) const {
  if (base.get() != other.base.get()) return false;
  return (offset - other.offset).norm() <= base->match_tol;
}

int OrderedConfig::canonical_sign() const {
  std::vector<int> asc(order);
  std::sort(asc.begin(), asc.end());
  return relative_sign(asc, order);
}

bool OrderedConfig::is_canonical() const {
  return std::is_sorted(order.begin(), order.end());
}

OrderedConfig OrderedConfig::canonicalized() const {
  OrderedConfig c = *this;
  std::sort(c.order.begin(), c.order.end());
  return c;
}

OrderedConfig make_config(PatternInstance pat, std::vector<int> order_of_base_indices) {
  OrderedConfig cfg;
  cfg.pat = std::move(pat);
  cfg.order = std::move(order_of_base_indices);
  cfg.subset = cfg.order;
  std::sort(cfg.subset.begin(), cfg.subset.end());
  if (std::adjacent_find(cfg.subset.begin(), cfg.subset.end()) != cfg.subset.end())
    throw std::invalid_argument("config order repeats a point");
  for (int i : cfg.subset)
    if (i < 0 || i >= cfg.pat.base->size())
      throw std::invalid_argument("config index out of range");
  return cfg;
}

bool same_pattern(const OrderedConfig& a, const OrderedConfig& b) {
  return a.pat.same_as(b.pat);
}

bool config_equal(const OrderedConfig& a, const OrderedConfig& b) {
  return same_pattern(a, b) && a.order == b.order;
}

std::vector<std::pair<int, int>> canonical_bijection(const std::vector<Point>& v,
                                                     const std::vector<Point>& vp,
                                                     double eps, double r) {
  if (eps >= r / 2.0) throw std::invalid_argument("canonical bijection needs eps < r/2");
  if (v.size() != vp.size()) throw std::invalid_argument("set cardinality mismatch");
  std::vector<std::pair<int, int>> g;
  std::vector<bool> used(vp.size(), false);
  for (std::size_t i = 0; i < v.size(); ++i) {
    int hit = -1, hits = 0;
    for (std::size_t j = 0; j < vp.size(); ++j) {
      if (distance(v[i], vp[j]) < eps) { hit = static_cast<int>(j); ++hits; }
    }
    if (hits != 1 || used[hit])
      throw std::invalid_argument("not a cover neighborhood");
    used[hit] = true;
    g.emplace_back(static_cast<int>(i), hit);
  }
  return g;
}

OrderedConfig deck_transform(const OrderedConfig& xi, const Perm& s) {
  if (static_cast<int>(s.size()) != xi.arity())
    throw std::invalid_argument("deck transform arity mismatch");
  if (!perm_valid(s)) throw std::invalid_argument("invalid permutation");
  Perm sinv = perm_inverse(s);
  OrderedConfig out = xi;
  for (int k = 0; k < xi.arity(); ++k) out.order[k] = xi.order[sinv[k]];
  return out;
}

OrderedConfig translate_config(const OrderedConfig& xi, const Point& x) {
  OrderedConfig out = xi;
  out.pat.offset = xi.pat.offset + x;
  if (!in_window(out, 0.0)) throw std::invalid_argument("window exhausted");
  return out;
}

OrderedConfig anchor_at(const OrderedConfig& xi, int k) {
  OrderedConfig out = xi;
  out.pat.offset = xi.pat.base->points[xi.order[k]];
  return out;
}

bool in_window(const OrderedConfig& xi, double margin) {
  const double w = xi.pat.base->window_radius - margin;
  for (int k = 0; k < xi.arity(); ++k)
    if (xi.point(k).norm() > w + xi.pat.base->match_tol) return false;
  return true;
}

bool base_window_margin(const OrderedConfig& xi, double margin) {
  const double w = xi.pat.base->window_radius - margin;
  for (int k = 0; k < xi.arity(); ++k)
    if (xi.pat.base->points[xi.order[k]].norm() > w + xi.pat.base->match_tol) return false;
  return true;
}

std::optional<OrderedConfig> wedge(const OrderedConfig& xi, const OrderedConfig& zeta) {
  if (!same_pattern(xi, zeta)) throw std::invalid_argument("pattern mismatch");
  for (int i : xi.subset)
    if (std::binary_search(zeta.subset.begin(), zeta.subset.end(), i))
      return std::nullopt;  // the sentinel, f(o) = 0 downstream
  std::vector<int> order = xi.order;
  order.insert(order.end(), zeta.order.begin(), zeta.order.end());
  return make_config(xi.pat, std::move(order));
}

std::optional<OrderedConfig> leq_and_diff(const OrderedConfig& zeta, const OrderedConfig& xi) {
  if (!same_pattern(zeta, xi)) throw std::invalid_argument("pattern mismatch");
  if (zeta.arity() > xi.arity()) return std::nullopt;
  // zeta <= xi iff chi_zeta is a prefix of chi_xi.
  for (int k = 0; k < zeta.arity(); ++k)
    if (xi.order[k] != zeta.order[k]) return std::nullopt;
  std::vector<int> rest(xi.order.begin() + zeta.arity(), xi.order.end());
  return make_config(xi.pat, std::move(rest));
}

}  // namespace mbg
