#include "mbg/groupoid.hpp"

#include <stdexcept>

namespace mbg {

namespace {

/// Translate both components so that the base point `anchor_idx` becomes the
/// origin. Offsets are assigned, never accumulated.
void pair_anchor(OrderedConfig& a, OrderedConfig& b, int anchor_idx) {
  const Point& p = a.pat.base->points[anchor_idx];
  a.pat.offset = p;
  b.pat.offset = p;
}

void check_margin(const GroupoidElement& g) {
  // Arrow algebra is exact index arithmetic and needs no neighborhood data;
  // the only hard requirement is that the anchored configuration stays inside
  // the window. Operations that sum over fibers carry their own range-margin
  // checks.
  if (!in_window(g.xi, 0.0) || !in_window(g.zeta, 0.0))
    throw std::invalid_argument("window exhausted");
}

}  // namespace

GroupoidElement make_element(const OrderedConfig& xi, const OrderedConfig& zeta) {
  if (xi.pat.base.get() != zeta.pat.base.get())
    throw std::invalid_argument("configs live on different base patterns");
  if (!same_pattern(xi, zeta))
    throw std::invalid_argument("configs live on different translates");
  if (xi.arity() != zeta.arity() || xi.arity() < 1)
    throw std::invalid_argument("arity mismatch");
  GroupoidElement g{xi, zeta};
  pair_anchor(g.xi, g.zeta, g.xi.order[0]);
  check_margin(g);
  return g;
}

bool element_equal(const GroupoidElement& a, const GroupoidElement& b) {
  return config_equal(a.xi, b.xi) && config_equal(a.zeta, b.zeta);
}

bool is_unit(const GroupoidElement& g) { return g.xi.order == g.zeta.order; }

GroupoidElement inverse(const GroupoidElement& g) {
  GroupoidElement out{g.zeta, g.xi};
  pair_anchor(out.xi, out.zeta, out.xi.order[0]);
  check_margin(out);
  return out;
}

GroupoidElement range(const GroupoidElement& g) {
  GroupoidElement out{g.xi, g.xi};
  return out;
}

GroupoidElement source(const GroupoidElement& g) {
  GroupoidElement out{g.zeta, g.zeta};
  pair_anchor(out.xi, out.zeta, out.xi.order[0]);
  return out;
}

bool composable(const GroupoidElement& g1, const GroupoidElement& g2) {
  if (g1.arity() != g2.arity()) return false;
  if (g1.xi.pat.base.get() != g2.xi.pat.base.get()) return false;
  return element_equal(source(g1), range(g2));
}

GroupoidElement compose(const GroupoidElement& g1, const GroupoidElement& g2) {
  if (!composable(g1, g2))
    throw std::invalid_argument("source/range mismatch");
  // g2 = t_{chi_zeta1(1)}(zeta1, zeta2'); the product is (xi1, zeta2') where
  // zeta2' carries g1's frame. Offsets are copied, never recomputed.
  GroupoidElement out{g1.xi, g2.zeta};
  out.zeta.pat.offset = g1.xi.pat.offset;
  check_margin(out);
  return out;
}

GroupoidElement two_action(const Perm& s1, const GroupoidElement& g, const Perm& s2) {
  if (static_cast<int>(s1.size()) != g.arity() || static_cast<int>(s2.size()) != g.arity())
    throw std::invalid_argument("arity mismatch");
  GroupoidElement out{deck_transform(g.xi, s1), deck_transform(g.zeta, perm_inverse(s2))};
  pair_anchor(out.xi, out.zeta, out.xi.order[0]);
  check_margin(out);
  return out;
}

GroupoidElement tau(const Perm& s, const GroupoidElement& unit) {
  if (!is_unit(unit)) throw std::invalid_argument("tau expects a unit element");
  if (static_cast<int>(s.size()) != unit.arity())
    throw std::invalid_argument("arity mismatch");
  GroupoidElement out{deck_transform(unit.xi, s), unit.xi};
  pair_anchor(out.xi, out.zeta, out.xi.order[0]);
  check_margin(out);
  return out;
}

GroupoidElement bisection_product(const Perm& s1, const Perm& s2, const GroupoidElement& unit) {
  GroupoidElement b2 = tau(s2, unit);
  GroupoidElement b1 = tau(s1, range(b2));
  return compose(b1, b2);
}

std::pair<GroupoidElement, GroupoidElement> embed_morphism(const GroupoidElement& g,
                                                           int n, int m) {
  if (g.arity() != n + m) throw std::invalid_argument("arity must equal n + m");
  if (n < 1 || m < 1) throw std::invalid_argument("split arities must be >= 1");
  auto head = [&](const OrderedConfig& c) {
    return make_config(c.pat, std::vector<int>(c.order.begin(), c.order.begin() + n));
  };
  auto tail = [&](const OrderedConfig& c) {
    return make_config(c.pat, std::vector<int>(c.order.begin() + n, c.order.end()));
  };
  GroupoidElement first = make_element(head(g.xi), head(g.zeta));
  GroupoidElement second = make_element(tail(g.xi), tail(g.zeta));
  return {first, second};
}

BlowupTriple blowup_iso(const GroupoidElement& g) {
  BlowupTriple t;
  t.xi = g.xi;
  t.lattice = g.xi.pat;
  t.x = g.zeta.anchor();
  t.zeta_moved = anchor_at(g.zeta, 0);
  return t;
}

GroupoidElement blowup_inverse(const BlowupTriple& t) {
  OrderedConfig zeta = t.zeta_moved;
  zeta.pat.offset = t.lattice.offset;
  return make_element(t.xi, zeta);
}

}  // namespace mbg
