#ifndef MBG_GROUPOID_HPP
#define MBG_GROUPOID_HPP

#include <utility>

#include "mbg/cover.hpp"

namespace mbg {

/// An arrow (xi, zeta) of the N-fermion groupoid: both configs live on the
/// same pattern instance, have equal arity and chi_xi(1) sits at the origin.
struct GroupoidElement {
  OrderedConfig xi;
  OrderedConfig zeta;

  int arity() const { return xi.arity(); }
  double match_tol() const { return xi.pat.base->match_tol; }
};

/// Validates the pair and anchors it: both components are translated so that
/// chi_xi(1) lands exactly at the origin (snap-to-origin).
GroupoidElement make_element(const OrderedConfig& xi, const OrderedConfig& zeta);

bool element_equal(const GroupoidElement& a, const GroupoidElement& b);
bool is_unit(const GroupoidElement& g);

/// (xi, zeta)^{-1} = t_{chi_zeta(1)}(zeta, xi).
GroupoidElement inverse(const GroupoidElement& g);

/// (xi, zeta) . t_{chi_zeta(1)}(zeta, zeta') = (xi, zeta'). Throws
/// "source/range mismatch" when s(g1) != r(g2).
GroupoidElement compose(const GroupoidElement& g1, const GroupoidElement& g2);

GroupoidElement range(const GroupoidElement& g);   // (xi, xi)
GroupoidElement source(const GroupoidElement& g);  // t_{chi_zeta(1)}(zeta, zeta)

bool composable(const GroupoidElement& g1, const GroupoidElement& g2);

/// s1 . (xi, zeta) . s2 = t_{chi_xi o s1^{-1}(1)}(Lambda_{s1} xi, Lambda_{s2^{-1}} zeta).
GroupoidElement two_action(const Perm& s1, const GroupoidElement& g, const Perm& s2);

/// The bisection tau_s evaluated at a unit:
/// tau_s(xi) = t_{chi_xi o s^{-1}(1)}(Lambda_s xi, xi).
GroupoidElement tau(const Perm& s, const GroupoidElement& unit);

/// Product of two bisection values along the rule
/// (tau_a . tau_b)(xi) = tau_a(r(tau_b(xi))) . tau_b(xi).
GroupoidElement bisection_product(const Perm& s1, const Perm& s2, const GroupoidElement& unit);

/// e(xi1 v xi2, zeta1 v zeta2) = ((xi1, zeta1), t_{chi_xi2(1)}(xi2, zeta2)).
std::pair<GroupoidElement, GroupoidElement> embed_morphism(const GroupoidElement& g,
                                                           int n, int m);

/// Blow-up presentation (xi, (L, x), t_x(zeta)) with x = chi_zeta(1).
struct BlowupTriple {
  OrderedConfig xi;          // unit-side config, anchored
  PatternInstance lattice;   // the L of the middle G_1 arrow
  Point x;                   // chi_zeta(1)
  OrderedConfig zeta_moved;  // t_x(zeta), anchored at its own first point
};

BlowupTriple blowup_iso(const GroupoidElement& g);
GroupoidElement blowup_inverse(const BlowupTriple& t);

}  // namespace mbg

#endif
