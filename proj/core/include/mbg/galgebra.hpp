#ifndef MBG_GALGEBRA_HPP
#define MBG_GALGEBRA_HPP

#include <functional>
#include <vector>

#include "mbg/fock.hpp"
#include "mbg/groupoid.hpp"
#include "mbg/hamiltonian.hpp"

namespace mbg {

/// Compactly supported function on the arrows of G_N. Dual representation:
/// either an explicit support list (arrows matched by their anchored point
/// coordinates, within match_tol) or a pure kernel with declared range.
struct GFunction {
  int arity = 1;
  double range = 0.0;
  std::function<Complex(const GroupoidElement&)> kernel;
  std::vector<std::pair<GroupoidElement, Complex>> support;

  bool has_kernel() const { return static_cast<bool>(kernel); }
  Complex eval(const GroupoidElement& alpha) const;
};

GFunction delta_function(const GroupoidElement& alpha, Complex value);

/// Indicator of the unit space (the convolution identity).
GFunction unit_indicator(int arity);

/// All arrows (unit, eta) out of a unit whose joint diameter with the unit's
/// subset stays within `range`; every ordering of eta is enumerated.
std::vector<GroupoidElement> range_fiber(const GroupoidElement& unit, double range);

/// (f * g)(alpha) = sum_{beta in r^{-1}(r(alpha))} f(beta) g(beta^{-1} alpha),
/// the r-fiber form; the sum is truncated to the window with a margin check.
Complex convolve_value(const GFunction& f, const GFunction& g, const GroupoidElement& alpha);

/// The equal s-fiber form of the convolution, used as a cross-check.
Complex convolve_value_source_fiber(const GFunction& f, const GFunction& g,
                                    const GroupoidElement& alpha);

/// Convolution restricted to the r-fiber of `fiber_unit`, materialized as a
/// support-list function over the arrows with enough window margin for the
/// combined ranges (the interior of the fiber).
GFunction convolve(const GFunction& f, const GFunction& g, const GroupoidElement& fiber_unit);

/// f*(alpha) = conj(f(alpha^{-1})).
GFunction involution(const GFunction& f);

/// Conditional expectation onto the bi-equivariant subalgebra:
/// E(f)(alpha) = (1/N!^2) sum_{s1,s2} (-1)^{s1}(-1)^{s2} f(s1 . alpha . s2).
GFunction conditional_expectation(const GFunction& f);

/// Left regular representation on the window N-sector of `frame`:
/// entry(U, V) = (1/N!) sum over both orderings of sign * sign * f(arrow).
/// For bi-equivariant f this is N! * f at the anchored canonical arrow.
SectorOperator left_regular(const GFunction& f, const PatternInstance& frame,
                            const SectorBasis& basis);

/// f = (1/N!) q on anchored arrows; left_regular of it reproduces
/// assemble_sector([q], L, N) exactly.
GFunction seed_to_function(const BiEquivariantCoefficient& q);

struct CovarianceReport {
  double max_deviation = 0.0;
  int compared_entries = 0;
  bool pass = false;
};

/// Checks T_a^* pi_L(f) T_a = pi_{L-a}(f) for arity-1 functions: assembles
/// both sides (the translate is built as an independent pattern), relabels
/// and reports the max entrywise deviation on the interior block.
CovarianceReport covariance_check(const GFunction& f, const PatternPtr& lattice,
                                  const Point& a, double tol = 1e-12);

}  // namespace mbg

#endif
