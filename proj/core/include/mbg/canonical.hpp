#ifndef MBG_CANONICAL_HPP
#define MBG_CANONICAL_HPP

#include <vector>

#include "mbg/galgebra.hpp"

namespace mbg {

/// Node labels for a perturbed periodic pattern: point i carries the Z^d
/// label of the unique node whose eps-ball contains it. Computed once and
/// cached immutably.
struct LabeledPattern {
  PatternPtr pattern;
  double epsilon = 0.0;
  std::vector<std::vector<long>> labels;  // per point, d integers
};

/// Builds the labeling l_L. Throws "not perturbed periodic" when some ball
/// holds zero or two points or a point strays past eps < 1/2.
LabeledPattern label_bijection(PatternPtr pattern);

/// Label of a point in a translated instance: l_{L-y}(x-y) = l_L(x) - l_L(y).
/// The instance offset must itself be (within tol of) a lattice point or the
/// origin.
std::vector<long> instance_label(const LabeledPattern& lp, const PatternInstance& inst,
                                 int base_index);

/// Canonical order of a subset by iterated lexicographic-minimum extraction
/// over the label coordinates, taken in the order given by index_order
/// (defaults to 1,2,...,d).
std::vector<int> canonical_order(const LabeledPattern& lp, const PatternInstance& inst,
                                 const std::vector<int>& subset,
                                 const std::vector<int>& index_order = {});

/// True when both sides of the arrow carry their canonical orders.
bool is_canonical_arrow(const LabeledPattern& lp, const GroupoidElement& g);

/// Phi(f) = N! f on canonically ordered arrows (zero off the reduced
/// groupoid), and its inverse with the sign factors; mutually inverse algebra
/// morphisms between the bi-equivariant and the reduced picture.
GFunction reduce_function(const GFunction& f, const LabeledPattern& lp);
GFunction inflate_function(const GFunction& fbar, const LabeledPattern& lp);

/// Convolution over the reduced groupoid: the fiber sum keeps only
/// canonically ordered arrows.
Complex reduced_convolve_value(const GFunction& fbar, const GFunction& gbar,
                               const GroupoidElement& alpha, const LabeledPattern& lp);

}  // namespace mbg

#endif
