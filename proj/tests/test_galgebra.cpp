#include <doctest.h>

#include "mbg/galgebra.hpp"
#include "mbg/pattern.hpp"

using namespace mbg;

namespace {
PatternPtr chain() { return std::make_shared<Pattern>(generate_periodic(1, 14.0)); }

int at(const PatternPtr& p, double x) {
  Point q(1);
  q[0] = x;
  return *p->find_point(q);
}
}  // namespace

TEST_CASE("delta function evaluates by coordinates") {
  PatternPtr p = chain();
  PatternInstance inst = PatternInstance::untranslated(p);
  GroupoidElement g = make_element(make_config(inst, {at(p, 2), at(p, 3)}),
                                   make_config(inst, {at(p, 4), at(p, 5)}));
  GFunction f = delta_function(g, Complex(2.0, -1.0));
  CHECK(f.eval(g) == Complex(2.0, -1.0));
  // The same arrow built on a translated frame matches by coordinates.
  PatternInstance shifted = inst;
  shifted.offset = p->points[at(p, 1)];
  GroupoidElement g2 = make_element(make_config(shifted, {at(p, 2), at(p, 3)}),
                                    make_config(shifted, {at(p, 4), at(p, 5)}));
  CHECK(f.eval(g2) == Complex(2.0, -1.0));
  // A different arrow does not.
  GroupoidElement h = make_element(make_config(inst, {at(p, 2), at(p, 3)}),
                                   make_config(inst, {at(p, 5), at(p, 4)}));
  CHECK(f.eval(h) == Complex(0.0, 0.0));
}

TEST_CASE("range fiber enumerates orderings") {
  PatternPtr p = chain();
  PatternInstance inst = PatternInstance::untranslated(p);
  OrderedConfig xi = make_config(inst, {at(p, 0), at(p, 1)});
  GroupoidElement u = make_element(xi, xi);
  auto fiber = range_fiber(u, 1.25);
  // Candidates {-1, 0, 1, 2}; subsets of joint diameter <= bound with both
  // orderings each; the unit itself must be present.
  bool has_unit = false;
  for (const auto& beta : fiber)
    if (element_equal(beta, u)) has_unit = true;
  CHECK(has_unit);
  for (const auto& beta : fiber) CHECK(element_equal(range(beta), u));
}

TEST_CASE("convolution against a delta composes arrows") {
  PatternPtr p = chain();
  PatternInstance inst = PatternInstance::untranslated(p);
  GroupoidElement g = make_element(make_config(inst, {at(p, 0)}),
                                   make_config(inst, {at(p, 1)}));
  GroupoidElement h = make_element(make_config(inst, {at(p, 1)}),
                                   make_config(inst, {at(p, 2)}));
  GFunction fg = delta_function(g, Complex(2.0, 0.0));
  GFunction fh = delta_function(h, Complex(3.0, 0.0));
  GroupoidElement gh = compose(g, h);
  CHECK(convolve_value(fg, fh, gh) == Complex(6.0, 0.0));
  // Off the product arrow the convolution vanishes.
  CHECK(convolve_value(fg, fh, g) == Complex(0.0, 0.0));
}

TEST_CASE("window margin guards the fiber sum") {
  PatternPtr p = chain();
  PatternInstance inst = PatternInstance::untranslated(p);
  int edge = at(p, 14);
  GroupoidElement g = make_element(make_config(inst, {edge}), make_config(inst, {edge}));
  GFunction f = delta_function(g, Complex(1.0, 0.0));
  f.range = 4.0;
  CHECK_THROWS_WITH_AS(convolve_value(f, f, g), "window margin insufficient",
                       std::invalid_argument);
}

TEST_CASE("seeded hopping matches assembly on every entry") {
  PatternPtr p = chain();
  BiEquivariantCoefficient q = hopping_kernel(1.0, 1.25);
  SectorBasis basis = make_sector_basis(p, 1);
  SectorOperator lhs = left_regular(seed_to_function(q), PatternInstance::untranslated(p),
                                    basis);
  SectorOperator rhs = assemble_sector({q}, p, 1);
  CHECK(max_entry_diff(lhs, rhs) == 0.0);
}

TEST_CASE("involution of a support function lists inverse arrows") {
  PatternPtr p = chain();
  PatternInstance inst = PatternInstance::untranslated(p);
  GroupoidElement g = make_element(make_config(inst, {at(p, 0)}),
                                   make_config(inst, {at(p, 2)}));
  GFunction f = delta_function(g, Complex(0.0, 1.0));
  GFunction fi = involution(f);
  CHECK(fi.eval(inverse(g)) == Complex(0.0, -1.0));
  CHECK(fi.eval(g) == Complex(0.0, 0.0));
}

TEST_CASE("covariance check reports deviations") {
  PatternPtr p = chain();
  GFunction f = seed_to_function(hopping_kernel(1.0, 1.25));
  Point a(1);
  a[0] = 2.0;
  CovarianceReport rep = covariance_check(f, p, a);
  CHECK(rep.pass);
  CHECK(rep.compared_entries > 0);
  CHECK(rep.max_deviation == 0.0);
}
