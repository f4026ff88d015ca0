#include <doctest.h>

#include "mbg/canonical.hpp"
#include "mbg/pattern.hpp"

using namespace mbg;

TEST_CASE("labels of the unperturbed plane") {
  auto z2 = std::make_shared<Pattern>(generate_periodic(2, 3.0));
  LabeledPattern lp = label_bijection(z2);
  CHECK(lp.epsilon == 0.0);
  for (int i = 0; i < z2->size(); ++i) {
    CHECK(lp.labels[i][0] == std::lround(z2->points[i][0]));
    CHECK(lp.labels[i][1] == std::lround(z2->points[i][1]));
  }
}

TEST_CASE("non perturbed pattern is rejected") {
  Point a(1), b(1);
  a[0] = 0.0;
  b[0] = 0.45;
  auto bad = std::make_shared<Pattern>(make_pattern(1, 0.1, 1.0, 2.0, {a, b}));
  CHECK_THROWS_WITH_AS(label_bijection(bad), "not perturbed periodic",
                       std::invalid_argument);
}

TEST_CASE("instance labels subtract the anchor label") {
  auto p = std::make_shared<Pattern>(generate_perturbed_periodic(1, 0.2, 5, 8.0));
  LabeledPattern lp = label_bijection(p);
  PatternInstance inst = PatternInstance::untranslated(p);
  int i = 3;
  CHECK(instance_label(lp, inst, i) == lp.labels[i]);
  PatternInstance moved = inst;
  int anchor = 5;
  moved.offset = p->points[anchor];
  auto l = instance_label(lp, moved, i);
  CHECK(l[0] == lp.labels[i][0] - lp.labels[anchor][0]);
  // Offsets that are not lattice points are rejected.
  PatternInstance stray = inst;
  stray.offset = Point::Constant(1, 0.37);
  CHECK_THROWS_AS(instance_label(lp, stray, i), std::invalid_argument);
}

TEST_CASE("canonical order of the Z^2 triple") {
  auto z2 = std::make_shared<Pattern>(generate_periodic(2, 3.0));
  LabeledPattern lp = label_bijection(z2);
  PatternInstance inst = PatternInstance::untranslated(z2);
  auto at = [&](double x, double y) {
    Point p(2);
    p[0] = x;
    p[1] = y;
    return *z2->find_point(p);
  };
  int a = at(0, 0), b = at(1, 0), c = at(0, 1);
  CHECK(canonical_order(lp, inst, {c, b, a}) == std::vector<int>{a, c, b});
  CHECK(canonical_order(lp, inst, {b}) == std::vector<int>{b});
}

TEST_CASE("canonical arrows recognized") {
  auto p = std::make_shared<Pattern>(generate_perturbed_periodic(1, 0.2, 6, 10.0));
  LabeledPattern lp = label_bijection(p);
  PatternInstance inst = PatternInstance::untranslated(p);
  // In 1D the canonical order is ascending coordinate = ascending index.
  GroupoidElement good = make_element(make_config(inst, {4, 5}), make_config(inst, {7, 8}));
  CHECK(is_canonical_arrow(lp, good));
  GroupoidElement bad = make_element(make_config(inst, {4, 5}), make_config(inst, {8, 7}));
  CHECK(!is_canonical_arrow(lp, bad));
}

TEST_CASE("reduce zero is zero and inflate applies signs") {
  auto p = std::make_shared<Pattern>(generate_perturbed_periodic(1, 0.2, 7, 10.0));
  LabeledPattern lp = label_bijection(p);
  PatternInstance inst = PatternInstance::untranslated(p);
  GFunction zero;
  zero.arity = 2;
  zero.range = 3.0;
  zero.kernel = [](const GroupoidElement&) { return Complex(0.0, 0.0); };
  GFunction rz = reduce_function(zero, lp);
  GroupoidElement g = make_element(make_config(inst, {4, 5}), make_config(inst, {6, 7}));
  CHECK(rz.eval(g) == Complex(0.0, 0.0));

  BiEquivariantCoefficient d =
      diagonal_kernel(2, [](double x) { return x <= 2.25 ? 1.0 : 0.0; }, 2.5);
  GFunction f = seed_to_function(d);
  GFunction back = inflate_function(reduce_function(f, lp), lp);
  GroupoidElement swapped =
      make_element(make_config(inst, {5, 4}), make_config(inst, {4, 5}));
  CHECK(std::abs(back.eval(swapped) - f.eval(swapped)) <= 1e-13);
}
