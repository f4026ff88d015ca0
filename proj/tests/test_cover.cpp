#include <doctest.h>

#include "mbg/cover.hpp"
#include "mbg/pattern.hpp"

using namespace mbg;

namespace {
Point pt(double x) {
  Point p(1);
  p[0] = x;
  return p;
}

PatternPtr chain() { return std::make_shared<Pattern>(generate_periodic(1, 10.0)); }
}  // namespace

TEST_CASE("canonical bijection needs eps below r/2") {
  CHECK_THROWS_AS(canonical_bijection({pt(0)}, {pt(0)}, 0.3, 0.5), std::invalid_argument);
}

TEST_CASE("canonical bijection error message") {
  CHECK_THROWS_WITH_AS(canonical_bijection({pt(0), pt(1)}, {pt(0.3), pt(0.7)}, 0.2, 0.5),
                       "not a cover neighborhood", std::invalid_argument);
}

TEST_CASE("config construction validates indices") {
  PatternPtr p = chain();
  PatternInstance inst = PatternInstance::untranslated(p);
  CHECK_THROWS_AS(make_config(inst, {3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_config(inst, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(make_config(inst, {99}), std::invalid_argument);
  // Arity-0 sentinel config is admitted.
  OrderedConfig empty = make_config(inst, {});
  CHECK(empty.arity() == 0);
  CHECK(empty.canonical_sign() == 1);
}

TEST_CASE("deck transform checks arity") {
  PatternPtr p = chain();
  OrderedConfig c = make_config(PatternInstance::untranslated(p), {3, 7});
  CHECK_THROWS_AS(deck_transform(c, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(deck_transform(c, {0, 0}), std::invalid_argument);
}

TEST_CASE("canonical sign counts inversions") {
  PatternPtr p = chain();
  PatternInstance inst = PatternInstance::untranslated(p);
  CHECK(make_config(inst, {3, 7, 9}).canonical_sign() == 1);
  CHECK(make_config(inst, {7, 3, 9}).canonical_sign() == -1);
  CHECK(make_config(inst, {9, 7, 3}).canonical_sign() == -1);
  CHECK(make_config(inst, {9, 3, 7}).canonical_sign() == 1);
}

TEST_CASE("translation leaving the window throws") {
  PatternPtr p = chain();
  OrderedConfig c = make_config(PatternInstance::untranslated(p), {20});  // at x = 10
  CHECK_THROWS_WITH_AS(translate_config(c, pt(-5.0)), "window exhausted",
                       std::invalid_argument);
}

TEST_CASE("wedge requires a shared pattern") {
  PatternPtr p = chain(), q = chain();
  OrderedConfig a = make_config(PatternInstance::untranslated(p), {3});
  OrderedConfig b = make_config(PatternInstance::untranslated(q), {4});
  CHECK_THROWS_WITH_AS(wedge(a, b), "pattern mismatch", std::invalid_argument);
}

TEST_CASE("wedge with the empty sentinel config") {
  PatternPtr p = chain();
  PatternInstance inst = PatternInstance::untranslated(p);
  OrderedConfig a = make_config(inst, {3, 5});
  OrderedConfig none = make_config(inst, {});
  auto w = wedge(a, none);
  REQUIRE(w);
  CHECK(config_equal(*w, a));
}

TEST_CASE("anchor at a later point") {
  PatternPtr p = chain();
  OrderedConfig c = make_config(PatternInstance::untranslated(p), {12, 9});
  OrderedConfig a = anchor_at(c, 1);
  CHECK(a.point(1).norm() == 0.0);
  CHECK(a.point(0)[0] == doctest::Approx(p->points[12][0] - p->points[9][0]));
}

TEST_CASE("base window margin measures base coordinates") {
  PatternPtr p = chain();
  OrderedConfig edge = make_config(PatternInstance::untranslated(p), {20});  // x = 10
  CHECK(base_window_margin(edge, 0.0));
  CHECK(!base_window_margin(edge, 1.0));
  OrderedConfig center = make_config(PatternInstance::untranslated(p), {10});  // x = 0
  CHECK(base_window_margin(center, 9.0));
}
