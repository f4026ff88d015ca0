#include <doctest.h>

#include "mbg/expression.hpp"
#include "mbg/hamiltonian.hpp"
#include "mbg/pattern.hpp"
#include "mbg/spectra.hpp"

using namespace mbg;

namespace {
PatternPtr chain(int sites = 9) {
  double half = (sites - 1) / 2.0;
  std::vector<Point> pts;
  for (int i = 0; i < sites; ++i) {
    Point p(1);
    p[0] = i - half;
    pts.push_back(p);
  }
  return std::make_shared<Pattern>(make_pattern(1, 0.4, 0.75, half + 2.5, pts));
}
}  // namespace

TEST_CASE("hopping assembles the canonical tridiagonal matrix") {
  PatternPtr L = chain(6);
  SectorOperator h = assemble_sector({hopping_kernel(0.5, 1.25)}, L, 1);
  Eigen::MatrixXcd m = h.dense();
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      CHECK(m(r, c) == Complex(std::abs(r - c) == 1 ? 0.5 : 0.0, 0.0));
}

TEST_CASE("range above the window is rejected") {
  PatternPtr L = chain(6);
  CHECK_THROWS_WITH_AS(assemble_sector({hopping_kernel(1.0, 50.0)}, L, 1),
                       "range exceeding window", std::invalid_argument);
}

TEST_CASE("eigensolve closed forms") {
  SectorOperator two;
  two.dim = 2;
  two.add(0, 1, Complex(0.75, 0.0));
  two.add(1, 0, Complex(0.75, 0.0));
  two.compress();
  two.hermitian = true;
  EigenSystem sys = eigensolve(two);
  CHECK(sys.values[0] == doctest::Approx(-0.75));
  CHECK(sys.values[1] == doctest::Approx(0.75));

  SectorOperator id;
  id.dim = 4;
  for (int i = 0; i < 4; ++i) id.add(i, i, Complex(1.0, 0.0));
  id.compress();
  EigenSystem si = eigensolve(id);
  for (double v : si.values) CHECK(v == doctest::Approx(1.0));

  SectorOperator bad;
  bad.dim = 2;
  bad.add(0, 1, Complex(1.0, 0.0));
  bad.compress();
  CHECK_THROWS_WITH_AS(eigensolve(bad), "non-Hermitian input", std::invalid_argument);
}

TEST_CASE("random Hermitian residual bound") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(50, 50);
  m = (m + m.adjoint()).eval();
  EigenSystem sys = eigensolve(from_dense(m));
  CHECK(sys.max_residual <= 1e-8 * m.cwiseAbs().maxCoeff() * 50);
}

TEST_CASE("approximate unit tends to the identity") {
  PatternPtr L = chain(7);
  SectorBasis b = make_sector_basis(L, 2);
  SectorOperator u = approximate_unit(b, 1e-9);
  CHECK((u.dense() - Eigen::MatrixXcd::Identity(b.dim(), b.dim())).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK_THROWS_AS(approximate_unit(b, 0.0), std::invalid_argument);
}

TEST_CASE("bump profile is a C1 cutoff") {
  CHECK(bump_profile(0.0) == 1.0);
  CHECK(bump_profile(1.0) == 1.0);
  CHECK(bump_profile(2.0) == 0.0);
  CHECK(bump_profile(1.5) == doctest::Approx(0.5));
  // C1 at the seams: finite differences of the slope vanish.
  double h = 1e-6;
  CHECK((bump_profile(1.0 + h) - bump_profile(1.0)) / h == doctest::Approx(0.0).epsilon(1e-4));
  CHECK((bump_profile(2.0) - bump_profile(2.0 - h)) / h == doctest::Approx(0.0).epsilon(1e-4));
}

TEST_CASE("hamiltonian truncation demands window margin") {
  PatternPtr L = chain(9);  // window = 6.5, points to +-4
  std::vector<BiEquivariantCoefficient> q{hopping_kernel(1.0, 3.0)};
  CHECK_NOTHROW(hamiltonian_truncation(q, L, {4}));
  std::vector<BiEquivariantCoefficient> wide{hopping_kernel(1.0, 6.0)};
  // 4 + 6 > 6.5: the neighborhood of the outermost site leaves the window.
  CHECK_THROWS_WITH_AS(hamiltonian_truncation(wide, L, {8}),
                       "window margin insufficient", std::invalid_argument);
}

TEST_CASE("spec file parsing covers the four kinds") {
  const char* text = R"json([
    {"kind": "hopping", "range": 1.25, "params": {"t": -1.0}},
    {"kind": "pair_diagonal", "range": 1.5, "params": {"u": -8.0, "dist": 1.0}},
    {"kind": "potential_table", "arity": 2, "range": 2.5,
     "params": {"points": [[1.0, -3.0], [2.0, -1.0]]}},
    {"kind": "expression", "arity": 2, "range": 2.5, "params": {"expr": "-2/(d+1)"}}
  ])json";
  auto coeffs = parse_hamiltonian_spec(text);
  REQUIRE(coeffs.size() == 4);
  CHECK(coeffs[0].arity == 1);
  CHECK(coeffs[1].arity == 2);

  PatternPtr L = chain(7);
  SectorBasis b = make_sector_basis(L, 2);
  SectorOperator h = assemble_sector(coeffs, L, 2);
  CHECK(h.hermitian);
  Eigen::MatrixXcd m = h.dense();
  // Diagonal entry of a nearest-neighbor pair: -8 (pair_diagonal) - 3
  // (table) - 2/2 (expression) = -12.
  int row = b.row_of({0, 1});
  CHECK(m(row, row).real() == doctest::Approx(-12.0));
}

TEST_CASE("expression parser") {
  Expression e = Expression::parse("-2*(d + 1)^2 / 4 + min(d, 3)", {"d"});
  CHECK(e.eval({1.0}) == doctest::Approx(-2.0 * 4.0 / 4.0 + 1.0));
  Expression t = Expression::parse("exp(0) + cos(0) + sqrt(4)", {"d"});
  CHECK(t.eval({0.0}) == doctest::Approx(4.0));
  CHECK_THROWS_AS(Expression::parse("q + 1", {"d"}), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("(d", {"d"}), std::invalid_argument);
}

TEST_CASE("derivation paths agree on an explicit class") {
  PatternPtr L = chain(7);
  std::vector<BiEquivariantCoefficient> q{
      hopping_kernel(0.5, 1.25),
      diagonal_kernel(2, [](double d) { return d <= 1.25 ? -2.0 : 0.0; }, 1.5)};
  SectorBasis b = make_sector_basis(L, 2);
  RankOneClass k{{2, 1}, {3, 4}};
  CHECK(max_entry_diff(derivation_direct(q, b, k), derivation_commutator(q, b, k)) == 0.0);
}

TEST_CASE("rank one operator folds frame signs") {
  PatternPtr L = chain(5);
  SectorBasis b = make_sector_basis(L, 2);
  SectorOperator plus = rank_one_operator(b, {{0, 1}, {2, 3}});
  SectorOperator minus = rank_one_operator(b, {{1, 0}, {2, 3}});
  CHECK(max_entry_diff(plus, from_dense(-minus.dense())) == 0.0);
}
