#include <doctest.h>

#include "mbg/fock.hpp"
#include "mbg/pattern.hpp"

using namespace mbg;

namespace {
PatternPtr lattice(int sites = 5) {
  double half = (sites - 1) / 2.0;
  std::vector<Point> pts;
  for (int i = 0; i < sites; ++i) {
    Point p(1);
    p[0] = i - half;
    pts.push_back(p);
  }
  return std::make_shared<Pattern>(make_pattern(1, 0.4, 0.75, half + 2.0, pts));
}
}  // namespace

TEST_CASE("sector basis layout") {
  PatternPtr L = lattice();
  SectorBasis b = make_sector_basis(L, 2);
  CHECK(b.dim() == 10);
  CHECK(b.states.front() == std::vector<int>{0, 1});
  CHECK(b.states.back() == std::vector<int>{3, 4});
  CHECK(b.row_of({1, 3}) > 0);
  CHECK_THROWS_AS(b.row_of({0, 9}), std::invalid_argument);
  CHECK_THROWS_AS(make_sector_basis(L, 6), std::invalid_argument);
}

TEST_CASE("frame vectors and inner products") {
  PatternPtr L = lattice();
  SectorBasis b = make_sector_basis(L, 3);
  auto [row, sign] = frame_vector(b, {2, 0, 1});
  CHECK(row == b.row_of({0, 1, 2}));
  CHECK(sign == 1);  // even permutation
  CHECK(frame_vector(b, {0, 2, 1}).second == -1);
  CHECK(frame_inner(b, {0, 1, 2}, {0, 2, 1}) == -1);
  CHECK(frame_inner(b, {0, 1, 2}, {0, 1, 3}) == 0);
  CHECK_THROWS_AS(frame_vector(b, {0, 1}), std::invalid_argument);
}

TEST_CASE("monomial representation cases") {
  PatternPtr L = lattice();
  SectorBasis b1 = make_sector_basis(L, 1);
  CHECK(represent_monomial(b1, Monomial{{0, 1}, {1, 2}}).entries.empty());

  SectorBasis b2 = make_sector_basis(L, 2);
  SectorOperator rank_one = represent_monomial(b2, Monomial{{0, 1}, {1, 2}});
  REQUIRE(rank_one.entries.size() == 1);
  auto [r, c, v] = rank_one.entries[0];
  CHECK(r == b2.row_of({0, 1}));
  CHECK(c == b2.row_of({1, 2}));
  CHECK(v == Complex(1.0, 0.0));

  CHECK_THROWS_AS(represent_monomial(b2, Monomial{{0}, {}}), std::invalid_argument);

  // Identity monomial dresses to the full identity.
  SectorOperator id = represent_monomial(b2, Monomial{});
  CHECK((id.dense() - Eigen::MatrixXcd::Identity(b2.dim(), b2.dim()))
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("occupation-number action signs") {
  // a*_0 a_1 on |{1}> = +|{0}>; on |{1,2}> = +|{0,2}>; sign string appears
  // once an occupied site sits below the moved one.
  auto [s1, m1] = apply_monomial_mask(Monomial{{0}, {1}}, 0b010);
  CHECK(s1 == 1);
  CHECK(m1 == 0b001);
  auto [s2, m2] = apply_monomial_mask(Monomial{{2}, {0}}, 0b011);
  // a_0 |{0,1}> = +|{1}>, then a*_2 |{1}> = -... bit 1 below 2 is occupied.
  CHECK(s2 == -1);
  CHECK(m2 == 0b110);
  auto [s3, m3] = apply_monomial_mask(Monomial{{0}, {0}}, 0b100);
  CHECK(s3 == 0);
  (void)m3;
}

TEST_CASE("full Fock matrix of small elements") {
  PatternPtr L = lattice(3);
  Eigen::MatrixXcd id = full_fock_matrix(car_identity(L));
  CHECK(id.rows() == 8);
  CHECK((id - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);
  Eigen::MatrixXcd n0 = full_fock_matrix(car_number(L, {0}));
  CHECK(n0.trace() == Complex(4.0, 0.0));
}

TEST_CASE("sector restriction matches direct representation") {
  PatternPtr L = lattice();
  SectorBasis b = make_sector_basis(L, 2);
  Monomial m{{0}, {3}};
  CARElement el(L);
  el.add_term(m, Complex(1.0, 0.0));
  SectorOperator via_oracle = sector_restrict(full_fock_matrix(el), b);
  SectorOperator direct = represent_monomial(b, m);
  CHECK(max_entry_diff(via_oracle, direct) == 0.0);
}

TEST_CASE("coefficient table round trip and normalization") {
  PatternPtr L = lattice();
  SectorBasis b = make_sector_basis(L, 2);
  SectorOperator id = from_dense(Eigen::MatrixXcd::Identity(b.dim(), b.dim()));
  SymmetricCoefficients t = symmetric_coefficients(b, id);
  CHECK(t.eval({0, 1}, {0, 1}) == Complex(0.5, 0.0));
  CHECK(t.eval({1, 0}, {0, 1}) == Complex(-0.5, 0.0));
  CHECK(max_entry_diff(reconstruct_from_coefficients(t), id) == 0.0);
}

TEST_CASE("matrix market style compress") {
  SectorOperator op;
  op.dim = 3;
  op.add(0, 1, Complex(1.0, 0.0));
  op.add(0, 1, Complex(-1.0, 0.0));
  op.add(2, 2, Complex(0.5, 0.0));
  op.compress();
  REQUIRE(op.entries.size() == 1);
  CHECK(std::get<0>(op.entries[0]) == 2);
}

TEST_CASE("binomial and subset enumeration") {
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(subsets_of_size(4, 2).size() == 6);
  CHECK(subsets_of_size(3, 0).size() == 1);
}
