#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "mbg/pattern_io.hpp"
#include "mbg/sector_io.hpp"
#include "mbg/spectra.hpp"

using namespace mbg;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/mbg_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("pattern json round trip") {
  TempFile f("pattern.json");
  Pattern p = generate_perturbed_periodic(2, 0.2, 9, 4.0);
  save_pattern(p, f.path);
  Pattern q = load_pattern(f.path);
  REQUIRE(q.points.size() == p.points.size());
  CHECK(q.dim == 2);
  CHECK(q.r == p.r);
  CHECK(q.R == p.R);
  CHECK(q.window_radius == p.window_radius);
  for (std::size_t i = 0; i < p.points.size(); ++i)
    CHECK((p.points[i] - q.points[i]).norm() == 0.0);
}

TEST_CASE("pattern csv round trip") {
  TempFile f("pattern.csv");
  Pattern p = generate_periodic(2, 3.0);
  save_pattern(p, f.path);
  Pattern q = load_pattern(f.path);
  REQUIRE(q.points.size() == p.points.size());
  CHECK(q.dim == 2);
  CHECK(q.window_radius == p.window_radius);
}

TEST_CASE("ordered config json round trip") {
  TempFile fp("cfg_pattern.json");
  TempFile fc("cfg.json");
  Pattern p = generate_periodic(1, 5.0);
  save_pattern(p, fp.path);
  auto pp = std::make_shared<Pattern>(p);
  OrderedConfig cfg = make_config(PatternInstance::untranslated(pp), {7, 3, 5});
  save_config_json(cfg, fp.path, fc.path);
  OrderedConfig back = load_config_json(fc.path);
  CHECK(back.order == cfg.order);
  CHECK(back.subset == cfg.subset);
  CHECK(back.pat.base->size() == p.size());
}

TEST_CASE("matrix market round trip") {
  TempFile f("op.mtx");
  SectorOperator op;
  op.dim = 4;
  op.add(0, 1, Complex(0.5, -0.25));
  op.add(1, 0, Complex(0.5, 0.25));
  op.add(3, 3, Complex(-2.0, 0.0));
  op.compress();
  op.hermitian = true;
  save_matrix_market(op, f.path);
  SectorOperator back = load_matrix_market(f.path);
  CHECK(back.dim == 4);
  CHECK(back.hermitian);
  CHECK(max_entry_diff(op, back) == 0.0);
}

TEST_CASE("basis csv export") {
  TempFile f("basis.csv");
  auto lattice = std::make_shared<Pattern>(generate_periodic(1, 2.0));
  save_basis_csv(make_sector_basis(lattice, 2), f.path);
  std::ifstream in(f.path);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 10);  // C(5, 2)
}

TEST_CASE("island detection splits separated spectra") {
  std::vector<double> vals;
  for (int i = 0; i < 10; ++i) vals.push_back(-8.0 + 0.01 * i);
  for (int i = 0; i < 30; ++i) vals.push_back(-2.0 + 0.05 * i);
  auto islands = detect_islands(vals, 5.0);
  CHECK(islands.front() == 0);
  CHECK(islands[9] == 0);
  CHECK(islands[10] == 1);
  CHECK(islands.back() == 1);
}

TEST_CASE("selfbinding with t = 0 gives the potential multiset") {
  SelfBindingConfig cfg;
  cfg.sites = 8;
  cfg.N = 2;
  cfg.t = 0.0;
  cfg.u = -3.0;
  SelfBindingReport rep = run_selfbinding_experiment(cfg);
  // Diagonal matrix: 7 nearest-neighbor pairs at -3, the other 21 at 0.
  int at_u = 0, at_zero = 0;
  for (const auto& row : rep.rows) {
    if (std::abs(row.eigenvalue - cfg.u) < 1e-12) ++at_u;
    if (std::abs(row.eigenvalue) < 1e-12) ++at_zero;
  }
  CHECK(at_u == 7);
  CHECK(at_zero == 21);
}

TEST_CASE("selfbinding dimension cap") {
  SelfBindingConfig cfg;
  cfg.sites = 30;
  cfg.N = 3;
  cfg.dim_cap = 100;
  CHECK_THROWS_AS(run_selfbinding_experiment(cfg), std::invalid_argument);
}

TEST_CASE("mean pair distance of a localized pair state") {
  auto lattice = std::make_shared<Pattern>(generate_periodic(1, 5.0));
  SectorBasis b = make_sector_basis(lattice, 2);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(b.dim());
  // The state |{x, x+1}| has pair distance exactly 1.
  v(b.row_of({2, 3})) = Complex(1.0, 0.0);
  CHECK(mean_pair_distance(b, v) == doctest::Approx(1.0));
}
