#include <benchmark/benchmark.h>

#include "mbg/galgebra.hpp"
#include "mbg/hamiltonian.hpp"
#include "mbg/pattern.hpp"
#include "mbg/spectra.hpp"
#include "mbg/suites.hpp"

using namespace mbg;

namespace {

PatternPtr chain(int sites) {
  double half = (sites - 1) / 2.0;
  std::vector<Point> pts;
  for (int i = 0; i < sites; ++i) {
    Point p(1);
    p[0] = i - half;
    pts.push_back(p);
  }
  return std::make_shared<Pattern>(make_pattern(1, 0.4, 0.75, half + 2.5, pts));
}

CARElement random_element(const PatternPtr& lattice, int terms, SplitMix64& rng) {
  CARElement a(lattice);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int k = 0; k < 2; ++k) {
      m.create.push_back(static_cast<int>(rng.below(lattice->size())));
      m.annihilate.push_back(static_cast<int>(rng.below(lattice->size())));
    }
    std::sort(m.create.begin(), m.create.end());
    m.create.erase(std::unique(m.create.begin(), m.create.end()), m.create.end());
    std::sort(m.annihilate.begin(), m.annihilate.end());
    m.annihilate.erase(std::unique(m.annihilate.begin(), m.annihilate.end()),
                       m.annihilate.end());
    a.add_term(m, Complex(1.0, 0.5));
  }
  return a;
}

void BM_car_multiply(benchmark::State& state) {
  PatternPtr lattice = chain(static_cast<int>(state.range(0)));
  SplitMix64 rng(11);
  CARElement a = random_element(lattice, 6, rng);
  CARElement b = random_element(lattice, 6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_car_multiply)->Arg(8)->Arg(12);

void BM_full_fock_apply(benchmark::State& state) {
  PatternPtr lattice = chain(static_cast<int>(state.range(0)));
  SplitMix64 rng(12);
  CARElement a = random_element(lattice, 6, rng);
  Eigen::VectorXcd v = Eigen::VectorXcd::Random(1 << lattice->size());
  for (auto _ : state) benchmark::DoNotOptimize(full_fock_apply(a, v));
}
BENCHMARK(BM_full_fock_apply)->Arg(10)->Arg(12);

void BM_assemble_sector(benchmark::State& state) {
  PatternPtr lattice = chain(static_cast<int>(state.range(0)));
  std::vector<BiEquivariantCoefficient> q{
      hopping_kernel(1.0, 1.25),
      diagonal_kernel(2, [](double d) { return d <= 1.25 ? -2.0 : 0.0; }, 1.5)};
  for (auto _ : state) benchmark::DoNotOptimize(assemble_sector(q, lattice, 2));
}
BENCHMARK(BM_assemble_sector)->Arg(16)->Arg(24);

void BM_pattern_metric(benchmark::State& state) {
  Pattern a = generate_random_displaced(1, 0.4, 1, 8.0);
  Pattern b = generate_random_displaced(1, 0.4, 2, 8.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(pattern_metric(a, b, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_pattern_metric)->Arg(64)->Arg(256);

void BM_convolve_value(benchmark::State& state) {
  PatternPtr lattice = chain(25);
  SplitMix64 rng(13);
  GroupoidElement alpha = sample_arrow(lattice, 2, rng, 1.5);
  GFunction f = seed_to_function(
      diagonal_kernel(2, [](double d) { return d <= 2.25 ? 1.0 : 0.0; }, 2.5));
  for (auto _ : state) benchmark::DoNotOptimize(convolve_value(f, f, alpha));
}
BENCHMARK(BM_convolve_value);

void BM_selfbinding(benchmark::State& state) {
  SelfBindingConfig cfg;
  cfg.sites = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_selfbinding_experiment(cfg));
}
BENCHMARK(BM_selfbinding)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
