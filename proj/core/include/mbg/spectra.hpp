#ifndef MBG_SPECTRA_HPP
#define MBG_SPECTRA_HPP

#include <string>
#include <vector>

#include "mbg/fock.hpp"

namespace mbg {

struct EigenSystem {
  std::vector<double> values;  // ascending
  Eigen::MatrixXcd vectors;    // columns, aligned with values
  double max_residual = 0.0;
};

/// Dense Hermitian eigendecomposition with a residual check
/// ||H v - lambda v|| <= 1e-8 ||H|| per pair. Throws on non-Hermitian input
/// or above the dimension cap.
EigenSystem eigensolve(const SectorOperator& op, bool with_vectors = true,
                       int dim_cap = 6000);

/// Spectral islands: maximal runs separated by gaps larger than gap_factor
/// times the median adjacent spacing. Returns the island id per eigenvalue.
std::vector<int> detect_islands(const std::vector<double>& values, double gap_factor = 5.0);

/// Mean pairwise distance expectation of an N-particle eigenvector.
double mean_pair_distance(const SectorBasis& basis, const Eigen::VectorXcd& state);

struct SelfBindingConfig {
  int sites = 20;
  int N = 2;
  double t = 1.0;
  double u = -8.0;
  double gap_factor = 5.0;
  int dim_cap = 6000;
  std::string pattern_file;  // optional: overrides the default periodic chain
};

struct SelfBindingRow {
  int index;
  double eigenvalue;
  int island;
  double mean_pair_distance;
};

struct SelfBindingReport {
  std::vector<SelfBindingRow> rows;
  std::vector<double> island_mean_distance;  // per island id
  std::vector<double> island_min, island_max;
  int bound_island = -1;   // island nearest the pair-energy u, -1 when u = 0
  double bound_gap = 0.0;  // spectral distance from the bound island to the rest
};

/// Assembles H = hopping(t) + u * delta_{|x-y|=1}, eigensolves the N-particle
/// sector, detects spectral islands and computes per-state mean pair
/// distances.
SelfBindingReport run_selfbinding_experiment(const SelfBindingConfig& cfg);

void write_selfbinding_csv(const SelfBindingReport& rep, const std::string& path);

}  // namespace mbg

#endif
