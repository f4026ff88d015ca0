#include "mbg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "mbg/hamiltonian.hpp"
#include "mbg/pattern_io.hpp"

namespace mbg {

EigenSystem eigensolve(const SectorOperator& op, bool with_vectors, int dim_cap) {
  if (op.dim > dim_cap) throw std::invalid_argument("sector dimension exceeds cap");
  Eigen::MatrixXcd h = op.dense();
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("non-Hermitian input");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      h, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  EigenSystem sys;
  sys.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
  if (with_vectors) {
    sys.vectors = solver.eigenvectors();
    double hnorm = h.cwiseAbs().maxCoeff();
    for (int k = 0; k < static_cast<int>(sys.values.size()); ++k) {
      double res = (h * sys.vectors.col(k) - sys.values[k] * sys.vectors.col(k)).norm();
      sys.max_residual = std::max(sys.max_residual, res);
    }
    if (op.dim > 0 && sys.max_residual > 1e-8 * std::max(1.0, hnorm))
      throw std::runtime_error("eigensolver residual bound violated");
  }
  return sys;
}

std::vector<int> detect_islands(const std::vector<double>& values, double gap_factor) {
  std::vector<int> island(values.size(), 0);
  if (values.size() < 2) return island;
  std::vector<double> gaps;
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    gaps.push_back(values[i + 1] - values[i]);
  std::vector<double> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  double median = sorted[sorted.size() / 2];
  double threshold = std::max(gap_factor * median, 1e-12);
  int id = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    island[i] = id;
    if (gaps[i] > threshold) ++id;
  }
  island.back() = id;
  return island;
}

double mean_pair_distance(const SectorBasis& basis, const Eigen::VectorXcd& state) {
  double acc = 0.0, norm = 0.0;
  for (int i = 0; i < basis.dim(); ++i) {
    double w = std::norm(state(i));
    if (w == 0.0) continue;
    const auto& sub = basis.states[i];
    double dsum = 0.0;
    int pairs = 0;
    for (std::size_t a = 0; a < sub.size(); ++a)
      for (std::size_t b = a + 1; b < sub.size(); ++b) {
        dsum += distance(basis.lattice->points[sub[a]], basis.lattice->points[sub[b]]);
        ++pairs;
      }
    acc += w * (pairs ? dsum / pairs : 0.0);
    norm += w;
  }
  return norm > 0.0 ? acc / norm : 0.0;
}

SelfBindingReport run_selfbinding_experiment(const SelfBindingConfig& cfg) {
  PatternPtr lattice;
  if (!cfg.pattern_file.empty()) {
    lattice = std::make_shared<Pattern>(load_pattern(cfg.pattern_file));
  } else {
    // Open chain of `sites` sites: the window of Z centered so the chain is
    // symmetric around the origin.
    double half = (cfg.sites - 1) / 2.0;
    std::vector<Point> pts;
    for (int i = 0; i < cfg.sites; ++i) {
      Point p(1);
      p[0] = i - half;
      pts.push_back(p);
    }
    lattice = std::make_shared<Pattern>(
        make_pattern(1, 0.4, 0.75, half + 1.0, std::move(pts)));
  }
  std::vector<BiEquivariantCoefficient> coeffs;
  coeffs.push_back(hopping_kernel(cfg.t, 1.0 + 1e-6));
  if (cfg.u != 0.0) {
    coeffs.push_back(diagonal_kernel(2, [u = cfg.u](double d) {
      return std::abs(d - 1.0) <= 0.25 ? u : 0.0;
    }, 1.5));
  }
  SectorBasis basis = make_sector_basis(lattice, cfg.N);
  if (basis.dim() > cfg.dim_cap)
    throw std::invalid_argument("sector dimension exceeds cap");
  SectorOperator h = assemble_sector(coeffs, lattice, cfg.N);
  EigenSystem sys = eigensolve(h, true, cfg.dim_cap);
  std::vector<int> islands = detect_islands(sys.values, cfg.gap_factor);

  SelfBindingReport rep;
  int n_islands = islands.empty() ? 0 : islands.back() + 1;
  rep.island_mean_distance.assign(n_islands, 0.0);
  rep.island_min.assign(n_islands, std::numeric_limits<double>::infinity());
  rep.island_max.assign(n_islands, -std::numeric_limits<double>::infinity());
  std::vector<int> counts(n_islands, 0);
  for (std::size_t k = 0; k < sys.values.size(); ++k) {
    SelfBindingRow row;
    row.index = static_cast<int>(k);
    row.eigenvalue = sys.values[k];
    row.island = islands[k];
    row.mean_pair_distance = mean_pair_distance(basis, sys.vectors.col(k));
    rep.rows.push_back(row);
    rep.island_mean_distance[row.island] += row.mean_pair_distance;
    rep.island_min[row.island] = std::min(rep.island_min[row.island], row.eigenvalue);
    rep.island_max[row.island] = std::max(rep.island_max[row.island], row.eigenvalue);
    ++counts[row.island];
  }
  for (int i = 0; i < n_islands; ++i)
    if (counts[i]) rep.island_mean_distance[i] /= counts[i];
  if (cfg.u != 0.0 && n_islands > 1) {
    // The bound island is the one whose center sits nearest the pair energy u.
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_islands; ++i) {
      double center = 0.5 * (rep.island_min[i] + rep.island_max[i]);
      if (std::abs(center - cfg.u) < best) {
        best = std::abs(center - cfg.u);
        rep.bound_island = i;
      }
    }
    double gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_islands; ++i) {
      if (i == rep.bound_island) continue;
      gap = std::min(gap, std::max(rep.island_min[i] - rep.island_max[rep.bound_island],
                                   rep.island_min[rep.bound_island] - rep.island_max[i]));
    }
    rep.bound_gap = gap;
  }
  return rep;
}

void write_selfbinding_csv(const SelfBindingReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "index,eigenvalue,island,mean_pair_distance\n";
  out.precision(17);
  for (const auto& r : rep.rows)
    out << r.index << "," << r.eigenvalue << "," << r.island << ","
        << r.mean_pair_distance << "\n";
}

}  // namespace mbg
