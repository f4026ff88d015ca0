#include "mbg/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mbg/expression.hpp"
#include "mbg/permutation.hpp"

namespace mbg {

BiEquivariantCoefficient coeff_from_potential(const ManyBodyPotential& pot) {
  BiEquivariantCoefficient c;
  c.arity = pot.arity;
  c.range = pot.range;
  c.kernel = [w = pot.w](const OrderedConfig& xi, const OrderedConfig& zeta) {
    std::vector<Point> xs, ys;
    for (int k = 0; k < xi.arity(); ++k) xs.push_back(xi.point(k));
    for (int k = 0; k < zeta.arity(); ++k) ys.push_back(zeta.point(k));
    return w(xs, ys);
  };
  return c;
}

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm s = perm_identity(n);
  do out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

}  // namespace

BiEquivariantCoefficient antisymmetrize(
    std::function<Complex(const OrderedConfig&, const OrderedConfig&)> raw, int arity,
    double range) {
  BiEquivariantCoefficient c;
  c.arity = arity;
  c.range = range;
  c.kernel = [raw = std::move(raw), arity](const OrderedConfig& xi, const OrderedConfig& zeta) {
    const auto perms = all_perms(arity);
    Complex acc(0.0, 0.0);
    for (const Perm& s1 : perms) {
      OrderedConfig lx = deck_transform(xi, s1);
      double sg1 = perm_sign(s1);
      for (const Perm& s2 : perms) {
        OrderedConfig rz = deck_transform(zeta, perm_inverse(s2));
        acc += sg1 * static_cast<double>(perm_sign(s2)) * raw(lx, rz);
      }
    }
    double fact = 1.0;
    for (int i = 2; i <= arity; ++i) fact *= i;
    return acc / (fact * fact);
  };
  return c;
}

BiEquivariantCoefficient hopping_kernel(double t, double max_dist, double onsite) {
  BiEquivariantCoefficient c;
  c.arity = 1;
  c.range = max_dist;
  c.kernel = [t, max_dist, onsite](const OrderedConfig& xi, const OrderedConfig& zeta) {
    double tol = xi.pat.base->match_tol;
    double d = distance(xi.point(0), zeta.point(0));
    if (d <= tol) return Complex(onsite, 0.0);
    if (d <= max_dist + tol) return Complex(t, 0.0);
    return Complex(0.0, 0.0);
  };
  return c;
}

BiEquivariantCoefficient diagonal_kernel(int arity, std::function<double(double)> w,
                                         double range) {
  BiEquivariantCoefficient c;
  c.arity = arity;
  c.range = range;
  c.kernel = [w = std::move(w), arity](const OrderedConfig& xi, const OrderedConfig& zeta) {
    const double tol = xi.pat.base->match_tol;
    // delta_{V_xi, V_zeta} with the relative ordering sign.
    Perm rel(arity);
    std::vector<bool> used(arity, false);
    for (int k = 0; k < arity; ++k) {
      int hit = -1;
      for (int j = 0; j < arity; ++j) {
        if (used[j]) continue;
        if (distance(zeta.point(k), xi.point(j)) <= tol) { hit = j; break; }
      }
      if (hit < 0) return Complex(0.0, 0.0);
      used[hit] = true;
      rel[k] = hit;
    }
    std::vector<Point> pts;
    for (int k = 0; k < arity; ++k) pts.push_back(xi.point(k));
    return Complex(perm_sign(rel) * w(diameter(pts)), 0.0);
  };
  return c;
}

namespace {

double pair_diameter(const Pattern& p, const std::vector<int>& j1, const std::vector<int>& j2) {
  std::vector<Point> pts;
  for (int i : j1) pts.push_back(p.points[i]);
  for (int i : j2) pts.push_back(p.points[i]);
  return diameter(pts);
}

/// Anchored canonical representative pair for subsets (J, J').
OrderedPair anchored_pair(const PatternPtr& lattice, const std::vector<int>& j,
                          const std::vector<int>& jp) {
  PatternInstance inst;
  inst.base = lattice;
  inst.offset = lattice->points[j.front()];
  return OrderedPair{make_config(inst, j), make_config(inst, jp)};
}

/// Kernel value at the anchored canonical representative, with a small cache
/// keyed by the quantized anchored coordinates. Signs never enter the cache.
class KernelCache {
 public:
  KernelCache(const BiEquivariantCoefficient& c, const PatternPtr& lattice)
      : coeff_(c), lattice_(lattice) {}

  Complex value(const std::vector<int>& j, const std::vector<int>& jp) {
    std::vector<std::int64_t> key;
    const Point& anchor = lattice_->points[j.front()];
    const double q = std::max(lattice_->match_tol, 1e-12);
    for (int i : j)
      for (int k = 0; k < lattice_->dim; ++k)
        key.push_back(std::llround((lattice_->points[i][k] - anchor[k]) / q));
    for (int i : jp)
      for (int k = 0; k < lattice_->dim; ++k)
        key.push_back(std::llround((lattice_->points[i][k] - anchor[k]) / q));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    OrderedPair pr = anchored_pair(lattice_, j, jp);
    Complex v = coeff_.kernel(pr.left, pr.right);
    cache_.emplace(std::move(key), v);
    return v;
  }

 private:
  const BiEquivariantCoefficient& coeff_;
  PatternPtr lattice_;
  std::map<std::vector<std::int64_t>, Complex> cache_;
};

int concat_sign(const std::vector<int>& part, const std::vector<int>& gamma,
                std::vector<int>& merged) {
  merged = part;
  merged.insert(merged.end(), gamma.begin(), gamma.end());
  std::vector<int> sorted = merged;
  std::sort(sorted.begin(), sorted.end());
  int s = relative_sign(sorted, merged);
  merged = std::move(sorted);
  return s;
}

}  // namespace

void for_each_subset_pair(
    const PatternPtr& lattice, int n, double range,
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
  const int L = lattice->size();
  const double tol = lattice->match_tol;
  for (const auto& j : subsets_of_size(L, n)) {
    if (pair_diameter(*lattice, j, {}) > range + tol) continue;
    // Candidate sites within range of every point of J.
    std::vector<int> cand;
    for (int q = 0; q < L; ++q) {
      bool ok = true;
      for (int i : j)
        if (distance(lattice->points[q], lattice->points[i]) > range + tol) { ok = false; break; }
      if (ok) cand.push_back(q);
    }
    for (const auto& pick : subsets_of_size(static_cast<int>(cand.size()), n)) {
      std::vector<int> jp(pick.size());
      for (std::size_t i = 0; i < pick.size(); ++i) jp[i] = cand[pick[i]];
      if (pair_diameter(*lattice, j, jp) > range + tol) continue;
      fn(j, jp);
    }
  }
}

SectorOperator assemble_sector(const std::vector<BiEquivariantCoefficient>& coeffs,
                               PatternPtr lattice, int N) {
  SectorBasis basis = make_sector_basis(lattice, N);
  SectorOperator op;
  op.dim = basis.dim();
  const int L = lattice->size();
  for (const auto& c : coeffs) {
    if (c.range > lattice->window_radius)
      throw std::invalid_argument("range exceeding window");
    if (c.arity > N) continue;
    KernelCache cache(c, lattice);
    for_each_subset_pair(lattice, c.arity, c.range, [&](const std::vector<int>& j,
                                                 const std::vector<int>& jp) {
      Complex v = cache.value(j, jp);
      if (v == Complex(0.0, 0.0)) return;
      if (c.arity == N) {
        op.add(basis.row_of(j), basis.row_of(jp), v);
        return;
      }
      std::vector<int> support = j;
      support.insert(support.end(), jp.begin(), jp.end());
      std::sort(support.begin(), support.end());
      support.erase(std::unique(support.begin(), support.end()), support.end());
      std::vector<int> rest;
      for (int q = 0; q < L; ++q)
        if (!std::binary_search(support.begin(), support.end(), q)) rest.push_back(q);
      for (const auto& pick : subsets_of_size(static_cast<int>(rest.size()), N - c.arity)) {
        std::vector<int> gamma(pick.size());
        for (std::size_t i = 0; i < pick.size(); ++i) gamma[i] = rest[pick[i]];
        std::vector<int> row, col;
        int srow = concat_sign(j, gamma, row);
        int scol = concat_sign(jp, gamma, col);
        op.add(basis.row_of(row), basis.row_of(col), static_cast<double>(srow * scol) * v);
      }
    });
  }
  op.compress();
  Eigen::MatrixXcd d = op.dense();
  op.hermitian = (d - d.adjoint()).cwiseAbs().maxCoeff() <= 1e-12;
  return op;
}

CARElement hamiltonian_car_element(const std::vector<BiEquivariantCoefficient>& coeffs,
                                   PatternPtr lattice) {
  CARElement h(lattice);
  for (const auto& c : coeffs) {
    KernelCache cache(c, lattice);
    for_each_subset_pair(lattice, c.arity, c.range, [&](const std::vector<int>& j,
                                                 const std::vector<int>& jp) {
      Complex v = cache.value(j, jp);
      if (v != Complex(0.0, 0.0)) h.add_term(Monomial{j, jp}, v);
    });
  }
  return h;
}

CARElement hamiltonian_truncation(const std::vector<BiEquivariantCoefficient>& coeffs,
                                  PatternPtr lattice, const std::vector<int>& support_sites) {
  double max_range = 0.0;
  for (const auto& c : coeffs) max_range = std::max(max_range, c.range);
  for (int s : support_sites)
    if (lattice->points[s].norm() + max_range > lattice->window_radius + lattice->match_tol)
      throw std::invalid_argument("window margin insufficient");
  // Keep the terms meeting the range-neighborhood of the support.
  auto near_support = [&](const std::vector<int>& sites) {
    for (int q : sites)
      for (int s : support_sites)
        if (distance(lattice->points[q], lattice->points[s]) <=
            max_range + lattice->match_tol)
          return true;
    return false;
  };
  CARElement h(lattice);
  for (const auto& c : coeffs) {
    KernelCache cache(c, lattice);
    for_each_subset_pair(lattice, c.arity, c.range, [&](const std::vector<int>& j,
                                                 const std::vector<int>& jp) {
      std::vector<int> all = j;
      all.insert(all.end(), jp.begin(), jp.end());
      if (!near_support(all)) return;
      Complex v = cache.value(j, jp);
      if (v != Complex(0.0, 0.0)) h.add_term(Monomial{j, jp}, v);
    });
  }
  return h;
}

CARElement ad_hamiltonian(const std::vector<BiEquivariantCoefficient>& coeffs,
                          const CARElement& a) {
  std::vector<int> support;
  for (const auto& [m, cc] : a.terms()) {
    (void)cc;
    support.insert(support.end(), m.create.begin(), m.create.end());
    support.insert(support.end(), m.annihilate.begin(), m.annihilate.end());
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  CARElement h = hamiltonian_truncation(coeffs, a.lattice(), support);
  return ad(h, a);
}

double bump_profile(double t) {
  if (t <= 1.0) return 1.0;
  if (t >= 2.0) return 0.0;
  double s = t - 1.0;
  return 1.0 - s * s * (3.0 - 2.0 * s);
}

SectorOperator approximate_unit(const SectorBasis& basis, double epsilon,
                                const std::function<double(double)>& profile) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  SectorOperator op;
  op.dim = basis.dim();
  for (int i = 0; i < basis.dim(); ++i) {
    std::vector<Point> pts;
    for (int q : basis.states[i]) pts.push_back(basis.lattice->points[q]);
    double v = profile(epsilon * diameter(pts));
    if (v != 0.0) op.add(i, i, Complex(v, 0.0));
  }
  op.compress();
  op.hermitian = true;
  return op;
}

SectorOperator rank_one_operator(const SectorBasis& basis, const RankOneClass& k) {
  auto [row, srow] = frame_vector(basis, k.row_order);
  auto [col, scol] = frame_vector(basis, k.col_order);
  SectorOperator op;
  op.dim = basis.dim();
  op.add(row, col, Complex(srow * scol, 0.0));
  op.compress();
  return op;
}

SectorOperator derivation_commutator(const std::vector<BiEquivariantCoefficient>& coeffs,
                                     const SectorBasis& basis, const RankOneClass& k) {
  SectorOperator h = assemble_sector(coeffs, basis.lattice, basis.N);
  Eigen::MatrixXcd kd = rank_one_operator(basis, k).dense();
  Eigen::MatrixXcd hd = h.dense();
  return from_dense(Complex(0.0, 1.0) * (kd * hd - hd * kd));
}

SectorOperator derivation_direct(const std::vector<BiEquivariantCoefficient>& coeffs,
                                 const SectorBasis& basis, const RankOneClass& k) {
  auto [row, srow] = frame_vector(basis, k.row_order);
  auto [col, scol] = frame_vector(basis, k.col_order);
  const double kf = srow * scol;
  const std::vector<int>& vrow = basis.states[row];
  const std::vector<int>& vcol = basis.states[col];
  SectorOperator op;
  op.dim = basis.dim();
  const Complex I(0.0, 1.0);
  for (const auto& c : coeffs) {
    if (c.arity > basis.N) continue;
    KernelCache cache(c, basis.lattice);
    for_each_subset_pair(basis.lattice, c.arity, c.range, [&](const std::vector<int>& j,
                                                       const std::vector<int>& jp) {
      Complex v = cache.value(j, jp);
      if (v == Complex(0.0, 0.0)) return;
      // K H: J c V_col, Gamma = V_col \ J disjoint from J'.
      if (std::includes(vcol.begin(), vcol.end(), j.begin(), j.end())) {
        std::vector<int> gamma;
        std::set_difference(vcol.begin(), vcol.end(), j.begin(), j.end(),
                            std::back_inserter(gamma));
        bool clash = false;
        for (int q : jp)
          if (std::binary_search(gamma.begin(), gamma.end(), q)) { clash = true; break; }
        if (!clash) {
          std::vector<int> w;
          int s1 = concat_sign(j, gamma, w);       // chi_J v chi_Gamma vs V_col
          std::vector<int> wcol;
          int s2 = concat_sign(jp, gamma, wcol);   // chi_J' v chi_Gamma vs W
          (void)w;
          op.add(row, basis.row_of(wcol), I * kf * static_cast<double>(s1 * s2) * v);
        }
      }
      // H K: J' c V_row, Gamma = V_row \ J' disjoint from J.
      if (std::includes(vrow.begin(), vrow.end(), jp.begin(), jp.end())) {
        std::vector<int> gamma;
        std::set_difference(vrow.begin(), vrow.end(), jp.begin(), jp.end(),
                            std::back_inserter(gamma));
        bool clash = false;
        for (int q : j)
          if (std::binary_search(gamma.begin(), gamma.end(), q)) { clash = true; break; }
        if (!clash) {
          std::vector<int> u;
          int s1 = concat_sign(j, gamma, u);       // chi_J v chi_Gamma vs U
          std::vector<int> w;
          int s2 = concat_sign(jp, gamma, w);      // chi_J' v chi_Gamma vs V_row
          (void)w;
          op.add(basis.row_of(u), col, -I * kf * static_cast<double>(s1 * s2) * v);
        }
      }
    });
  }
  op.compress();
  return op;
}

using nlohmann::json;

namespace {

BiEquivariantCoefficient block_from_json(const json& b) {
  const std::string kind = b.at("kind").get<std::string>();
  const double range = b.at("range").get<double>();
  const json params = b.value("params", json::object());
  if (kind == "hopping") {
    double t = params.value("t", 1.0);
    double onsite = params.value("onsite", 0.0);
    return hopping_kernel(t, range, onsite);
  }
  if (kind == "pair_diagonal") {
    double u = params.value("u", -1.0);
    double dist = params.value("dist", 1.0);
    double tol = params.value("tol", 0.25);
    return diagonal_kernel(2, [u, dist, tol](double d) {
      return std::abs(d - dist) <= tol ? u : 0.0;
    }, range);
  }
  if (kind == "potential_table") {
    int arity = b.value("arity", 2);
    std::vector<std::pair<double, double>> table;
    for (const auto& row : params.at("points"))
      table.emplace_back(row[0].get<double>(), row[1].get<double>());
    std::sort(table.begin(), table.end());
    return diagonal_kernel(arity, [table](double d) {
      // nearest tabulated diameter
      double best = 0.0, bd = std::numeric_limits<double>::infinity();
      for (const auto& [x, v] : table) {
        if (std::abs(x - d) < bd) { bd = std::abs(x - d); best = v; }
      }
      return bd <= 0.5 ? best : 0.0;
    }, range);
  }
  if (kind == "expression") {
    int arity = b.value("arity", 2);
    std::string expr = params.at("expr").get<std::string>();
    if (arity == 1) {
      Expression e = Expression::parse(expr, {"r"});
      double onsite = params.value("onsite", 0.0);
      BiEquivariantCoefficient c;
      c.arity = 1;
      c.range = range;
      c.kernel = [e, range, onsite](const OrderedConfig& xi, const OrderedConfig& zeta) {
        double tol = xi.pat.base->match_tol;
        double d = distance(xi.point(0), zeta.point(0));
        if (d <= tol) return Complex(onsite, 0.0);
        if (d > range + tol) return Complex(0.0, 0.0);
        return Complex(e.eval({d}), 0.0);
      };
      return c;
    }
    Expression e = Expression::parse(expr, {"d"});
    return diagonal_kernel(arity, [e](double d) { return e.eval({d}); }, range);
  }
  throw std::invalid_argument("unknown hamiltonian block kind: " + kind);
}

}  // namespace

std::vector<BiEquivariantCoefficient> parse_hamiltonian_spec(const std::string& text) {
  json j = json::parse(text);
  const json& blocks = j.is_array() ? j : j.at("blocks");
  std::vector<BiEquivariantCoefficient> out;
  for (const auto& b : blocks) out.push_back(block_from_json(b));
  return out;
}

std::vector<BiEquivariantCoefficient> load_hamiltonian_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_hamiltonian_spec(ss.str());
}

}  // namespace mbg
