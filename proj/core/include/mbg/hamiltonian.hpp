#ifndef MBG_HAMILTONIAN_HPP
#define MBG_HAMILTONIAN_HPP

#include <functional>
#include <string>
#include <vector>

#include "mbg/car.hpp"
#include "mbg/cover.hpp"
#include "mbg/fock.hpp"

namespace mbg {

/// Kernel on ordered-configuration pairs (xi, zeta) with L_xi = L_zeta,
/// transforming by permutation signs under both deck actions and vanishing
/// beyond diam(V_xi u V_zeta) > range. Kernels must be pure functions of the
/// config points (translation invariant).
struct BiEquivariantCoefficient {
  int arity = 1;
  double range = 0.0;
  std::function<Complex(const OrderedConfig&, const OrderedConfig&)> kernel;
};

/// Translation-invariant k-body potential evaluated on point tuples,
/// antisymmetric under each factor and hermitian under block swap.
struct ManyBodyPotential {
  int arity = 1;
  double range = 0.0;
  std::function<Complex(const std::vector<Point>&, const std::vector<Point>&)> w;
};

/// Coefficient from a potential: kernel(xi, zeta) = w(chi_xi(1..n); chi_zeta(1..n)).
BiEquivariantCoefficient coeff_from_potential(const ManyBodyPotential& w);

/// Sign-averaging projection E onto bi-equivariant kernels,
/// E(f)(xi,zeta) = (1/n!^2) sum_{s1,s2} (-1)^{s1} (-1)^{s2} f(L_{s1} xi, L_{s2^{-1}} zeta).
BiEquivariantCoefficient antisymmetrize(
    std::function<Complex(const OrderedConfig&, const OrderedConfig&)> raw, int arity,
    double range);

// Built-in kernel families.

/// Arity-1 hopping: value `t` for 0 < |x - y| <= max_dist, `onsite` at x = y.
BiEquivariantCoefficient hopping_kernel(double t, double max_dist, double onsite = 0.0);

/// Diagonal kernel (-1)^{chi_xi^{-1} o chi_zeta} delta_{V_xi, V_zeta} w(diam V_xi).
BiEquivariantCoefficient diagonal_kernel(int arity, std::function<double(double)> w,
                                         double range);

/// Enumerate all canonical subset pairs (J, J') of size n with
/// diam(J u J') <= range.
void for_each_subset_pair(
    const PatternPtr& lattice, int n, double range,
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn);

/// Matrix entry convention: entry(U, V) of the assembled operator equals the
/// kernel value at the anchored, canonically-ordered representative pair,
/// Gamma-dressed over spectator subsets for arities below N. (The paper's
/// frame presentation double-counts orderings; on canonical entries its
/// normalization differs by a factor N!, which is pinned here once against
/// the full-Fock oracle.)
SectorOperator assemble_sector(const std::vector<BiEquivariantCoefficient>& coeffs,
                               PatternPtr lattice, int N);

/// The windowed Hamiltonian as a CARElement: one canonical monomial per
/// subset pair with the anchored canonical kernel value as coefficient.
CARElement hamiltonian_car_element(const std::vector<BiEquivariantCoefficient>& coeffs,
                                   PatternPtr lattice);

/// Truncation keeping only the terms whose support meets the range-
/// neighborhood of `support_sites`. Throws when the neighborhood leaves the
/// window ("window margin insufficient").
CARElement hamiltonian_truncation(const std::vector<BiEquivariantCoefficient>& coeffs,
                                  PatternPtr lattice, const std::vector<int>& support_sites);

/// ad_H(A) = i [A, H_trunc] with the truncation taken around supp(A).
CARElement ad_hamiltonian(const std::vector<BiEquivariantCoefficient>& coeffs,
                          const CARElement& a);

/// C^1 polynomial bump: 1 on [0,1], 0 on [2,inf), cubic smoothstep between.
double bump_profile(double t);

/// Quasi-central approximate unit: diagonal entries profile(eps * diam(U)).
SectorOperator approximate_unit(const SectorBasis& basis, double epsilon,
                                const std::function<double(double)>& profile = bump_profile);

/// Rank-one monomial class |xi><zeta| given through frame orders.
struct RankOneClass {
  std::vector<int> row_order;
  std::vector<int> col_order;
};

SectorOperator rank_one_operator(const SectorBasis& basis, const RankOneClass& k);

/// Two evaluation paths for the descended derivation on a monomial class:
/// the direct two-sum formula and i[., assemble_sector(Q)].
SectorOperator derivation_direct(const std::vector<BiEquivariantCoefficient>& coeffs,
                                 const SectorBasis& basis, const RankOneClass& k);
SectorOperator derivation_commutator(const std::vector<BiEquivariantCoefficient>& coeffs,
                                     const SectorBasis& basis, const RankOneClass& k);

/// Hamiltonian spec file: JSON array of blocks
/// {arity, range, kind: hopping|pair_diagonal|potential_table|expression, params}.
std::vector<BiEquivariantCoefficient> load_hamiltonian_spec(const std::string& path);
std::vector<BiEquivariantCoefficient> parse_hamiltonian_spec(const std::string& json_text);

}  // namespace mbg

#endif
