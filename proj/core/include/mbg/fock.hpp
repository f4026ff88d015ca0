#ifndef MBG_FOCK_HPP
#define MBG_FOCK_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "mbg/car.hpp"
#include "mbg/pattern.hpp"

namespace mbg {

/// Basis of the N-fermion sector: all N-subsets of the lattice in
/// lexicographic order of their ascending index tuples.
struct SectorBasis {
  PatternPtr lattice;
  int N = 0;
  std::vector<std::vector<int>> states;
  std::map<std::vector<int>, int> index;

  int dim() const { return static_cast<int>(states.size()); }
  int row_of(const std::vector<int>& sorted_subset) const;
};

SectorBasis make_sector_basis(PatternPtr lattice, int N);

/// Sparse Hermitian-flagged operator on a sector. Entries are coordinate
/// triplets, deduplicated and sorted by (row, col).
struct SectorOperator {
  int dim = 0;
  std::vector<std::tuple<int, int, Complex>> entries;
  bool hermitian = false;

  void add(int row, int col, Complex v) { entries.emplace_back(row, col, v); }
  void compress();
  Eigen::MatrixXcd dense() const;
};

SectorOperator from_dense(const Eigen::MatrixXcd& m, double drop_tol = 0.0);
double max_entry_diff(const SectorOperator& a, const SectorOperator& b);
SectorOperator multiply(const SectorOperator& a, const SectorOperator& b);

/// Frame vector |U, chi_U>: returns (canonical row index, sign), where the
/// sign is the parity of the permutation relating chi_U to the ascending
/// order. Scalar products of frame vectors follow from it.
std::pair<int, int> frame_vector(const SectorBasis& basis, const std::vector<int>& u_order);

/// <U,chi_U | V,chi_V> = (-1)^{chi_U^{-1} o chi_V} delta_{U,V}, as an integer.
int frame_inner(const SectorBasis& basis, const std::vector<int>& u_order,
                const std::vector<int>& v_order);

/// Sector image of a canonical gauge-invariant monomial: zero when n > N, the
/// rank-one matrix unit when n = N, and the dressing sum over spectator sets
/// Gamma disjoint from J u J' when n < N.
SectorOperator represent_monomial(const SectorBasis& basis, const Monomial& m);

// ---- Full-Fock oracle -----------------------------------------------------
// Occupation-number construction over bitmask states with a fixed ascending
// generator order and sign strings. This is the independent second route used
// to pin every symbolic identity.

/// Applies the canonical monomial word to |mask>; returns {sign, out_mask}
/// with sign = 0 when the word annihilates the state.
std::pair<int, std::uint64_t> apply_monomial_mask(const Monomial& m, std::uint64_t mask);

/// pi_eta(A) as a dense 2^|L| matrix. Throws "oracle limit" for |L| > 14.
Eigen::MatrixXcd full_fock_matrix(const CARElement& a);

/// Matrix-free application of pi_eta(A) to a 2^|L| vector.
Eigen::VectorXcd full_fock_apply(const CARElement& a, const Eigen::VectorXcd& v);

/// Sparse image pi_eta(A)|mask> as a map out_mask -> amplitude.
std::map<std::uint64_t, Complex> apply_car_to_mask(const CARElement& a, std::uint64_t mask);

/// tr(pi_eta(A)) / 2^|L| without materializing the matrix.
Complex fock_trace_normalized(const CARElement& a);

/// Restriction of a full-Fock matrix to the N-particle block in the basis
/// order of `basis`.
SectorOperator sector_restrict(const Eigen::MatrixXcd& fock, const SectorBasis& basis);

/// Matrix-free sector restriction of pi_eta(A): column `col` of the block.
Eigen::VectorXcd sector_column(const CARElement& a, const SectorBasis& basis, int col);

// ---- Symmetric operator presentation ---------------------------------------

/// Bi-equivariant coefficient table F_{U,U'}(chi,chi') of the symmetric
/// operator presentation: the value at canonical orderings is entry/N! and
/// other orderings contribute their signs.
struct SymmetricCoefficients {
  const SectorBasis* basis = nullptr;
  Eigen::MatrixXcd raw;  // plain matrix elements per (U, U') pair

  Complex eval(const std::vector<int>& u_order, const std::vector<int>& v_order) const;
};

SymmetricCoefficients symmetric_coefficients(const SectorBasis& basis, const SectorOperator& f);
SectorOperator reconstruct_from_coefficients(const SymmetricCoefficients& table);
SymmetricCoefficients convolve_coefficients(const SymmetricCoefficients& f,
                                            const SymmetricCoefficients& g);

std::int64_t binomial(int n, int k);

/// Enumerate all k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

}  // namespace mbg

#endif
