#include "mbg/fock.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "mbg/permutation.hpp"

namespace mbg {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int SectorBasis::row_of(const std::vector<int>& sorted_subset) const {
  auto it = index.find(sorted_subset);
  if (it == index.end()) throw std::invalid_argument("subset not in sector basis");
  return it->second;
}

SectorBasis make_sector_basis(PatternPtr lattice, int N) {
  if (N < 0 || N > lattice->size())
    throw std::invalid_argument("particle number exceeds lattice size");
  SectorBasis b;
  b.N = N;
  b.states = subsets_of_size(lattice->size(), N);
  b.lattice = std::move(lattice);
  for (int i = 0; i < b.dim(); ++i) b.index.emplace(b.states[i], i);
  return b;
}

void SectorOperator::compress() {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  std::vector<std::tuple<int, int, Complex>> out;
  for (const auto& e : entries) {
    if (!out.empty() && std::get<0>(out.back()) == std::get<0>(e) &&
        std::get<1>(out.back()) == std::get<1>(e)) {
      std::get<2>(out.back()) += std::get<2>(e);
    } else {
      out.push_back(e);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& e) { return std::get<2>(e) == Complex(0.0, 0.0); }),
            out.end());
  entries = std::move(out);
}

Eigen::MatrixXcd SectorOperator::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [r, c, v] : entries) m(r, c) += v;
  return m;
}

SectorOperator from_dense(const Eigen::MatrixXcd& m, double drop_tol) {
  SectorOperator op;
  op.dim = static_cast<int>(m.rows());
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r)
      if (std::abs(m(r, c)) > drop_tol) op.add(r, c, m(r, c));
  op.compress();
  return op;
}

double max_entry_diff(const SectorOperator& a, const SectorOperator& b) {
  return (a.dense() - b.dense()).cwiseAbs().maxCoeff();
}

SectorOperator multiply(const SectorOperator& a, const SectorOperator& b) {
  if (a.dim != b.dim) throw std::invalid_argument("operator dimension mismatch");
  return from_dense(a.dense() * b.dense());
}

std::pair<int, int> frame_vector(const SectorBasis& basis, const std::vector<int>& u_order) {
  if (static_cast<int>(u_order.size()) != basis.N)
    throw std::invalid_argument("arity mismatch");
  std::vector<int> sorted = u_order;
  std::sort(sorted.begin(), sorted.end());
  int row = basis.row_of(sorted);
  return {row, relative_sign(sorted, u_order)};
}

int frame_inner(const SectorBasis& basis, const std::vector<int>& u_order,
                const std::vector<int>& v_order) {
  auto [ru, su] = frame_vector(basis, u_order);
  auto [rv, sv] = frame_vector(basis, v_order);
  if (ru != rv) return 0;
  return su * sv;
}

SectorOperator represent_monomial(const SectorBasis& basis, const Monomial& m) {
  if (!m.gauge_invariant())
    throw std::invalid_argument("sector representation needs a gauge-invariant monomial");
  const int n = static_cast<int>(m.create.size());
  const int N = basis.N;
  const int L = basis.lattice->size();
  if (N > L) throw std::invalid_argument("particle number exceeds lattice size");
  SectorOperator op;
  op.dim = basis.dim();
  if (n > N) return op;
  std::vector<int> support = m.create;
  support.insert(support.end(), m.annihilate.begin(), m.annihilate.end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<int> rest;
  for (int i = 0; i < L; ++i)
    if (!std::binary_search(support.begin(), support.end(), i)) rest.push_back(i);
  // Spectator sum over Gamma disjoint from J u J' (empty when n = N).
  for (const auto& pick : subsets_of_size(static_cast<int>(rest.size()), N - n)) {
    std::vector<int> gamma(pick.size());
    for (std::size_t i = 0; i < pick.size(); ++i) gamma[i] = rest[pick[i]];
    std::vector<int> row_order = m.create;
    row_order.insert(row_order.end(), gamma.begin(), gamma.end());
    std::vector<int> col_order = m.annihilate;
    col_order.insert(col_order.end(), gamma.begin(), gamma.end());
    auto [row, srow] = frame_vector(basis, row_order);
    auto [col, scol] = frame_vector(basis, col_order);
    op.add(row, col, Complex(srow * scol, 0.0));
  }
  op.compress();
  return op;
}

std::pair<int, std::uint64_t> apply_monomial_mask(const Monomial& m, std::uint64_t mask) {
  int sign = 1;
  auto parity_below = [&](int site) {
    std::uint64_t below = mask & ((1ull << site) - 1ull);
    return (std::popcount(below) & 1) ? -1 : 1;
  };
  // a_J'(chi_asc) = a_{j'_n} ... a_{j'_1}: annihilate ascending sites last
  // first, i.e. apply a_{j'_1} ... then a_{j'_n} right-to-left on the ket:
  // rightmost operator acts first.
  for (int site : m.annihilate) {
    if (!(mask >> site & 1ull)) return {0, 0};
    sign *= parity_below(site);
    mask &= ~(1ull << site);
  }
  for (auto it = m.create.rbegin(); it != m.create.rend(); ++it) {
    int site = *it;
    if (mask >> site & 1ull) return {0, 0};
    sign *= parity_below(site);
    mask |= 1ull << site;
  }
  return {sign, mask};
}

namespace {
int oracle_sites(const CARElement& a) {
  if (!a.lattice()) throw std::invalid_argument("element has no lattice");
  int L = a.lattice()->size();
  if (L > 14) throw std::invalid_argument("oracle limit");
  return L;
}
}  // namespace

Eigen::MatrixXcd full_fock_matrix(const CARElement& a) {
  const int L = oracle_sites(a);
  const std::uint64_t dim = 1ull << L;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [mono, coeff] : a.terms()) {
    for (std::uint64_t mask = 0; mask < dim; ++mask) {
      auto [sign, out] = apply_monomial_mask(mono, mask);
      if (sign != 0) m(out, mask) += coeff * static_cast<double>(sign);
    }
  }
  return m;
}

Eigen::VectorXcd full_fock_apply(const CARElement& a, const Eigen::VectorXcd& v) {
  const int L = oracle_sites(a);
  const std::uint64_t dim = 1ull << L;
  if (v.size() != static_cast<Eigen::Index>(dim))
    throw std::invalid_argument("vector dimension mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (const auto& [mono, coeff] : a.terms()) {
    for (std::uint64_t mask = 0; mask < dim; ++mask) {
      if (v(mask) == Complex(0.0, 0.0)) continue;
      auto [sign, res] = apply_monomial_mask(mono, mask);
      if (sign != 0) out(res) += coeff * static_cast<double>(sign) * v(mask);
    }
  }
  return out;
}

std::map<std::uint64_t, Complex> apply_car_to_mask(const CARElement& a, std::uint64_t mask) {
  std::map<std::uint64_t, Complex> out;
  for (const auto& [mono, coeff] : a.terms()) {
    auto [sign, res] = apply_monomial_mask(mono, mask);
    if (sign == 0) continue;
    auto it = out.find(res);
    if (it == out.end()) out.emplace(res, coeff * static_cast<double>(sign));
    else it->second += coeff * static_cast<double>(sign);
  }
  return out;
}

Complex fock_trace_normalized(const CARElement& a) {
  const int L = oracle_sites(a);
  const std::uint64_t dim = 1ull << L;
  Complex tr(0.0, 0.0);
  for (const auto& [mono, coeff] : a.terms()) {
    for (std::uint64_t mask = 0; mask < dim; ++mask) {
      auto [sign, out] = apply_monomial_mask(mono, mask);
      if (sign != 0 && out == mask) tr += coeff * static_cast<double>(sign);
    }
  }
  return tr / static_cast<double>(dim);
}

namespace {
std::uint64_t mask_of(const std::vector<int>& subset) {
  std::uint64_t m = 0;
  for (int s : subset) m |= 1ull << s;
  return m;
}
}  // namespace

SectorOperator sector_restrict(const Eigen::MatrixXcd& fock, const SectorBasis& basis) {
  SectorOperator op;
  op.dim = basis.dim();
  std::vector<std::uint64_t> masks(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) masks[i] = mask_of(basis.states[i]);
  for (int c = 0; c < op.dim; ++c)
    for (int r = 0; r < op.dim; ++r) {
      Complex v = fock(masks[r], masks[c]);
      if (v != Complex(0.0, 0.0)) op.add(r, c, v);
    }
  op.compress();
  return op;
}

Eigen::VectorXcd sector_column(const CARElement& a, const SectorBasis& basis, int col) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(basis.dim());
  std::uint64_t colmask = mask_of(basis.states[col]);
  std::map<std::uint64_t, int> rows;
  for (int i = 0; i < basis.dim(); ++i) rows.emplace(mask_of(basis.states[i]), i);
  for (const auto& [mono, coeff] : a.terms()) {
    auto [sign, res] = apply_monomial_mask(mono, colmask);
    if (sign == 0) continue;
    auto it = rows.find(res);
    if (it != rows.end()) out(it->second) += coeff * static_cast<double>(sign);
  }
  return out;
}

Complex SymmetricCoefficients::eval(const std::vector<int>& u_order,
                                    const std::vector<int>& v_order) const {
  auto [ru, su] = frame_vector(*basis, u_order);
  auto [rv, sv] = frame_vector(*basis, v_order);
  double fact = 1.0;
  for (int i = 2; i <= basis->N; ++i) fact *= i;
  return static_cast<double>(su * sv) * raw(ru, rv) / fact;
}

SymmetricCoefficients symmetric_coefficients(const SectorBasis& basis, const SectorOperator& f) {
  // The table value at canonical orderings is entry/N!; the raw matrix
  // elements are stored so the reconstruction below is exact.
  SymmetricCoefficients t;
  t.basis = &basis;
  t.raw = f.dense();
  return t;
}

SectorOperator reconstruct_from_coefficients(const SymmetricCoefficients& table) {
  return from_dense(table.raw);
}

SymmetricCoefficients convolve_coefficients(const SymmetricCoefficients& f,
                                            const SymmetricCoefficients& g) {
  if (f.basis != g.basis) throw std::invalid_argument("coefficient tables on different bases");
  SymmetricCoefficients out;
  out.basis = f.basis;
  // (FF')_{U,U'} = sum_{V, chi_V} F_{U,V} F'_{V,U'}: the ordering sum over
  // chi_V contributes a factor N! that cancels one 1/N! normalization, so on
  // raw matrix elements the convolution is the plain matrix product.
  out.raw = f.raw * g.raw;
  return out;
}

}  // namespace mbg
