#ifndef MBG_CAR_HPP
#define MBG_CAR_HPP

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "mbg/pattern.hpp"

namespace mbg {

using Complex = std::complex<double>;

/// Normal-ordered monomial a*_J(chi_J) a_J'(chi_J') stored against the
/// canonical ascending orderings of both index sets. Either side may be
/// empty (a_empty = 1).
struct Monomial {
  std::vector<int> create;      // J, ascending site indices
  std::vector<int> annihilate;  // J', ascending site indices

  bool operator<(const Monomial& o) const {
    if (create != o.create) return create < o.create;
    return annihilate < o.annihilate;
  }
  bool operator==(const Monomial& o) const {
    return create == o.create && annihilate == o.annihilate;
  }
  bool gauge_invariant() const { return create.size() == annihilate.size(); }
};

/// Finite linear combination of canonical monomials over a fixed finite
/// lattice. Signs arising from non-canonical orderings are folded in at
/// construction; coefficients of exactly zero are dropped.
class CARElement {
 public:
  CARElement() = default;
  explicit CARElement(PatternPtr lattice) : lattice_(std::move(lattice)) {}

  const PatternPtr& lattice() const { return lattice_; }
  const std::map<Monomial, Complex>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Monomial& m, Complex c);
  Complex coefficient(const Monomial& m) const;

  CARElement& operator+=(const CARElement& o);
  CARElement& operator-=(const CARElement& o);
  CARElement& operator*=(Complex c);

 private:
  PatternPtr lattice_;
  std::map<Monomial, Complex> terms_;
};

CARElement operator+(CARElement a, const CARElement& b);
CARElement operator-(CARElement a, const CARElement& b);
CARElement operator*(Complex c, CARElement a);

/// Largest coefficient magnitude of a - b; 0 for equal elements.
double max_term_diff(const CARElement& a, const CARElement& b);

// Constructors for generators and monomials.
CARElement car_identity(PatternPtr lattice);
CARElement car_create(PatternPtr lattice, int site);
CARElement car_annihilate(PatternPtr lattice, int site);

/// a*_J(chi_J) a_J'(chi_J') for arbitrary orderings (given as site-index
/// sequences); the sign folds into the canonical coefficient during the
/// normal-ordering reduction.
CARElement car_monomial(PatternPtr lattice, const std::vector<int>& create_order,
                        const std::vector<int>& annihilate_order);

/// n_J = a*_J(chi) a_J(chi), independent of the ordering.
CARElement car_number(PatternPtr lattice, const std::vector<int>& subset);

/// Product in the symmetric presentation. Signs are produced constructively
/// by elementary anticommutations, never from a closed form.
CARElement multiply(const CARElement& a, const CARElement& b);

/// Involution: star(a*_J(chi) a_J'(chi')) = a*_J'(chi') a_J(chi).
CARElement star(const CARElement& a);

/// Vacuum state: the scalar coefficient c_{empty,empty}.
Complex vacuum_state(const CARElement& a);

/// Unique tracial state, computed as the full-Fock matrix trace divided by
/// 2^|L| through the oracle representation. Throws "oracle limit" for
/// lattices above 14 sites.
Complex trace_state(const CARElement& a);

/// ad_Q(A) = i [A, Q]. Q is a (truncated) Hamiltonian given as a CARElement.
CARElement ad(const CARElement& q, const CARElement& a);

/// Minimal n carrying nonzero (n, n)-arity terms when a is gauge invariant;
/// std::nullopt when some term has |J| != |J'|.
std::optional<int> gi_degree(const CARElement& a);

}  // namespace mbg

#endif
