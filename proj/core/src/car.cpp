#include "mbg/car.hpp"

#include <algorithm>
#include <stdexcept>

#include "mbg/fock.hpp"

namespace mbg {

void CARElement::add_term(const Monomial& m, Complex c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != Complex(0.0, 0.0)) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
}

Complex CARElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

CARElement& CARElement::operator+=(const CARElement& o) {
  if (!lattice_) lattice_ = o.lattice_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CARElement& CARElement::operator-=(const CARElement& o) {
  if (!lattice_) lattice_ = o.lattice_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CARElement& CARElement::operator*=(Complex c) {
  if (c == Complex(0.0, 0.0)) { terms_.clear(); return *this; }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CARElement operator+(CARElement a, const CARElement& b) { a += b; return a; }
CARElement operator-(CARElement a, const CARElement& b) { a -= b; return a; }
CARElement operator*(Complex c, CARElement a) { a *= c; return a; }

double max_term_diff(const CARElement& a, const CARElement& b) {
  CARElement d = a;
  d -= b;
  double m = 0.0;
  for (const auto& [mono, c] : d.terms()) m = std::max(m, std::abs(c));
  return m;
}

namespace {

struct Op {
  int site;
  bool dag;
};
using Word = std::vector<Op>;

/// Reduce a generator word to the symmetric presentation by elementary
/// anticommutations: creators ascending on the left, annihilators descending
/// on the right (which is a_J'(chi) with chi ascending).
void accumulate_word(Word w, Complex coeff, std::map<Monomial, Complex>& out) {
  struct Task { Word w; Complex c; };
  std::vector<Task> stack;
  stack.push_back({std::move(w), coeff});
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    bool reduced = true;
    for (std::size_t i = 0; i + 1 < t.w.size(); ++i) {
      const Op &x = t.w[i], &y = t.w[i + 1];
      if (!x.dag && y.dag) {
        reduced = false;
        if (x.site == y.site) {
          // a_x a*_x = 1 - a*_x a_x : one contracted branch, one swapped.
          Word contracted = t.w;
          contracted.erase(contracted.begin() + i, contracted.begin() + i + 2);
          stack.push_back({std::move(contracted), t.c});
        }
        std::swap(t.w[i], t.w[i + 1]);
        stack.push_back({std::move(t.w), -t.c});
        break;
      }
      if (x.dag == y.dag && x.site == y.site) {
        reduced = false;  // nilpotency: a a = 0, a* a* = 0
        break;
      }
      bool disorder = x.dag ? (x.site > y.site) : (x.site < y.site);
      if (x.dag == y.dag && disorder) {
        reduced = false;
        std::swap(t.w[i], t.w[i + 1]);
        stack.push_back({std::move(t.w), -t.c});
        break;
      }
    }
    if (!reduced) continue;
    Monomial m;
    for (const Op& op : t.w)
      if (op.dag) m.create.push_back(op.site);
    for (auto it = t.w.rbegin(); it != t.w.rend(); ++it)
      if (!it->dag) m.annihilate.push_back(it->site);
    auto slot = out.find(m);
    if (slot == out.end()) out.emplace(std::move(m), t.c);
    else slot->second += t.c;
  }
}

Word word_of(const Monomial& m) {
  Word w;
  for (int s : m.create) w.push_back({s, true});
  for (auto it = m.annihilate.rbegin(); it != m.annihilate.rend(); ++it)
    w.push_back({*it, false});
  return w;
}

void check_sites(const PatternPtr& lattice, const std::vector<int>& sites) {
  for (int s : sites)
    if (s < 0 || s >= lattice->size())
      throw std::invalid_argument("site index out of range");
}

}  // namespace

CARElement car_identity(PatternPtr lattice) {
  CARElement a(std::move(lattice));
  a.add_term(Monomial{}, Complex(1.0, 0.0));
  return a;
}

CARElement car_create(PatternPtr lattice, int site) {
  check_sites(lattice, {site});
  CARElement a(std::move(lattice));
  a.add_term(Monomial{{site}, {}}, Complex(1.0, 0.0));
  return a;
}

CARElement car_annihilate(PatternPtr lattice, int site) {
  check_sites(lattice, {site});
  CARElement a(std::move(lattice));
  a.add_term(Monomial{{}, {site}}, Complex(1.0, 0.0));
  return a;
}

CARElement car_monomial(PatternPtr lattice, const std::vector<int>& create_order,
                        const std::vector<int>& annihilate_order) {
  check_sites(lattice, create_order);
  check_sites(lattice, annihilate_order);
  Word w;
  for (int s : create_order) w.push_back({s, true});
  for (auto it = annihilate_order.rbegin(); it != annihilate_order.rend(); ++it)
    w.push_back({*it, false});
  std::map<Monomial, Complex> out;
  accumulate_word(std::move(w), Complex(1.0, 0.0), out);
  CARElement a(std::move(lattice));
  for (const auto& [m, c] : out) a.add_term(m, c);
  return a;
}

CARElement car_number(PatternPtr lattice, const std::vector<int>& subset) {
  return car_monomial(std::move(lattice), subset, subset);
}

CARElement multiply(const CARElement& a, const CARElement& b) {
  if (a.lattice() && b.lattice() && a.lattice().get() != b.lattice().get())
    throw std::invalid_argument("pattern mismatch");
  std::map<Monomial, Complex> out;
  for (const auto& [ma, ca] : a.terms()) {
    Word wa = word_of(ma);
    for (const auto& [mb, cb] : b.terms()) {
      Word w = wa;
      Word wb = word_of(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      accumulate_word(std::move(w), ca * cb, out);
    }
  }
  CARElement prod(a.lattice() ? a.lattice() : b.lattice());
  for (const auto& [m, c] : out) prod.add_term(m, c);
  return prod;
}

CARElement star(const CARElement& a) {
  CARElement out(a.lattice());
  for (const auto& [m, c] : a.terms())
    out.add_term(Monomial{m.annihilate, m.create}, std::conj(c));
  return out;
}

Complex vacuum_state(const CARElement& a) { return a.coefficient(Monomial{}); }

Complex trace_state(const CARElement& a) {
  if (!a.lattice()) throw std::invalid_argument("element has no lattice");
  return fock_trace_normalized(a);
}

CARElement ad(const CARElement& q, const CARElement& a) {
  CARElement comm = multiply(a, q) - multiply(q, a);
  comm *= Complex(0.0, 1.0);
  return comm;
}

std::optional<int> gi_degree(const CARElement& a) {
  int deg = std::numeric_limits<int>::max();
  for (const auto& [m, c] : a.terms()) {
    (void)c;
    if (!m.gauge_invariant()) return std::nullopt;
    deg = std::min(deg, static_cast<int>(m.create.size()));
  }
  if (a.terms().empty()) return 0;
  return deg;
}

}  // namespace mbg
