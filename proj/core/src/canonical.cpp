#include "mbg/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mbg {

LabeledPattern label_bijection(PatternPtr pattern) {
  LabeledPattern lp;
  lp.epsilon = 0.0;
  std::map<std::vector<long>, int> seen;
  lp.labels.reserve(pattern->points.size());
  for (int i = 0; i < pattern->size(); ++i) {
    const Point& p = pattern->points[i];
    std::vector<long> n(pattern->dim);
    double dev = 0.0;
    for (int k = 0; k < pattern->dim; ++k) {
      n[k] = std::lround(p[k]);
      dev += (p[k] - n[k]) * (p[k] - n[k]);
    }
    dev = std::sqrt(dev);
    if (dev >= 0.5) throw std::invalid_argument("not perturbed periodic");
    if (!seen.emplace(n, i).second) throw std::invalid_argument("not perturbed periodic");
    lp.epsilon = std::max(lp.epsilon, dev);
    lp.labels.push_back(std::move(n));
  }
  lp.pattern = std::move(pattern);
  return lp;
}

std::vector<long> instance_label(const LabeledPattern& lp, const PatternInstance& inst,
                                 int base_index) {
  if (inst.base.get() != lp.pattern.get())
    throw std::invalid_argument("labeling belongs to a different pattern");
  std::vector<long> l = lp.labels[base_index];
  if (inst.offset.norm() <= lp.pattern->match_tol) return l;
  auto anchor = lp.pattern->find_point(inst.offset);
  if (!anchor) throw std::invalid_argument("instance offset is not a lattice point");
  const std::vector<long>& la = lp.labels[*anchor];
  for (std::size_t k = 0; k < l.size(); ++k) l[k] -= la[k];
  return l;
}

std::vector<int> canonical_order(const LabeledPattern& lp, const PatternInstance& inst,
                                 const std::vector<int>& subset,
                                 const std::vector<int>& index_order) {
  std::vector<int> cols = index_order;
  if (cols.empty()) {
    cols.resize(lp.pattern->dim);
    for (int k = 0; k < lp.pattern->dim; ++k) cols[k] = k;
  }
  // Iterated minimum extraction over label coordinates in the given index
  // order, i.e. a lexicographic sort keyed by the reordered label.
  std::vector<int> order = subset;
  auto key = [&](int i) {
    const std::vector<long>& l = lp.labels[i];
    std::vector<long> k(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) k[c] = l[cols[c]];
    return k;
  };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return key(a) < key(b); });
  (void)inst;  // labels of a translate shift uniformly; the order is unchanged
  return order;
}

bool is_canonical_arrow(const LabeledPattern& lp, const GroupoidElement& g) {
  std::vector<int> cx = canonical_order(lp, g.xi.pat, g.xi.subset);
  std::vector<int> cz = canonical_order(lp, g.zeta.pat, g.zeta.subset);
  return g.xi.order == cx && g.zeta.order == cz;
}

GFunction reduce_function(const GFunction& f, const LabeledPattern& lp) {
  GFunction out;
  out.arity = f.arity;
  out.range = f.range;
  double fact = 1.0;
  for (int i = 2; i <= f.arity; ++i) fact *= i;
  out.kernel = [f, lp, fact](const GroupoidElement& alpha) {
    if (!is_canonical_arrow(lp, alpha)) return Complex(0.0, 0.0);
    return fact * f.eval(alpha);
  };
  return out;
}

GFunction inflate_function(const GFunction& fbar, const LabeledPattern& lp) {
  GFunction out;
  out.arity = fbar.arity;
  out.range = fbar.range;
  double fact = 1.0;
  for (int i = 2; i <= fbar.arity; ++i) fact *= i;
  out.kernel = [fbar, lp, fact](const GroupoidElement& alpha) {
    // s1 = barchi_xi^{-1} o chi_xi and s2 = chi_zeta^{-1} o barchi_zeta move
    // the arrow onto its canonical representative.
    std::vector<int> cx = canonical_order(lp, alpha.xi.pat, alpha.xi.subset);
    std::vector<int> cz = canonical_order(lp, alpha.zeta.pat, alpha.zeta.subset);
    const int n = alpha.arity();
    Perm s1(n), s2(n);
    for (int k = 0; k < n; ++k) {
      s1[k] = static_cast<int>(std::find(cx.begin(), cx.end(), alpha.xi.order[k]) - cx.begin());
      s2[k] = static_cast<int>(std::find(alpha.zeta.order.begin(), alpha.zeta.order.end(),
                                         cz[k]) - alpha.zeta.order.begin());
    }
    double sg = perm_sign(s1) * perm_sign(s2);
    GroupoidElement canon = two_action(s1, alpha, s2);
    return sg / fact * fbar.eval(canon);
  };
  return out;
}

Complex reduced_convolve_value(const GFunction& fbar, const GFunction& gbar,
                               const GroupoidElement& alpha, const LabeledPattern& lp) {
  Complex acc(0.0, 0.0);
  for (const GroupoidElement& beta : range_fiber(range(alpha), fbar.range)) {
    if (!is_canonical_arrow(lp, beta)) continue;
    Complex vf = fbar.eval(beta);
    if (vf == Complex(0.0, 0.0)) continue;
    acc += vf * gbar.eval(make_element(beta.zeta, alpha.zeta));
  }
  return acc;
}

}  // namespace mbg
