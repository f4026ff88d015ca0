#include "mbg/galgebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "mbg/permutation.hpp"

namespace mbg {

namespace {

/// Anchored point coordinates of both sides, the translation-quotient
/// identity of an arrow.
bool arrow_coords_equal(const GroupoidElement& a, const GroupoidElement& b) {
  if (a.arity() != b.arity()) return false;
  const double tol = std::max(a.match_tol(), b.match_tol());
  for (int k = 0; k < a.arity(); ++k) {
    if (distance(a.xi.point(k), b.xi.point(k)) > tol) return false;
    if (distance(a.zeta.point(k), b.zeta.point(k)) > tol) return false;
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm s = perm_identity(n);
  do out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

double joint_diameter(const GroupoidElement& g) {
  std::vector<Point> pts;
  for (int k = 0; k < g.arity(); ++k) {
    pts.push_back(g.xi.point(k));
    pts.push_back(g.zeta.point(k));
  }
  return diameter(pts);
}

}  // namespace

Complex GFunction::eval(const GroupoidElement& alpha) const {
  if (has_kernel()) {
    if (range > 0.0 && joint_diameter(alpha) > range + alpha.match_tol())
      return Complex(0.0, 0.0);
    return kernel(alpha);
  }
  for (const auto& [beta, v] : support)
    if (arrow_coords_equal(alpha, beta)) return v;
  return Complex(0.0, 0.0);
}

GFunction delta_function(const GroupoidElement& alpha, Complex value) {
  GFunction f;
  f.arity = alpha.arity();
  f.range = joint_diameter(alpha);
  f.support.emplace_back(alpha, value);
  return f;
}

GFunction unit_indicator(int arity) {
  // Range 0 disables the diameter cutoff: units carry subsets of any
  // diameter, and the fiber enumeration widens its bound accordingly.
  GFunction f;
  f.arity = arity;
  f.range = 0.0;
  f.kernel = [](const GroupoidElement& alpha) {
    return is_unit(alpha) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
  };
  return f;
}

std::vector<GroupoidElement> range_fiber(const GroupoidElement& unit, double range) {
  if (!is_unit(unit)) throw std::invalid_argument("fiber base must be a unit");
  const PatternPtr& base = unit.xi.pat.base;
  const double tol = base->match_tol;
  const int N = unit.arity();
  std::vector<Point> upts;
  for (int k = 0; k < N; ++k) upts.push_back(unit.xi.point(k));
  // Arrows whose value can be nonzero for a diam-supported function of this
  // range; the bound is widened to the unit's own diameter so that functions
  // supported on the unit space (e.g. the convolution identity) are reached.
  const double bound = std::max(range, diameter(upts)) + tol;
  std::vector<int> cand;
  for (int q = 0; q < base->size(); ++q) {
    Point p = base->points[q] - unit.xi.pat.offset;
    bool ok = true;
    for (const Point& u : upts)
      if (distance(p, u) > bound) { ok = false; break; }
    if (ok) cand.push_back(q);
  }
  std::vector<GroupoidElement> out;
  const auto perms = all_perms(N);
  for (const auto& pick : subsets_of_size(static_cast<int>(cand.size()), N)) {
    std::vector<int> sub(pick.size());
    for (std::size_t i = 0; i < pick.size(); ++i) sub[i] = cand[pick[i]];
    bool ok = true;
    for (std::size_t i = 0; i < sub.size() && ok; ++i)
      for (std::size_t j = i + 1; j < sub.size() && ok; ++j)
        if (distance(base->points[sub[i]], base->points[sub[j]]) > bound) ok = false;
    if (!ok) continue;
    for (const Perm& s : perms) {
      std::vector<int> order(N);
      for (int k = 0; k < N; ++k) order[k] = sub[s[k]];
      out.push_back(make_element(unit.xi, make_config(unit.xi.pat, order)));
    }
  }
  return out;
}

namespace {

void check_convolution_margin(const GroupoidElement& alpha, double needed) {
  if (!base_window_margin(alpha.xi, needed) || !base_window_margin(alpha.zeta, needed))
    throw std::invalid_argument("window margin insufficient");
}

}  // namespace

Complex convolve_value(const GFunction& f, const GFunction& g, const GroupoidElement& alpha) {
  if (f.arity != g.arity) throw std::invalid_argument("arity mismatch");
  check_convolution_margin(alpha, f.range + g.range);
  Complex acc(0.0, 0.0);
  for (const GroupoidElement& beta : range_fiber(range(alpha), f.range)) {
    Complex vf = f.eval(beta);
    if (vf == Complex(0.0, 0.0)) continue;
    // beta^{-1} alpha = t_{chi_eta(1)}(eta, zeta_alpha)
    GroupoidElement rest = make_element(beta.zeta, alpha.zeta);
    acc += vf * g.eval(rest);
  }
  return acc;
}

Complex convolve_value_source_fiber(const GFunction& f, const GFunction& g,
                                    const GroupoidElement& alpha) {
  if (f.arity != g.arity) throw std::invalid_argument("arity mismatch");
  check_convolution_margin(alpha, f.range + g.range);
  Complex acc(0.0, 0.0);
  // beta runs over s^{-1}(s(alpha)); writing beta = gamma^{-1} with gamma in
  // the r-fiber of s(alpha) gives f(alpha gamma) g(gamma^{-1}).
  for (const GroupoidElement& gamma : range_fiber(source(alpha), g.range)) {
    Complex vg = g.eval(inverse(gamma));
    if (vg == Complex(0.0, 0.0)) continue;
    acc += f.eval(compose(alpha, gamma)) * vg;
  }
  return acc;
}

GFunction convolve(const GFunction& f, const GFunction& g, const GroupoidElement& fiber_unit) {
  if (!is_unit(fiber_unit)) throw std::invalid_argument("fiber base must be a unit");
  GFunction out;
  out.arity = f.arity;
  out.range = f.range + g.range;
  for (const GroupoidElement& alpha : range_fiber(fiber_unit, out.range)) {
    // Arrows without enough window margin have no faithful value; the
    // materialized restriction keeps the interior of the fiber.
    if (!base_window_margin(alpha.xi, out.range) ||
        !base_window_margin(alpha.zeta, out.range))
      continue;
    Complex v = convolve_value(f, g, alpha);
    if (v != Complex(0.0, 0.0)) out.support.emplace_back(alpha, v);
  }
  return out;
}

GFunction involution(const GFunction& f) {
  GFunction out;
  out.arity = f.arity;
  out.range = f.range;
  if (f.has_kernel()) {
    out.kernel = [f](const GroupoidElement& alpha) {
      return std::conj(f.eval(inverse(alpha)));
    };
  } else {
    for (const auto& [beta, v] : f.support)
      out.support.emplace_back(inverse(beta), std::conj(v));
  }
  return out;
}

GFunction conditional_expectation(const GFunction& f) {
  GFunction out;
  out.arity = f.arity;
  out.range = f.range;
  const auto perms = all_perms(f.arity);
  double fact = 1.0;
  for (int i = 2; i <= f.arity; ++i) fact *= i;
  out.kernel = [f, perms, fact](const GroupoidElement& alpha) {
    Complex acc(0.0, 0.0);
    for (const Perm& s1 : perms) {
      double sg1 = perm_sign(s1);
      for (const Perm& s2 : perms) {
        acc += sg1 * static_cast<double>(perm_sign(s2)) * f.eval(two_action(s1, alpha, s2));
      }
    }
    return acc / (fact * fact);
  };
  return out;
}

SectorOperator left_regular(const GFunction& f, const PatternInstance& frame,
                            const SectorBasis& basis) {
  if (basis.N != f.arity) throw std::invalid_argument("sector arity mismatch");
  if (basis.lattice.get() != frame.base.get())
    throw std::invalid_argument("basis and frame disagree");
  SectorOperator op;
  op.dim = basis.dim();
  const auto perms = all_perms(f.arity);
  double fact = 1.0;
  for (int i = 2; i <= f.arity; ++i) fact *= i;
  for_each_subset_pair(basis.lattice, f.arity, f.range, [&](const std::vector<int>& u,
                                                            const std::vector<int>& v) {
    Complex acc(0.0, 0.0);
    for (const Perm& su : perms) {
      std::vector<int> uo(u.size());
      for (std::size_t k = 0; k < u.size(); ++k) uo[k] = u[su[k]];
      double sgu = perm_sign(su);
      for (const Perm& sv : perms) {
        std::vector<int> vo(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) vo[k] = v[sv[k]];
        GroupoidElement arrow =
            make_element(make_config(frame, uo), make_config(frame, vo));
        Complex val = f.eval(arrow);
        if (val != Complex(0.0, 0.0))
          acc += sgu * static_cast<double>(perm_sign(sv)) * val;
      }
    }
    if (acc != Complex(0.0, 0.0))
      op.add(basis.row_of(u), basis.row_of(v), acc / fact);
  });
  op.compress();
  return op;
}

GFunction seed_to_function(const BiEquivariantCoefficient& q) {
  GFunction f;
  f.arity = q.arity;
  f.range = q.range;
  double fact = 1.0;
  for (int i = 2; i <= q.arity; ++i) fact *= i;
  f.kernel = [kernel = q.kernel, fact](const GroupoidElement& alpha) {
    return kernel(alpha.xi, alpha.zeta) / fact;
  };
  return f;
}

CovarianceReport covariance_check(const GFunction& f, const PatternPtr& lattice,
                                  const Point& a, double tol) {
  if (f.arity != 1) throw std::invalid_argument("covariance check is for arity-1 functions");
  // The translate is built as an independent pattern so that the relabeling
  // is a genuine coordinate matching, not an index identity.
  auto shifted = std::make_shared<Pattern>(translated(*lattice, a));
  const double margin = f.range + lattice->R + a.norm();
  PatternInstance frame_l = PatternInstance::untranslated(lattice);
  PatternInstance frame_s = PatternInstance::untranslated(shifted);
  CovarianceReport rep;
  const int L = lattice->size();
  for (int i = 0; i < L; ++i) {
    if (lattice->points[i].norm() > lattice->window_radius - margin) continue;
    for (int j = 0; j < L; ++j) {
      if (lattice->points[j].norm() > lattice->window_radius - margin) continue;
      if (distance(lattice->points[i], lattice->points[j]) > f.range + lattice->match_tol)
        continue;
      GroupoidElement lhs = make_element(make_config(frame_l, {i}), make_config(frame_l, {j}));
      GroupoidElement rhs = make_element(make_config(frame_s, {i}), make_config(frame_s, {j}));
      double dev = std::abs(f.eval(lhs) - f.eval(rhs));
      rep.max_deviation = std::max(rep.max_deviation, dev);
      ++rep.compared_entries;
    }
  }
  rep.pass = rep.compared_entries > 0 && rep.max_deviation <= tol;
  return rep;
}

}  // namespace mbg
