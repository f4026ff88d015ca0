#ifndef MBG_PERMUTATION_HPP
#define MBG_PERMUTATION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mbg/rng.hpp"

namespace mbg {

/// Permutations of {0,..,n-1} stored as images: s[i] is the image of i.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

inline bool perm_valid(const Perm& s) {
  std::vector<bool> seen(s.size(), false);
  for (int v : s) {
    if (v < 0 || v >= static_cast<int>(s.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// (s1 * s2)(i) = s1(s2(i)).
inline Perm perm_compose(const Perm& s1, const Perm& s2) {
  if (s1.size() != s2.size()) throw std::invalid_argument("permutation size mismatch");
  Perm out(s1.size());
  for (std::size_t i = 0; i < s2.size(); ++i) out[i] = s1[s2[i]];
  return out;
}

inline Perm perm_inverse(const Perm& s) {
  Perm out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[s[i]] = static_cast<int>(i);
  return out;
}

/// Parity as +1/-1 by merge-counting inversions, O(n log n) exact.
inline int perm_sign(const Perm& s) {
  std::vector<int> a(s.begin(), s.end()), buf(s.size());
  std::uint64_t inv = 0;
  for (std::size_t width = 1; width < a.size(); width *= 2) {
    for (std::size_t lo = 0; lo + width < a.size(); lo += 2 * width) {
      std::size_t mid = lo + width, hi = std::min(lo + 2 * width, a.size());
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (a[i] <= a[j]) buf[k++] = a[i++];
        else { inv += mid - i; buf[k++] = a[j++]; }
      }
      while (i < mid) buf[k++] = a[i++];
      while (j < hi) buf[k++] = a[j++];
      std::copy(buf.begin() + lo, buf.begin() + hi, a.begin() + lo);
    }
  }
  return (inv & 1) ? -1 : +1;
}

inline Perm perm_random(int n, SplitMix64& rng) {
  Perm s = perm_identity(n);
  for (int i = n - 1; i > 0; --i)
    std::swap(s[i], s[static_cast<int>(rng.below(i + 1))]);
  return s;
}

/// Sign of the relabeling permutation chi_a^{-1} o chi_b, where chi_a and
/// chi_b are enumerations of the same index set given as value sequences.
inline int relative_sign(const std::vector<int>& chi_a, const std::vector<int>& chi_b) {
  if (chi_a.size() != chi_b.size()) throw std::invalid_argument("ordering size mismatch");
  Perm rel(chi_a.size());
  for (std::size_t k = 0; k < chi_b.size(); ++k) {
    auto it = std::find(chi_a.begin(), chi_a.end(), chi_b[k]);
    if (it == chi_a.end()) throw std::invalid_argument("orderings enumerate different sets");
    rel[k] = static_cast<int>(it - chi_a.begin());
  }
  if (!perm_valid(rel)) throw std::invalid_argument("orderings enumerate different sets");
  return perm_sign(rel);
}

}  // namespace mbg

#endif
