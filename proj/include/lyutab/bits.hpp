#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace lyutab {

/// Subsets of the ground set [n] = {0, ..., n-1} as bitmasks, n <= 62.
using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask full_mask(int n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

inline int popcount(Mask m) { return std::popcount(m); }

/// b ⊆ a
constexpr bool contains(Mask a, Mask b) { return (b & ~a) == 0; }

constexpr bool has_bit(Mask m, int i) { return (m >> i) & 1; }

inline std::vector<int> elements(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= bit(x);
  return m;
}

inline Mask mask_of(const std::vector<int>& xs) {
  Mask m = 0;
  for (int x : xs) m |= bit(x);
  return m;
}

/// #{k in sigma : k < j}; parity drives every sign convention in here.
inline int count_below(Mask sigma, int j) {
  return popcount(sigma & (bit(j) - 1));
}

inline int koszul_sign(Mask sigma, int j) {
  return (count_below(sigma, j) & 1) ? -1 : 1;
}

/// Visit every subset of m, in increasing numeric order.
template <class Fn>
void for_each_subset(Mask m, Fn&& fn) {
  Mask s = 0;
  while (true) {
    fn(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

/// All subsets of [n], sorted by (popcount, numeric value).
inline std::vector<Mask> masks_by_popcount(int n) {
  std::vector<std::vector<Mask>> buckets(n + 1);
  for (Mask m = 0; m < (Mask{1} << n); ++m) buckets[popcount(m)].push_back(m);
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << n);
  for (auto& b : buckets)
    for (Mask m : b) out.push_back(m);
  return out;
}

}  // namespace lyutab
