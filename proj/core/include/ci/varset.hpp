#pragma once

#include <bit>
#include <cstdint>
#include <functional>

namespace ci {

using Mask = std::uint64_t;

// Characteristic set of variables over a universe, one bit per position.
struct VarSet {
  Mask bits = 0;

  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr bool subset_of(VarSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool disjoint_with(VarSet o) const { return (bits & o.bits) == 0; }

  friend constexpr VarSet operator|(VarSet x, VarSet y) { return {x.bits | y.bits}; }
  friend constexpr VarSet operator&(VarSet x, VarSet y) { return {x.bits & y.bits}; }
  friend constexpr VarSet operator-(VarSet x, VarSet y) { return {x.bits & ~y.bits}; }
  friend constexpr bool operator==(VarSet, VarSet) = default;
};

constexpr VarSet singleton(int i) { return {Mask{1} << i}; }

// Lexicographic order on the increasing index sequences of two sets.
// {a} < {a,b} < {a,c} < {b}.
constexpr bool lex_less(VarSet x, VarSet y) {
  Mask a = x.bits, b = y.bits;
  while (a != 0 && b != 0) {
    int i = std::countr_zero(a);
    int j = std::countr_zero(b);
    if (i != j) return i < j;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// Canonical subset order: cardinality first, position-lexicographic within.
// Used for enumeration output, certificate tie-breaks and golden files.
constexpr bool canonical_less(VarSet x, VarSet y) {
  int sx = x.size(), sy = y.size();
  if (sx != sy) return sx < sy;
  return lex_less(x, y);
}

// Visits every subset of `m`, the empty set first, `m` itself last.
template <class F>
void for_each_subset(Mask m, F&& f) {
  Mask s = 0;
  while (true) {
    f(VarSet{s});
    if (s == m) break;
    s = (s - m) & m;
  }
}

struct VarSetHash {
  std::size_t operator()(VarSet v) const { return std::hash<Mask>{}(v.bits); }
};

}  // namespace ci
