#pragma once

#include <functional>
#include <vector>

#include "ci/universe.hpp"
#include "ci/varset.hpp"

namespace ci {

// Conditional independence statement I(A, B | C) with A, B, C pairwise
// disjoint. Stored canonically: the lexicographically smaller of {A, B}
// first, so statements equal up to symmetry compare equal.
struct CIStatement {
  VarSet a;
  VarSet b;
  VarSet cond;

  // Canonicalizing factory. Throws ParseError if the sides overlap.
  static CIStatement make(VarSet a, VarSet b, VarSet cond);

  friend constexpr bool operator==(const CIStatement&, const CIStatement&) = default;
};

constexpr bool is_trivial(const CIStatement& c) { return c.a.empty() || c.b.empty(); }
constexpr bool is_elementary(const CIStatement& c) { return c.a.size() == 1 && c.b.size() == 1; }
inline bool is_saturated(const CIStatement& c, const Universe& u) {
  return (c.a | c.b | c.cond) == u.full();
}

struct Classification {
  bool trivial;
  bool saturated;
  bool elementary;
};

inline Classification classify(const CIStatement& c, const Universe& u) {
  return {is_trivial(c), is_saturated(c, u), is_elementary(c)};
}

// Deterministic total order on canonical statements: (A, B, C) compared
// in the canonical subset order.
struct StatementLess {
  bool operator()(const CIStatement& x, const CIStatement& y) const {
    if (x.a != y.a) return canonical_less(x.a, y.a);
    if (x.b != y.b) return canonical_less(x.b, y.b);
    return canonical_less(x.cond, y.cond);
  }
};

struct StatementHash {
  std::size_t operator()(const CIStatement& c) const {
    std::size_t h = std::hash<Mask>{}(c.a.bits);
    h = h * 1000003u ^ std::hash<Mask>{}(c.b.bits);
    h = h * 1000003u ^ std::hash<Mask>{}(c.cond.bits);
    return h;
  }
};

// All canonical non-trivial statements over u, sorted by StatementLess.
// Feasible only at small n; throws CapExceeded for n > 6.
std::vector<CIStatement> all_statements(const Universe& u);

// All canonical elementary statements I(a, b | C), sorted.
std::vector<CIStatement> all_elementary(const Universe& u);

}  // namespace ci
