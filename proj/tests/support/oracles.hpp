#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: the lattice is rebuilt by filtering the full powerset against
// the defining condition, and the density by the literal alternating sum.

#include <algorithm>
#include <random>
#include <vector>

#include "ci/setfunc.hpp"
#include "ci/statement.hpp"
#include "ci/universe.hpp"
#include "ci/varset.hpp"

namespace ci::testing {

// Literal reading: U in [C, S] - ([A, S] union [B, S]).
inline bool brute_member(VarSet u_set, const CIStatement& c) {
  auto subset = [](Mask x, Mask y) { return (x & ~y) == 0; };
  return subset(c.cond.bits, u_set.bits) && !subset(c.a.bits, u_set.bits) &&
         !subset(c.b.bits, u_set.bits);
}

inline std::vector<VarSet> brute_lattice(const Universe& u, const CIStatement& c) {
  std::vector<VarSet> out;
  for (Mask m = 0; m <= u.full().bits; ++m) {
    if ((m & ~u.full().bits) != 0) continue;
    if (brute_member(VarSet{m}, c)) out.push_back(VarSet{m});
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Literal alternating superset sum, O(3^n).
inline DensityFunction naive_density(const SetFunction& f, const Universe& u) {
  DensityFunction d(u);
  const Mask full = u.full().bits;
  for (Mask x = 0; x <= full; ++x) {
    double sum = 0.0;
    Mask rest = full & ~x;
    for_each_subset(rest, [&](VarSet t) {
      double sign = t.size() % 2 == 0 ? 1.0 : -1.0;
      sum += sign * f.at(VarSet{x} | t);
    });
    d.at(VarSet{x}) = sum;
  }
  return d;
}

// Random non-trivial canonical statement: each variable independently
// assigned to A, B, C or outside; rejection on empty sides.
inline CIStatement random_statement(const Universe& u, std::mt19937_64& rng) {
  while (true) {
    VarSet a, b, c;
    for (int i = 0; i < u.size(); ++i) {
      switch (rng() % 4) {
        case 0: a = a | singleton(i); break;
        case 1: b = b | singleton(i); break;
        case 2: c = c | singleton(i); break;
        default: break;
      }
    }
    if (a.empty() || b.empty()) continue;
    return CIStatement::make(a, b, c);
  }
}

inline SetFunction random_set_function(const Universe& u, std::mt19937_64& rng) {
  SetFunction f(u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double& v : f.values()) v = dist(rng);
  return f;
}

}  // namespace ci::testing
