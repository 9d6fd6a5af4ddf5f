#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ci/statement.hpp"
#include "ci/universe.hpp"

namespace ci {

// The semi-lattice L(A, B | C) = [C, S] - ([A, S] union [B, S]) is never
// materialized eagerly; it is the value of its base statement. These
// functions query and enumerate it.

inline constexpr int kEnumerationCap = 30;  // on |S| - |C|
inline constexpr int kOmega2Cap = 20;

// U in L(c) <=> C subset U, A not subset U, B not subset U. O(1).
bool member(const Universe& u, VarSet x, const CIStatement& c);

// All witness pairs {a, b}, a in A, b in B, as two-element VarSets.
// Empty exactly for trivial statements.
std::vector<VarSet> witnesses(const CIStatement& c);

// Elements of L(c) as the deduplicated union of the intervals [C, ~W],
// sorted in canonical subset order. Throws CapExceeded past the cap.
std::vector<VarSet> enumerate_lattice(const Universe& u, const CIStatement& c);

// |L(c)| by inclusion-exclusion, no enumeration:
// 2^(n-|C|) - 2^(n-|AC|) - 2^(n-|BC|) + 2^(n-|ABC|).
std::uint64_t lattice_count(const Universe& u, const CIStatement& c);

struct InclusionResult {
  bool holds;
  // When holds is false: the canonically smallest U in L(c) - L(antecedents).
  std::optional<VarSet> certificate;
};

// Tests L(antecedents) >= L(c) by enumerating L(c) and membership-testing
// each element against each antecedent.
InclusionResult includes(const Universe& u, std::span<const CIStatement> antecedents,
                         const CIStatement& c);

// Witness decomposition: the elementary statements I(a, b | C) over all
// witness pairs.
std::vector<CIStatement> wdec(const CIStatement& c);

// Omega^(2): subsets of S missing at least two elements; sorted canonically.
std::vector<VarSet> omega2_elements(const Universe& u);

// Restriction of Omega^(2) to supersets of x.
std::vector<VarSet> omega2_above(const Universe& u, VarSet x);

}  // namespace ci
