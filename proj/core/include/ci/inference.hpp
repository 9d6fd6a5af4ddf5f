#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ci/statement.hpp"
#include "ci/universe.hpp"

namespace ci {

inline constexpr int kClosureCap = 6;

enum class Rule {
  Triviality,
  Decomposition,
  WeakUnion,
  Contraction,
  Composition,
  StrongUnion,
  StrongContraction,
};

const char* rule_name(Rule r);

// Rule selection. Symmetry is not listed: it is a representation
// invariant (statements are canonical), applied exactly once by
// construction.
struct RuleSet {
  bool triviality = false;
  bool decomposition = false;
  bool weak_union = false;
  bool contraction = false;
  bool composition = false;
  bool strong_union = false;
  bool strong_contraction = false;

  static RuleSet system_a() {
    return {.triviality = true,
            .decomposition = true,
            .contraction = true,
            .strong_union = true,
            .strong_contraction = true};
  }
  static RuleSet semi_graphoid() {
    return {.triviality = true,
            .decomposition = true,
            .weak_union = true,
            .contraction = true};
  }
  static RuleSet a_minus_sc() {
    RuleSet r = system_a();
    r.strong_contraction = false;
    return r;
  }
};

struct Derivation {
  Rule rule;
  std::vector<CIStatement> premises;
};

// Least fixpoint of rule application. Trivial statements are treated as
// always present (the triviality axiom is premise-free and they are never
// informative premises); `statements` holds the non-trivial part.
struct ClosureResult {
  std::vector<CIStatement> statements;  // sorted by StatementLess
  bool triviality_included = false;
  std::map<CIStatement, Derivation, StatementLess> trace;  // derived only

  bool contains(const CIStatement& c) const;
};

ClosureResult closure(const Universe& u, std::span<const CIStatement> inputs,
                      const RuleSet& rules, bool want_trace = false);

// One line per derived statement: `<statement> <= <rule>(<premises>)`,
// in deterministic statement order.
std::string format_trace(const ClosureResult& r, const Universe& u);

// Derivability under system A via lattice inclusion;
// the rule engine above is the oracle for it, not the default.
bool derivable(const Universe& u, std::span<const CIStatement> antecedents,
               const CIStatement& c);

// c is stable in C iff I(A, B | C') is semi-graphoid-derivable from C for
// every C' with cond(c) <= C' <= S - (A union B).
bool is_stable(const Universe& u, const CIStatement& c,
               std::span<const CIStatement> context);

// Stability of every member of `statements` in `context`, sharing one
// semi-graphoid closure.
bool all_stable(const Universe& u, std::span<const CIStatement> statements,
                std::span<const CIStatement> context);

// Greedy removal, in canonical statement order, of statements whose
// semi-lattice is covered by the rest. Preserves the union lattice and
// leaves no redundant member.
std::vector<CIStatement> minimize_stable(const Universe& u,
                                         std::span<const CIStatement> statements);

}  // namespace ci
