#pragma once

#include <optional>
#include <span>
#include <string>

#include "ci/lattice.hpp"
#include "ci/statement.hpp"

namespace ci {

enum class VerdictKind { NotImplied, Valid, DerivableUnderA, Unknown };

enum class ValidReason { Triviality, SaturatedRegime, StableRegime };

// Which stage of the pipeline resolved the query.
enum class Stage { None, Triviality, H1, H2, FullCriterion };

enum class H1Variant {
  Containment,  // reject iff no antecedent has C' subset C
  FullMeet,     // reject iff C is in no antecedent lattice (also A' not
                // subset C, B' not subset C); strictly stronger, still sound
};

struct Verdict {
  VerdictKind kind;
  Stage stage = Stage::None;
  std::optional<VarSet> certificate;    // NotImplied
  std::optional<ValidReason> reason;    // Valid
};

const char* kind_name(VerdictKind k);
const char* stage_name(Stage s);
const char* reason_name(ValidReason r);

// Heuristic 1 (meet): C itself is the minimum of L(c); if no antecedent
// lattice can contain it, the implication is refuted. Requires c
// non-trivial. O(|antecedents|).
bool heuristic1(std::span<const CIStatement> antecedents, const CIStatement& c,
                H1Variant variant = H1Variant::Containment);

// Heuristic 2 (joins): a witness W of c shared with no antecedent puts
// ~W in L(c) - L(antecedents). Requires c non-trivial.
bool heuristic2(std::span<const CIStatement> antecedents, const CIStatement& c);

// Full lattice-exclusion criterion; the certificate is the canonically
// smallest excluded element, absent when inclusion holds.
std::optional<VarSet> lattice_exclusion(const Universe& u,
                                        std::span<const CIStatement> antecedents,
                                        const CIStatement& c);

// Combined pipeline: triviality, H1, H2, full criterion, then the two
// sound regimes (saturated, stable). Inclusion without either regime is
// DerivableUnderA: system A is complete but not sound in general.
Verdict decide(const Universe& u, std::span<const CIStatement> antecedents,
               const CIStatement& c, H1Variant variant = H1Variant::Containment);

// `<kind>\t<stage>\t<certificate-or-reason>`.
std::string format_verdict(const Verdict& v, const Universe& u);

}  // namespace ci
