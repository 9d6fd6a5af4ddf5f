#include "ci/falsify.hpp"

#include "ci/errors.hpp"
#include "ci/inference.hpp"
#include "ci/text.hpp"

namespace ci {

const char* kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::NotImplied: return "NotImplied";
    case VerdictKind::Valid: return "Valid";
    case VerdictKind::DerivableUnderA: return "DerivableUnderA";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::None: return "-";
    case Stage::Triviality: return "triviality";
    case Stage::H1: return "H1";
    case Stage::H2: return "H2";
    case Stage::FullCriterion: return "full-criterion";
  }
  return "?";
}

const char* reason_name(ValidReason r) {
  switch (r) {
    case ValidReason::Triviality: return "triviality";
    case ValidReason::SaturatedRegime: return "saturated-regime";
    case ValidReason::StableRegime: return "stable-regime";
  }
  return "?";
}

bool heuristic1(std::span<const CIStatement> antecedents, const CIStatement& c,
                H1Variant variant) {
  if (is_trivial(c)) throw Error("heuristic inapplicable to trivial consequent");
  for (const CIStatement& ant : antecedents) {
    if (!ant.cond.subset_of(c.cond)) continue;
    if (variant == H1Variant::Containment) return false;
    // FullMeet: the antecedent only blocks when C actually sits in its
    // lattice, i.e. neither side is swallowed by C.
    if (!ant.a.subset_of(c.cond) && !ant.b.subset_of(c.cond)) return false;
  }
  return true;
}

bool heuristic2(std::span<const CIStatement> antecedents, const CIStatement& c) {
  if (is_trivial(c)) throw Error("heuristic inapplicable to trivial consequent");
  for (VarSet w : witnesses(c)) {
    bool shared = false;
    for (const CIStatement& ant : antecedents) {
      // w in W(ant) iff w pairs one variable of each side.
      if (!(w & ant.a).empty() && !(w & ant.b).empty()) {
        shared = true;
        break;
      }
    }
    if (!shared) return true;
  }
  return false;
}

std::optional<VarSet> lattice_exclusion(const Universe& u,
                                        std::span<const CIStatement> antecedents,
                                        const CIStatement& c) {
  InclusionResult inc = includes(u, antecedents, c);
  if (inc.holds) return std::nullopt;
  return inc.certificate;
}

Verdict decide(const Universe& u, std::span<const CIStatement> antecedents,
               const CIStatement& c, H1Variant variant) {
  require_over(u, c.a | c.b | c.cond);
  for (const CIStatement& ant : antecedents) require_over(u, ant.a | ant.b | ant.cond);

  if (is_trivial(c))
    return {VerdictKind::Valid, Stage::Triviality, std::nullopt, ValidReason::Triviality};

  if (heuristic1(antecedents, c, variant))
    return {VerdictKind::NotImplied, Stage::H1, c.cond, std::nullopt};
  if (heuristic2(antecedents, c)) {
    for (VarSet w : witnesses(c)) {
      bool shared = false;
      for (const CIStatement& ant : antecedents) {
        if (!(w & ant.a).empty() && !(w & ant.b).empty()) {
          shared = true;
          break;
        }
      }
      if (!shared)
        return {VerdictKind::NotImplied, Stage::H2, u.complement(w), std::nullopt};
    }
  }
  if (auto cert = lattice_exclusion(u, antecedents, c))
    return {VerdictKind::NotImplied, Stage::FullCriterion, *cert, std::nullopt};

  // Inclusion holds: system A derives c. Soundness needs a regime.
  bool saturated = is_saturated(c, u);
  for (const CIStatement& ant : antecedents)
    saturated = saturated && is_saturated(ant, u);
  if (saturated)
    return {VerdictKind::Valid, Stage::FullCriterion, std::nullopt,
            ValidReason::SaturatedRegime};

  try {
    if (all_stable(u, antecedents, antecedents))
      return {VerdictKind::Valid, Stage::FullCriterion, std::nullopt,
              ValidReason::StableRegime};
  } catch (const CapExceeded&) {
    // Stability needs a semi-graphoid closure; past its cap the stable
    // regime simply cannot be claimed.
  }
  return {VerdictKind::DerivableUnderA, Stage::FullCriterion, std::nullopt, std::nullopt};
}

std::string format_verdict(const Verdict& v, const Universe& u) {
  std::string out = kind_name(v.kind);
  out += '\t';
  out += stage_name(v.stage);
  out += '\t';
  if (v.certificate) {
    out += "certificate=";
    out += format_varset(*v.certificate, u);
  } else if (v.reason) {
    out += "reason=";
    out += reason_name(*v.reason);
  } else {
    out += "-";
  }
  return out;
}

}  // namespace ci
