#include "ci/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "ci/errors.hpp"

namespace ci {

bool member(const Universe& u, VarSet x, const CIStatement& c) {
  require_over(u, x);
  require_over(u, c.a | c.b | c.cond);
  return c.cond.subset_of(x) && !c.a.subset_of(x) && !c.b.subset_of(x);
}

std::vector<VarSet> witnesses(const CIStatement& c) {
  std::vector<VarSet> out;
  Mask a = c.a.bits;
  while (a != 0) {
    Mask abit = a & (0 - a);
    Mask b = c.b.bits;
    while (b != 0) {
      Mask bbit = b & (0 - b);
      out.push_back(VarSet{abit | bbit});
      b &= b - 1;
    }
    a &= a - 1;
  }
  return out;
}

std::vector<VarSet> enumerate_lattice(const Universe& u, const CIStatement& c) {
  require_over(u, c.a | c.b | c.cond);
  if (u.size() - c.cond.size() > kEnumerationCap)
    throw CapExceeded("lattice enumeration cap exceeded: |S| - |C| > 30");
  // Intervals [C, ~W] overlap across witnesses; dedupe through a hash set.
  std::unordered_set<Mask> seen;
  std::vector<VarSet> out;
  for (VarSet w : witnesses(c)) {
    Mask free = u.complement(w).bits & ~c.cond.bits;
    for_each_subset(free, [&](VarSet t) {
      VarSet elem = c.cond | t;
      if (seen.insert(elem.bits).second) out.push_back(elem);
    });
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::uint64_t lattice_count(const Universe& u, const CIStatement& c) {
  require_over(u, c.a | c.b | c.cond);
  const int n = u.size();
  auto pow2 = [](int e) { return static_cast<unsigned __int128>(1) << e; };
  unsigned __int128 total = pow2(n - c.cond.size()) - pow2(n - (c.a | c.cond).size()) -
                            pow2(n - (c.b | c.cond).size()) +
                            pow2(n - (c.a | c.b | c.cond).size());
  return static_cast<std::uint64_t>(total);
}

InclusionResult includes(const Universe& u, std::span<const CIStatement> antecedents,
                         const CIStatement& c) {
  // Only L(c) is enumerated; the antecedent union is membership-tested
  // element by element. Elements come in canonical order, so the first
  // failure is the canonical certificate.
  for (VarSet elem : enumerate_lattice(u, c)) {
    bool covered = false;
    for (const CIStatement& ant : antecedents) {
      if (member(u, elem, ant)) {
        covered = true;
        break;
      }
    }
    if (!covered) return {false, elem};
  }
  return {true, std::nullopt};
}

std::vector<CIStatement> wdec(const CIStatement& c) {
  std::vector<CIStatement> out;
  for (VarSet w : witnesses(c)) {
    Mask abit = w.bits & c.a.bits;
    Mask bbit = w.bits & c.b.bits;
    out.push_back(CIStatement::make(VarSet{abit}, VarSet{bbit}, c.cond));
  }
  std::sort(out.begin(), out.end(), StatementLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VarSet> omega2_elements(const Universe& u) {
  if (u.size() > kOmega2Cap) throw CapExceeded("Omega^(2) enumeration limited to 20 variables");
  return omega2_above(u, VarSet{});
}

std::vector<VarSet> omega2_above(const Universe& u, VarSet x) {
  if (u.size() > kOmega2Cap) throw CapExceeded("Omega^(2) enumeration limited to 20 variables");
  require_over(u, x);
  const int n = u.size();
  std::vector<VarSet> out;
  for_each_subset(u.complement(x).bits, [&](VarSet t) {
    VarSet v = x | t;
    if (v.size() <= n - 2) out.push_back(v);
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace ci
