#include "ci/statement.hpp"

#include <algorithm>

#include "ci/errors.hpp"
#include "ci/inference.hpp"

namespace ci {

CIStatement CIStatement::make(VarSet a, VarSet b, VarSet cond) {
  if (!a.disjoint_with(b) || !a.disjoint_with(cond) || !b.disjoint_with(cond))
    throw ParseError("statement sides are not pairwise disjoint");
  if (lex_less(b, a)) std::swap(a, b);
  return {a, b, cond};
}

std::vector<CIStatement> all_statements(const Universe& u) {
  if (u.size() > kClosureCap)
    throw CapExceeded("statement-space enumeration limited to 6 variables");
  std::vector<CIStatement> out;
  const Mask full = u.full().bits;
  for_each_subset(full, [&](VarSet a) {
    if (a.empty()) return;
    for_each_subset(full & ~a.bits, [&](VarSet b) {
      if (b.empty()) return;
      if (lex_less(b, a)) return;  // keep canonical representatives only
      for_each_subset(full & ~a.bits & ~b.bits, [&](VarSet c) {
        out.push_back(CIStatement{a, b, c});
      });
    });
  });
  std::sort(out.begin(), out.end(), StatementLess{});
  return out;
}

std::vector<CIStatement> all_elementary(const Universe& u) {
  std::vector<CIStatement> out;
  const int n = u.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Mask rest = u.full().bits & ~singleton(i).bits & ~singleton(j).bits;
      for_each_subset(rest, [&](VarSet c) {
        out.push_back(CIStatement{singleton(i), singleton(j), c});
      });
    }
  }
  std::sort(out.begin(), out.end(), StatementLess{});
  return out;
}

}  // namespace ci
