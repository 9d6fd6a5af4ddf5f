#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ci/statement.hpp"
#include "ci/universe.hpp"

namespace ci {

// Whitespace/comma-separated identifier list -> Universe.
Universe parse_universe(std::string_view text);

// `I(<vars> , <vars> | <vars>)`; the `| <vars>` part may be omitted
// (C = empty). Identifiers must belong to u.
CIStatement parse_statement(std::string_view text, const Universe& u);

// `{a b}`, `{}` for the empty set.
std::string format_varset(VarSet v, const Universe& u);

// Space-separated member list, no braces; empty set prints nothing.
std::string format_varset_bare(VarSet v, const Universe& u);

// Canonical text form; round-trips through parse_statement. The empty
// conditioning bar is omitted: `I(a, b)`.
std::string format_statement(const CIStatement& c, const Universe& u);

// Line-oriented instance file:
//   universe: a b c d
//   given: I(a, b | d)
//   query: I(c, d)
//   # comment
struct Instance {
  Universe universe;
  std::vector<CIStatement> given;
  std::optional<CIStatement> query;
};

Instance parse_instance(std::string_view text);

}  // namespace ci
