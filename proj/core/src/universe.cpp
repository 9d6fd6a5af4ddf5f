#include "ci/universe.hpp"

#include <cctype>

#include "ci/errors.hpp"

namespace ci {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return true;
}

}  // namespace

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ParseError("universe: empty variable list");
  if (names_.size() > kMaxUniverseSize)
    throw ParseError("universe: more than 64 variables");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_identifier(names_[i]))
      throw ParseError("universe: invalid identifier '" + names_[i] + "'");
    auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
    if (!inserted)
      throw ParseError("universe: duplicate variable '" + names_[i] + "'");
  }
}

std::optional<int> Universe::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void require_over(const Universe& u, VarSet v) {
  if (!v.subset_of(u.full()))
    throw UniverseMismatch("variable set uses positions outside the universe");
}

}  // namespace ci
