#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ci/varset.hpp"

namespace ci {

inline constexpr int kMaxUniverseSize = 64;

// Ordered finite set of named statistical variables. Order is fixed at
// creation and determines bit positions of every VarSet over it.
class Universe {
 public:
  // Throws ParseError on duplicates, empty list, bad identifiers or > 64
  // variables.
  explicit Universe(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  VarSet full() const {
    int n = size();
    return {n == 64 ? ~Mask{0} : (Mask{1} << n) - 1};
  }
  VarSet complement(VarSet v) const { return full() - v; }

  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  std::optional<int> index_of(std::string_view name) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// Throws UniverseMismatch unless v only uses positions of u.
void require_over(const Universe& u, VarSet v);

}  // namespace ci
