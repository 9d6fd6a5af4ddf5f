#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ci/statement.hpp"
#include "ci/universe.hpp"

namespace ci {

inline constexpr int kSetFunctionCap = 20;
inline constexpr double kSatisfyTol = 1e-9;

// Total map from subsets of S to reals, stored densely by subset rank.
class SetFunction {
 public:
  explicit SetFunction(const Universe& u);  // all zeros; throws past cap

  int n() const { return n_; }
  double at(VarSet x) const { return values_[x.bits]; }
  double& at(VarSet x) { return values_[x.bits]; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

 private:
  int n_;
  std::vector<double> values_;
};

// Same shape; represents a Mobius density (Delta F).
using DensityFunction = SetFunction;

// Delta F(X) = sum over U >= X of (-1)^(|U|-|X|) F(U).
DensityFunction density(const SetFunction& f);

// F(X) = sum over U >= X of Delta F(U). Inverse of density().
SetFunction from_density(const DensityFunction& d);

// F(C) + F(ABC) = F(AC) + F(BC), within kSatisfyTol absolute.
bool a_satisfies_def(const SetFunction& f, const CIStatement& c, const Universe& u);

// Density sum over L(c); vanishes iff a_satisfies_def does.
double density_sum(const DensityFunction& d, const CIStatement& c, const Universe& u);

// True iff density_sum(density(f), c) vanishes within kSatisfyTol.
bool a_satisfies_density(const SetFunction& f, const CIStatement& c, const Universe& u);

// F_V: the function with Kronecker density delta_V; F_V(X) = [X subset V].
SetFunction kronecker_induced(const Universe& u, VarSet v);

// If L(c) <= L(antecedents), absent. Otherwise the Kronecker-induced F_U
// of the inclusion certificate U: a-satisfies every antecedent and
// violates c (self-verified before returning).
std::optional<SetFunction> certificate_function(const Universe& u,
                                                std::span<const CIStatement> antecedents,
                                                const CIStatement& c);

// Text format, one line per non-zero subset: `<subset>: <value>` with `-`
// for the empty set; unlisted subsets are 0.
std::string format_set_function(const SetFunction& f, const Universe& u);
SetFunction parse_set_function(std::string_view text, const Universe& u);

}  // namespace ci
