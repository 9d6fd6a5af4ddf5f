#include "ci/setfunc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

#include "ci/errors.hpp"
#include "ci/lattice.hpp"
#include "ci/text.hpp"

namespace ci {

SetFunction::SetFunction(const Universe& u) : n_(u.size()) {
  if (n_ > kSetFunctionCap)
    throw CapExceeded("set functions limited to 20 variables");
  values_.assign(std::size_t{1} << n_, 0.0);
}

// Superset Mobius transform, O(n 2^n).
DensityFunction density(const SetFunction& f) {
  DensityFunction d = f;
  const std::size_t size = d.values().size();
  for (int bit = 0; bit < d.n(); ++bit) {
    const Mask m = Mask{1} << bit;
    for (Mask x = 0; x < size; ++x) {
      if (!(x & m)) d.values()[x] -= d.values()[x | m];
    }
  }
  return d;
}

// Superset zeta transform, inverse of density().
SetFunction from_density(const DensityFunction& dd) {
  SetFunction f = dd;
  const std::size_t size = f.values().size();
  for (int bit = 0; bit < f.n(); ++bit) {
    const Mask m = Mask{1} << bit;
    for (Mask x = 0; x < size; ++x) {
      if (!(x & m)) f.values()[x] += f.values()[x | m];
    }
  }
  return f;
}

bool a_satisfies_def(const SetFunction& f, const CIStatement& c, const Universe& u) {
  require_over(u, c.a | c.b | c.cond);
  if (f.n() != u.size()) throw UniverseMismatch("set function over a different universe");
  double lhs = f.at(c.cond) + f.at(c.a | c.b | c.cond);
  double rhs = f.at(c.a | c.cond) + f.at(c.b | c.cond);
  return std::abs(lhs - rhs) <= kSatisfyTol;
}

double density_sum(const DensityFunction& d, const CIStatement& c, const Universe& u) {
  if (d.n() != u.size()) throw UniverseMismatch("density over a different universe");
  double sum = 0.0;
  for (VarSet x : enumerate_lattice(u, c)) sum += d.at(x);
  return sum;
}

bool a_satisfies_density(const SetFunction& f, const CIStatement& c, const Universe& u) {
  return std::abs(density_sum(density(f), c, u)) <= kSatisfyTol;
}

SetFunction kronecker_induced(const Universe& u, VarSet v) {
  require_over(u, v);
  SetFunction f(u);
  for_each_subset(v.bits, [&](VarSet x) { f.at(x) = 1.0; });
  return f;
}

std::optional<SetFunction> certificate_function(const Universe& u,
                                                std::span<const CIStatement> antecedents,
                                                const CIStatement& c) {
  InclusionResult inc = includes(u, antecedents, c);
  if (inc.holds) return std::nullopt;
  SetFunction f = kronecker_induced(u, *inc.certificate);
  // Delta F is the Kronecker density at the certificate, so it sums to 1
  // over L(c) and to 0 over every antecedent lattice. Verify before
  // handing the counter-model out.
  DensityFunction d = density(f);
  if (std::abs(density_sum(d, c, u)) <= kSatisfyTol)
    throw Error("certificate self-check failed: consequent not violated");
  for (const CIStatement& ant : antecedents) {
    if (std::abs(density_sum(d, ant, u)) > kSatisfyTol)
      throw Error("certificate self-check failed: antecedent violated");
  }
  return f;
}

namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string format_set_function(const SetFunction& f, const Universe& u) {
  if (f.n() != u.size()) throw UniverseMismatch("set function over a different universe");
  std::vector<VarSet> subsets;
  for (Mask x = 0; x < (Mask{1} << f.n()); ++x) subsets.push_back(VarSet{x});
  std::sort(subsets.begin(), subsets.end(), canonical_less);
  std::string out;
  for (VarSet x : subsets) {
    double v = f.at(x);
    if (v == 0.0) continue;
    out += x.empty() ? "-" : format_varset_bare(x, u);
    out += ": ";
    out += format_value(v);
    out += "\n";
  }
  return out;
}

SetFunction parse_set_function(std::string_view text, const Universe& u) {
  SetFunction f(u);
  std::size_t pos = 0;
  int lineno = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++lineno;
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("set function line " + std::to_string(lineno) + ": expected '<subset>: <value>'");
    std::string subset{line.substr(0, colon)};
    std::string value{line.substr(colon + 1)};
    VarSet x;
    if (subset != "-") {
      for (std::size_t i = 0; i < subset.size();) {
        while (i < subset.size() && std::isspace(static_cast<unsigned char>(subset[i]))) ++i;
        std::size_t j = i;
        while (j < subset.size() && !std::isspace(static_cast<unsigned char>(subset[j]))) ++j;
        if (j > i) {
          auto idx = u.index_of(subset.substr(i, j - i));
          if (!idx)
            throw ParseError("set function line " + std::to_string(lineno) + ": unknown variable");
          x = x | singleton(*idx);
        }
        i = j;
      }
    }
    double v;
    try {
      v = std::stod(value);
    } catch (const std::exception&) {
      throw ParseError("set function line " + std::to_string(lineno) + ": bad value");
    }
    f.at(x) = v;
  }
  return f;
}

}  // namespace ci
