#include "ci/inference.hpp"

#include <algorithm>
#include <set>

#include "ci/errors.hpp"
#include "ci/lattice.hpp"
#include "ci/text.hpp"

namespace ci {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Triviality: return "triviality";
    case Rule::Decomposition: return "decomposition";
    case Rule::WeakUnion: return "weak-union";
    case Rule::Contraction: return "contraction";
    case Rule::Composition: return "composition";
    case Rule::StrongUnion: return "strong-union";
    case Rule::StrongContraction: return "strong-contraction";
  }
  return "?";
}

bool ClosureResult::contains(const CIStatement& c) const {
  if (is_trivial(c)) return triviality_included;
  return std::binary_search(statements.begin(), statements.end(), c, StatementLess{});
}

namespace {

// Worklist closure. Each statement is processed once; binary and ternary
// rules pair it against everything that arrived before it, so every
// premise tuple is eventually instantiated with its last arrival in the
// active role.
class ClosureEngine {
 public:
  ClosureEngine(const Universe& u, const RuleSet& rules, bool want_trace)
      : u_(u), rules_(rules), want_trace_(want_trace), full_(u.full()) {}

  void seed(const CIStatement& s) {
    require_over(u_, s.a | s.b | s.cond);
    if (is_trivial(s)) return;
    if (done_.insert(s).second) order_.push_back(s);
  }

  void run() {
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const CIStatement s = order_[i];
      unary(s);
      for (std::size_t j = 0; j < i; ++j) {
        const CIStatement t = order_[j];  // add() may reallocate order_
        binary(s, t);
        binary(t, s);
      }
      binary(s, s);
      if (rules_.strong_contraction) as_strong_contraction_base(s, i);
    }
  }

  ClosureResult result() && {
    ClosureResult r;
    r.statements.assign(done_.begin(), done_.end());
    r.triviality_included = rules_.triviality;
    r.trace = std::move(trace_);
    return r;
  }

 private:
  void add(VarSet a, VarSet b, VarSet cond, Rule rule,
           std::initializer_list<CIStatement> premises) {
    if (a.empty() || b.empty()) return;  // trivial results stay implicit
    CIStatement s = CIStatement::make(a, b, cond);
    if (!done_.insert(s).second) return;
    order_.push_back(s);
    if (want_trace_) trace_.emplace(s, Derivation{rule, premises});
  }

  void unary(const CIStatement& s) {
    const VarSet sides[2][2] = {{s.a, s.b}, {s.b, s.a}};
    for (auto [x, y] : sides) {
      if (y.size() >= 2) {
        Mask rest = y.bits;
        while (rest != 0) {
          Mask e = rest & (0 - rest);
          if (rules_.decomposition) add(x, y - VarSet{e}, s.cond, Rule::Decomposition, {s});
          if (rules_.weak_union)
            add(x, y - VarSet{e}, s.cond | VarSet{e}, Rule::WeakUnion, {s});
          rest &= rest - 1;
        }
      }
    }
    if (rules_.strong_union) {
      Mask outside = full_.bits & ~(s.a | s.b | s.cond).bits;
      while (outside != 0) {
        Mask e = outside & (0 - outside);
        add(s.a, s.b, s.cond | VarSet{e}, Rule::StrongUnion, {s});
        outside &= outside - 1;
      }
    }
  }

  void binary(const CIStatement& p, const CIStatement& q) {
    const VarSet po[2][2] = {{p.a, p.b}, {p.b, p.a}};
    const VarSet qo[2][2] = {{q.a, q.b}, {q.b, q.a}};
    if (rules_.contraction) {
      // p = I(A, B | C D), q = I(A, D | C)  ->  I(A, B D | C)
      for (auto [pa, pb] : po) {
        for (auto [qa, qd] : qo) {
          if (pa != qa) continue;
          if (p.cond != (q.cond | qd)) continue;
          add(pa, pb | qd, q.cond, Rule::Contraction, {p, q});
        }
      }
    }
    if (rules_.composition) {
      // p = I(A, B | C), q = I(A, D | C)  ->  I(A, B D | C)
      if (p.cond == q.cond) {
        for (auto [pa, pb] : po) {
          for (auto [qa, qd] : qo) {
            if (pa != qa || !pb.disjoint_with(qd)) continue;
            add(pa, pb | qd, p.cond, Rule::Composition, {p, q});
          }
        }
      }
    }
    if (rules_.strong_contraction) {
      // p = I(D, E | A C), q = I(D, E | B C), base I(A, B | C) present
      // ->  I(D, E | C)
      if (p.a == q.a && p.b == q.b && !(p.cond == q.cond)) {
        for_each_subset((p.cond & q.cond).bits, [&](VarSet c) {
          VarSet a = p.cond - c;
          VarSet b = q.cond - c;
          if (a.empty() || b.empty() || !a.disjoint_with(b)) return;
          CIStatement base = CIStatement::make(a, b, c);
          if (!done_.contains(base)) return;
          add(p.a, p.b, c, Rule::StrongContraction, {base, p, q});
        });
      }
    }
  }

  // s arriving as the I(A, B | C) premise of strong contraction.
  void as_strong_contraction_base(const CIStatement& s, std::size_t upto) {
    const VarSet so[2][2] = {{s.a, s.b}, {s.b, s.a}};
    for (auto [a, b] : so) {
      VarSet condA = a | s.cond;
      VarSet condB = b | s.cond;
      std::vector<CIStatement> left, right;  // copies: add() may reallocate order_
      for (std::size_t j = 0; j <= upto; ++j) {
        if (order_[j].cond == condA) left.push_back(order_[j]);
        if (order_[j].cond == condB) right.push_back(order_[j]);
      }
      for (const CIStatement& p : left) {
        for (const CIStatement& q : right) {
          if (p.a != q.a || p.b != q.b) continue;
          add(p.a, p.b, s.cond, Rule::StrongContraction, {s, p, q});
        }
      }
    }
  }

  const Universe& u_;
  RuleSet rules_;
  bool want_trace_;
  VarSet full_;
  std::set<CIStatement, StatementLess> done_;
  std::vector<CIStatement> order_;
  std::map<CIStatement, Derivation, StatementLess> trace_;
};

}  // namespace

ClosureResult closure(const Universe& u, std::span<const CIStatement> inputs,
                      const RuleSet& rules, bool want_trace) {
  if (u.size() > kClosureCap)
    throw CapExceeded("closure computation limited to 6 variables");
  ClosureEngine engine(u, rules, want_trace);
  for (const CIStatement& s : inputs) engine.seed(s);
  engine.run();
  return std::move(engine).result();
}

std::string format_trace(const ClosureResult& r, const Universe& u) {
  std::string out;
  for (const auto& [stmt, deriv] : r.trace) {
    out += format_statement(stmt, u);
    out += " <= ";
    out += rule_name(deriv.rule);
    out += "(";
    for (std::size_t i = 0; i < deriv.premises.size(); ++i) {
      if (i) out += ", ";
      out += format_statement(deriv.premises[i], u);
    }
    out += ")\n";
  }
  return out;
}

bool derivable(const Universe& u, std::span<const CIStatement> antecedents,
               const CIStatement& c) {
  return includes(u, antecedents, c).holds;
}

namespace {

bool stable_in_closure(const Universe& u, const CIStatement& c, const ClosureResult& cl) {
  if (is_trivial(c)) return true;
  Mask free = u.full().bits & ~(c.a | c.b | c.cond).bits;
  bool stable = true;
  for_each_subset(free, [&](VarSet t) {
    if (!cl.contains(CIStatement::make(c.a, c.b, c.cond | t))) stable = false;
  });
  return stable;
}

}  // namespace

bool is_stable(const Universe& u, const CIStatement& c,
               std::span<const CIStatement> context) {
  auto cl = closure(u, context, RuleSet::semi_graphoid());
  return stable_in_closure(u, c, cl);
}

bool all_stable(const Universe& u, std::span<const CIStatement> statements,
                std::span<const CIStatement> context) {
  auto cl = closure(u, context, RuleSet::semi_graphoid());
  for (const CIStatement& c : statements) {
    if (!stable_in_closure(u, c, cl)) return false;
  }
  return true;
}

std::vector<CIStatement> minimize_stable(const Universe& u,
                                         std::span<const CIStatement> statements) {
  std::vector<CIStatement> cur(statements.begin(), statements.end());
  std::sort(cur.begin(), cur.end(), StatementLess{});
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());

  std::vector<bool> removed(cur.size(), false);
  for (std::size_t i = 0; i < cur.size(); ++i) {
    // Redundant iff L(cur - {c}) still covers L(c). Once a statement
    // survives it can never become redundant later: removals only shrink
    // the rest, so a single canonical-order pass suffices.
    std::vector<CIStatement> rest;
    for (std::size_t j = 0; j < cur.size(); ++j) {
      if (j != i && !removed[j]) rest.push_back(cur[j]);
    }
    if (includes(u, rest, cur[i]).holds) removed[i] = true;
  }
  std::vector<CIStatement> out;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (!removed[i]) out.push_back(cur[i]);
  }
  return out;
}

}  // namespace ci
