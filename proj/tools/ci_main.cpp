// Command-line front end: implication checking, closures, lattices,
// certificates and the falsification experiment, as subcommands of one
// binary. All randomness is explicitly seeded.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ci/errors.hpp"
#include "ci/experiment.hpp"
#include "ci/falsify.hpp"
#include "ci/inference.hpp"
#include "ci/lattice.hpp"
#include "ci/setfunc.hpp"
#include "ci/text.hpp"

namespace {

struct InputOpts {
  std::string file;
  std::string universe;
  std::vector<std::string> given;
  std::string query;
};

void add_input_opts(CLI::App* cmd, InputOpts& in, bool query_allowed = true) {
  cmd->add_option("file", in.file, "instance file (universe:/given:/query: lines)");
  cmd->add_option("--universe", in.universe, "inline universe, e.g. \"a b c d\"");
  cmd->add_option("--given", in.given, "antecedent statement, repeatable");
  if (query_allowed) cmd->add_option("--query", in.query, "consequent statement");
}

ci::Instance load_instance(const InputOpts& in) {
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw ci::ParseError("cannot open instance file '" + in.file + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return ci::parse_instance(buf.str());
  }
  if (in.universe.empty())
    throw ci::ParseError("either an instance file or --universe is required");
  ci::Instance inst{ci::parse_universe(in.universe), {}, std::nullopt};
  for (const auto& g : in.given)
    inst.given.push_back(ci::parse_statement(g, inst.universe));
  if (!in.query.empty())
    inst.query = ci::parse_statement(in.query, inst.universe);
  return inst;
}

const ci::CIStatement& require_query(const ci::Instance& inst) {
  if (!inst.query) throw ci::ParseError("this command needs a query statement");
  return *inst.query;
}

ci::H1Variant parse_h1_variant(const std::string& s) {
  if (s == "containment") return ci::H1Variant::Containment;
  if (s == "full-meet") return ci::H1Variant::FullMeet;
  throw ci::ParseError("--h1-variant must be 'containment' or 'full-meet'");
}

ci::RuleSet parse_rules(const std::string& s) {
  if (s == "system-a") return ci::RuleSet::system_a();
  if (s == "semi-graphoid") return ci::RuleSet::semi_graphoid();
  if (s == "a-minus-sc") return ci::RuleSet::a_minus_sc();
  throw ci::ParseError("--rules must be system-a, semi-graphoid or a-minus-sc");
}

void print_elements(const std::vector<ci::VarSet>& elems, const ci::Universe& u) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << ci::format_varset(elems[i], u);
  }
  std::cout << '\n';
}

int cmd_check(const InputOpts& in, const std::string& h1, bool explain) {
  ci::Instance inst = load_instance(in);
  const ci::CIStatement& q = require_query(inst);
  ci::Verdict v = ci::decide(inst.universe, inst.given, q, parse_h1_variant(h1));
  std::cout << ci::format_verdict(v, inst.universe) << '\n';
  if (explain) {
    if (v.kind == ci::VerdictKind::NotImplied) {
      auto f = ci::certificate_function(inst.universe, inst.given, q);
      std::cout << "counter-model (set function):\n"
                << ci::format_set_function(*f, inst.universe);
    } else if (v.kind != ci::VerdictKind::Unknown) {
      std::cout << "lattice inclusion holds; L(query) has "
                << ci::lattice_count(inst.universe, q) << " elements\n";
    }
  }
  return 0;
}

int cmd_falsify(const InputOpts& in, const std::string& h1) {
  ci::Instance inst = load_instance(in);
  const ci::CIStatement& q = require_query(inst);
  bool f1 = ci::heuristic1(inst.given, q, parse_h1_variant(h1));
  bool f2 = ci::heuristic2(inst.given, q);
  auto cert = ci::lattice_exclusion(inst.universe, inst.given, q);
  std::cout << "H1: " << (f1 ? "falsified" : "unknown") << '\n';
  std::cout << "H2: " << (f2 ? "falsified" : "unknown") << '\n';
  if (cert)
    std::cout << "full: falsified certificate=" << ci::format_varset(*cert, inst.universe)
              << '\n';
  else
    std::cout << "full: unknown\n";
  return 0;
}

int cmd_closure(const InputOpts& in, const std::string& rules, bool trace) {
  ci::Instance inst = load_instance(in);
  auto cl = ci::closure(inst.universe, inst.given, parse_rules(rules), trace);
  for (const auto& s : cl.statements)
    std::cout << ci::format_statement(s, inst.universe) << '\n';
  if (inst.query)
    std::cout << "contains query: " << (cl.contains(*inst.query) ? "true" : "false") << '\n';
  if (trace) std::cout << ci::format_trace(cl, inst.universe);
  return 0;
}

int cmd_wdec(const InputOpts& in) {
  ci::Instance inst = load_instance(in);
  for (const auto& s : ci::wdec(require_query(inst)))
    std::cout << ci::format_statement(s, inst.universe) << '\n';
  return 0;
}

int cmd_lattice(const InputOpts& in) {
  ci::Instance inst = load_instance(in);
  if (inst.query) {
    const ci::CIStatement& q = *inst.query;
    std::cout << "query: " << ci::format_statement(q, inst.universe) << '\n';
    std::cout << "witnesses:";
    for (ci::VarSet w : ci::witnesses(q))
      std::cout << ' ' << ci::format_varset(w, inst.universe);
    std::cout << '\n';
    std::cout << "count: " << ci::lattice_count(inst.universe, q) << '\n';
    std::cout << "elements: ";
    print_elements(ci::enumerate_lattice(inst.universe, q), inst.universe);
  }
  if (!inst.given.empty()) {
    std::vector<ci::VarSet> uni;
    for (const auto& g : inst.given) {
      for (ci::VarSet e : ci::enumerate_lattice(inst.universe, g)) {
        if (std::find(uni.begin(), uni.end(), e) == uni.end()) uni.push_back(e);
      }
    }
    std::sort(uni.begin(), uni.end(), ci::canonical_less);
    std::cout << "antecedent-union: ";
    print_elements(uni, inst.universe);
    if (inst.query) {
      auto inc = ci::includes(inst.universe, inst.given, *inst.query);
      std::cout << "inclusion: " << (inc.holds ? "holds" : "fails") << '\n';
    }
  }
  return 0;
}

int cmd_certificate(const InputOpts& in) {
  ci::Instance inst = load_instance(in);
  auto f = ci::certificate_function(inst.universe, inst.given, require_query(inst));
  if (!f) {
    std::cout << "derivable\n";
    return 0;
  }
  std::cout << ci::format_set_function(*f, inst.universe);
  return 0;
}

int cmd_minimize(const InputOpts& in) {
  ci::Instance inst = load_instance(in);
  for (const auto& s : ci::minimize_stable(inst.universe, inst.given))
    std::cout << ci::format_statement(s, inst.universe) << '\n';
  return 0;
}

int cmd_stable(const InputOpts& in) {
  ci::Instance inst = load_instance(in);
  bool st = ci::is_stable(inst.universe, require_query(inst), inst.given);
  std::cout << "stable: " << (st ? "true" : "false") << '\n';
  return 0;
}

int cmd_experiment(const ci::ExperimentConfig& cfg, const std::string& out_path) {
  auto rows = ci::run_experiment(cfg);
  std::string csv = ci::emit_csv(rows);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(out_path);
    if (!f) throw ci::ParseError("cannot open output file '" + out_path + "'");
    f << csv;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reasoning about probabilistic conditional-independence implication"};
  app.require_subcommand(1);

  InputOpts in;
  std::string h1 = "containment";
  std::string rules = "system-a";
  bool explain = false;
  bool trace = false;
  ci::ExperimentConfig cfg;
  std::string out_path;
  std::string h1_exp = "containment";

  auto* check = app.add_subcommand("check", "decide an implication instance");
  add_input_opts(check, in);
  check->add_option("--h1-variant", h1);
  check->add_flag("--explain", explain, "print the counter-model or inclusion facts");

  auto* falsify = app.add_subcommand("falsify", "run H1, H2 and the full criterion");
  add_input_opts(falsify, in);
  falsify->add_option("--h1-variant", h1);

  auto* closure = app.add_subcommand("closure", "rule-engine closure of the given statements");
  add_input_opts(closure, in);
  closure->add_option("--rules", rules, "system-a | semi-graphoid | a-minus-sc");
  closure->add_flag("--trace", trace, "print one derivation line per derived statement");

  auto* wdec = app.add_subcommand("wdec", "witness decomposition of the query");
  add_input_opts(wdec, in);

  auto* lattice = app.add_subcommand("lattice", "semi-lattice elements, witnesses and count");
  add_input_opts(lattice, in);

  auto* certificate = app.add_subcommand("certificate", "additive counter-model, if any");
  add_input_opts(certificate, in);

  auto* minimize = app.add_subcommand("minimize", "remove lattice-redundant given statements");
  add_input_opts(minimize, in, false);

  auto* stable = app.add_subcommand("stable", "is the query stable in the given set");
  add_input_opts(stable, in);

  auto* experiment = app.add_subcommand("experiment", "falsification experiment, CSV output");
  experiment->add_option("--seed", cfg.seed);
  experiment->add_option("--attrs", cfg.n_attributes);
  experiment->add_option("--sets", cfg.sets_per_count);
  experiment->add_option("--k-min", cfg.k_min);
  experiment->add_option("--k-max", cfg.k_max);
  experiment->add_option("--h1-variant", h1_exp);
  experiment->add_option("-o,--output", out_path, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
    if (check->parsed()) return cmd_check(in, h1, explain);
    if (falsify->parsed()) return cmd_falsify(in, h1);
    if (closure->parsed()) return cmd_closure(in, rules, trace);
    if (wdec->parsed()) return cmd_wdec(in);
    if (lattice->parsed()) return cmd_lattice(in);
    if (certificate->parsed()) return cmd_certificate(in);
    if (minimize->parsed()) return cmd_minimize(in);
    if (stable->parsed()) return cmd_stable(in);
    if (experiment->parsed()) {
      cfg.h1_variant = parse_h1_variant(h1_exp);
      return cmd_experiment(cfg, out_path);
    }
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ci::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ci::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
