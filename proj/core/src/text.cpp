#include "ci/text.hpp"

#include <cctype>
#include <sstream>

#include "ci/errors.hpp"

namespace ci {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

VarSet parse_varlist(std::string_view text, const Universe& u) {
  VarSet v;
  for (const auto& tok : tokenize(text)) {
    auto idx = u.index_of(tok);
    if (!idx) throw ParseError("unknown variable '" + tok + "'");
    v = v | singleton(*idx);
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Universe parse_universe(std::string_view text) {
  return Universe(tokenize(text));
}

CIStatement parse_statement(std::string_view text, const Universe& u) {
  std::string_view s = trim(text);
  if (s.size() < 4 || (s[0] != 'I' && s[0] != 'i') || s[1] != '(' || s.back() != ')')
    throw ParseError("statement must match I(<vars>, <vars> | <vars>)");
  std::string_view body = s.substr(2, s.size() - 3);

  // The first comma separates the two sides; within a side, variables are
  // whitespace-separated.
  auto comma = body.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("statement is missing the side separator ','");

  std::string_view left = body.substr(0, comma);
  std::string_view rest = body.substr(comma + 1);
  std::string_view mid = rest;
  std::string_view condpart;
  if (auto bar = rest.find('|'); bar != std::string_view::npos) {
    mid = rest.substr(0, bar);
    condpart = rest.substr(bar + 1);
    if (condpart.find('|') != std::string_view::npos)
      throw ParseError("statement has more than one '|'");
  }

  VarSet a = parse_varlist(left, u);
  VarSet b = parse_varlist(mid, u);
  VarSet c = parse_varlist(condpart, u);
  if (!a.disjoint_with(b) || !a.disjoint_with(c) || !b.disjoint_with(c))
    throw ParseError("statement sides are not pairwise disjoint");
  return CIStatement::make(a, b, c);
}

std::string format_varset_bare(VarSet v, const Universe& u) {
  std::string out;
  for (int i = 0; i < u.size(); ++i) {
    if (!v.contains(i)) continue;
    if (!out.empty()) out += ' ';
    out += u.name(i);
  }
  return out;
}

std::string format_varset(VarSet v, const Universe& u) {
  return "{" + format_varset_bare(v, u) + "}";
}

std::string format_statement(const CIStatement& c, const Universe& u) {
  std::string out = "I(";
  out += format_varset_bare(c.a, u);
  out += ", ";
  out += format_varset_bare(c.b, u);
  if (!c.cond.empty()) {
    out += " | ";
    out += format_varset_bare(c.cond, u);
  }
  out += ")";
  return out;
}

Instance parse_instance(std::string_view text) {
  std::optional<Universe> universe;
  std::vector<std::string> given_lines;
  std::vector<std::string> query_lines;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("instance line " + std::to_string(lineno) + ": expected '<key>: <value>'");
    std::string key{trim(line.substr(0, colon))};
    std::string value{trim(line.substr(colon + 1))};
    if (key == "universe") {
      if (universe) throw ParseError("instance: duplicate universe line");
      universe.emplace(parse_universe(value));
    } else if (key == "given") {
      given_lines.push_back(value);
    } else if (key == "query") {
      query_lines.push_back(value);
    } else {
      throw ParseError("instance line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!universe) throw ParseError("instance: missing universe line");
  if (query_lines.size() > 1) throw ParseError("instance: more than one query line");

  Instance inst{*universe, {}, std::nullopt};
  for (const auto& g : given_lines)
    inst.given.push_back(parse_statement(g, inst.universe));
  if (!query_lines.empty())
    inst.query = parse_statement(query_lines.front(), inst.universe);
  return inst;
}

}  // namespace ci
