#include "adt/core/clause.hpp"

#include <algorithm>
#include <unordered_map>

namespace adt {

bool sameModuloSymmetry(const Literal& a, const Literal& b) {
  if (a.positive != b.positive || a.equality != b.equality) return false;
  if (!a.equality) return a.lhs == b.lhs;
  return (a.lhs == b.lhs && a.rhs == b.rhs) || (a.lhs == b.rhs && a.rhs == b.lhs);
}

bool complementary(const Literal& a, const Literal& b) {
  return a.positive != b.positive && sameModuloSymmetry(a.negated(), b);
}

std::int64_t Clause::maxVar() const {
  std::int64_t m = -1;
  for (const Literal& l : literals) m = std::max(m, l.maxVar());
  return m;
}

std::uint32_t Clause::weight() const {
  std::uint32_t w = 0;
  for (const Literal& l : literals) w += l.weight();
  return w;
}

namespace {

Term renameTerm(const Term& t, std::unordered_map<VarId, VarId>& map) {
  if (t.isGround()) return t;
  if (t.isVariable()) {
    auto it = map.emplace(t.var(), static_cast<VarId>(map.size())).first;
    if (it->second == t.var()) return t;
    return Term::variable(it->second, t.sort());
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(renameTerm(a, map));
    changed = changed || args.back() != a;
  }
  if (!changed) return t;
  return Term::apply(t.head(), t.sort(), std::move(args));
}

}  // namespace

std::vector<Literal> normalizeVariables(const std::vector<Literal>& literals) {
  std::unordered_map<VarId, VarId> map;
  std::vector<Literal> out;
  out.reserve(literals.size());
  for (const Literal& l : literals) {
    Literal r = l;
    r.lhs = renameTerm(l.lhs, map);
    if (l.equality) r.rhs = renameTerm(l.rhs, map);
    out.push_back(std::move(r));
  }
  return out;
}

Term shiftVariables(const Term& t, VarId offset) {
  if (t.isGround() || offset == 0) return t;
  if (t.isVariable()) return Term::variable(t.var() + offset, t.sort());
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(shiftVariables(a, offset));
  return Term::apply(t.head(), t.sort(), std::move(args));
}

Literal shiftVariables(const Literal& l, VarId offset) {
  Literal r = l;
  r.lhs = shiftVariables(l.lhs, offset);
  if (l.equality) r.rhs = shiftVariables(l.rhs, offset);
  return r;
}

Clause shiftVariables(const Clause& c, VarId offset) {
  Clause r = c;
  for (Literal& l : r.literals) l = shiftVariables(l, offset);
  return r;
}

std::pair<Clause, Clause> renameApart(const Clause& c1, const Clause& c2) {
  Clause a = c1;
  a.literals = normalizeVariables(c1.literals);
  Clause b = c2;
  b.literals = normalizeVariables(c2.literals);
  auto offset = static_cast<VarId>(a.maxVar() + 1);
  return {std::move(a), shiftVariables(b, offset)};
}

std::string toString(const Literal& l, const Signature& sig) {
  if (!l.equality) return (l.positive ? "" : "~") + toString(l.lhs, sig);
  return toString(l.lhs, sig) + (l.positive ? " = " : " != ") + toString(l.rhs, sig);
}

std::string toString(const std::vector<Literal>& literals, const Signature& sig) {
  if (literals.empty()) return "$false";
  std::string out;
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (i) out += " | ";
    out += toString(literals[i], sig);
  }
  return out;
}

std::string toString(const Clause& c, const Signature& sig) { return toString(c.literals, sig); }

bool isWellSorted(const Literal& l, const Signature& sig) {
  if (!isWellSorted(l.lhs, sig)) return false;
  if (!l.equality) return !l.lhs.isVariable() && l.lhs.sort() == Signature::kBool;
  return isWellSorted(l.rhs, sig) && l.lhs.sort() == l.rhs.sort() && l.lhs.sort() != Signature::kBool;
}

bool isWellSorted(const Clause& c, const Signature& sig) {
  return std::all_of(c.literals.begin(), c.literals.end(),
                     [&](const Literal& l) { return isWellSorted(l, sig); });
}

}  // namespace adt
