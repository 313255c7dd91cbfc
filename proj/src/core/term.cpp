#include "adt/core/term.hpp"

#include <algorithm>

#include "adt/core/error.hpp"

namespace adt {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::variable(VarId id, SortId sort) {
  auto node = std::make_shared<Node>();
  node->variable = true;
  node->id = id;
  node->sort = sort;
  node->maxVar = id;
  node->hash = mix(0x51ed27, id);
  return Term(std::move(node));
}

Term Term::apply(SymbolId head, SortId sort, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->id = head.index;
  node->sort = sort;
  std::size_t h = mix(0xa11ce, head.index);
  for (const Term& a : args) {
    node->maxVar = std::max(node->maxVar, a.maxVar());
    node->size += a.size();
    node->depth = std::max<std::uint32_t>(node->depth, a.depth() + 1);
    h = mix(h, a.hash());
  }
  node->hash = h;
  node->args = std::move(args);
  return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.variable != y.variable || x.id != y.id || x.size != y.size) {
    return false;
  }
  if (x.variable) return x.sort == y.sort;
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (x.args[i] != y.args[i]) return false;
  }
  return true;
}

int Term::structuralCompare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  if (a.isVariable() != b.isVariable()) return a.isVariable() ? -1 : 1;
  if (a.node_->id != b.node_->id) return a.node_->id < b.node_->id ? -1 : 1;
  if (a.isVariable()) return 0;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    int c = structuralCompare(a.arg(i), b.arg(i));
    if (c != 0) return c;
  }
  return 0;
}

bool Term::contains(VarId v) const {
  if (isGround() || static_cast<std::int64_t>(v) > maxVar()) return false;
  if (isVariable()) return var() == v;
  for (const Term& a : args()) {
    if (a.contains(v)) return true;
  }
  return false;
}

bool Term::containsSubterm(const Term& t) const {
  if (*this == t) return true;
  if (size() <= t.size()) return false;
  for (const Term& a : args()) {
    if (a.containsSubterm(t)) return true;
  }
  return false;
}

void Term::collectVariables(std::vector<Term>& out) const {
  if (isGround()) return;
  if (isVariable()) {
    if (std::find(out.begin(), out.end(), *this) == out.end()) out.push_back(*this);
    return;
  }
  for (const Term& a : args()) a.collectVariables(out);
}

const Term& Term::at(std::span<const std::uint32_t> position) const {
  const Term* t = this;
  for (std::uint32_t i : position) t = &t->arg(i);
  return *t;
}

Term Term::replaceAt(std::span<const std::uint32_t> position, const Term& replacement) const {
  if (position.empty()) return replacement;
  std::vector<Term> newArgs(args().begin(), args().end());
  newArgs[position[0]] = newArgs[position[0]].replaceAt(position.subspan(1), replacement);
  return apply(head(), sort(), std::move(newArgs));
}

std::string toString(const Term& t, const Signature& sig) {
  if (t.isNull()) return "<null>";
  if (t.isVariable()) return "X" + std::to_string(t.var());
  std::string out = sig.symbol(t.head()).name;
  if (t.arity() == 0) return out;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    out += toString(t.arg(i), sig);
  }
  out += ')';
  return out;
}

Term makeApp(const Signature& sig, SymbolId head, std::vector<Term> args) {
  const SymbolInfo& info = sig.symbol(head);
  if (args.size() != info.arity()) {
    throw UserError("symbol '" + info.name + "' expects " + std::to_string(info.arity()) +
                    " arguments, got " + std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort() != info.argSorts[i]) {
      throw UserError("argument " + std::to_string(i + 1) + " of '" + info.name + "' has sort '" +
                      sig.sort(args[i].sort()).name + "', expected '" +
                      sig.sort(info.argSorts[i]).name + "'");
    }
  }
  return Term::apply(head, info.resultSort, std::move(args));
}

Term makeApp(const Signature& sig, std::string_view name, std::vector<Term> args) {
  auto id = sig.findSymbol(name);
  if (!id) throw UserError("unknown symbol '" + std::string(name) + "'");
  return makeApp(sig, *id, std::move(args));
}

bool isWellSorted(const Term& t, const Signature& sig) {
  if (t.isVariable()) return t.sort() != Signature::kBool;
  if (t.head().index >= sig.symbolCount()) return false;
  const SymbolInfo& info = sig.symbol(t.head());
  if (info.resultSort != t.sort() || info.arity() != t.arity()) return false;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (t.arg(i).sort() != info.argSorts[i] || !isWellSorted(t.arg(i), sig)) return false;
  }
  return true;
}

namespace {

void visitRec(const Term& t, std::vector<std::uint32_t>& pos,
              const std::function<void(const Term&, const std::vector<std::uint32_t>&)>& visit) {
  visit(t, pos);
  if (t.isVariable()) return;
  for (std::uint32_t i = 0; i < t.arity(); ++i) {
    pos.push_back(i);
    visitRec(t.arg(i), pos, visit);
    pos.pop_back();
  }
}

}  // namespace

void forEachSubterm(const Term& t,
                    const std::function<void(const Term&, const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> pos;
  visitRec(t, pos, visit);
}

}  // namespace adt
