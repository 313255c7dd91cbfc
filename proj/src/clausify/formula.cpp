#include "adt/clausify/formula.hpp"

#include <algorithm>
#include <functional>

namespace adt {

Formula Formula::make(Node n) { return Formula(std::make_shared<const Node>(std::move(n))); }

Formula Formula::atom(Literal positiveAtom) {
  Node n;
  n.kind = Connective::Atom;
  positiveAtom.positive = true;
  n.atom = std::move(positiveAtom);
  return make(std::move(n));
}

Formula Formula::top() { return make(Node{Connective::True, {}, {}, {}}); }
Formula Formula::bottom() { return make(Node{Connective::False, {}, {}, {}}); }

Formula Formula::negation(Formula f) { return make(Node{Connective::Not, {}, {std::move(f)}, {}}); }

Formula Formula::conjunction(std::vector<Formula> fs) {
  if (fs.empty()) return top();
  if (fs.size() == 1) return fs.front();
  return make(Node{Connective::And, {}, std::move(fs), {}});
}

Formula Formula::disjunction(std::vector<Formula> fs) {
  if (fs.empty()) return bottom();
  if (fs.size() == 1) return fs.front();
  return make(Node{Connective::Or, {}, std::move(fs), {}});
}

Formula Formula::implies(Formula a, Formula b) {
  return make(Node{Connective::Implies, {}, {std::move(a), std::move(b)}, {}});
}

Formula Formula::iff(Formula a, Formula b) {
  return make(Node{Connective::Iff, {}, {std::move(a), std::move(b)}, {}});
}

Formula Formula::forall(std::vector<Term> vars, Formula body) {
  if (vars.empty()) return body;
  return make(Node{Connective::Forall, {}, {std::move(body)}, std::move(vars)});
}

Formula Formula::exists(std::vector<Term> vars, Formula body) {
  if (vars.empty()) return body;
  return make(Node{Connective::Exists, {}, {std::move(body)}, std::move(vars)});
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const Formula& c : children()) n += c.size();
  return n;
}

std::size_t Formula::quantifierCount() const {
  std::size_t n = (kind() == Connective::Forall || kind() == Connective::Exists) ? 1 : 0;
  for (const Formula& c : children()) n += c.quantifierCount();
  return n;
}

namespace {

void collectFree(const Formula& f, std::vector<VarId>& bound, std::vector<Term>& out) {
  auto visitTerm = [&](const Term& t) {
    std::vector<Term> vars;
    t.collectVariables(vars);
    for (const Term& v : vars) {
      if (std::find(bound.begin(), bound.end(), v.var()) != bound.end()) continue;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  };
  switch (f.kind()) {
    case Connective::Atom:
      visitTerm(f.atomLiteral().lhs);
      if (f.atomLiteral().equality) visitTerm(f.atomLiteral().rhs);
      return;
    case Connective::Forall:
    case Connective::Exists: {
      std::size_t mark = bound.size();
      for (const Term& v : f.boundVariables()) bound.push_back(v.var());
      collectFree(f.child(), bound, out);
      bound.resize(mark);
      return;
    }
    default:
      for (const Formula& c : f.children()) collectFree(c, bound, out);
  }
}

using Scope = std::vector<std::pair<VarId, VarId>>;

bool termAlpha(const Term& a, const Term& b, const Scope& scope) {
  if (a.isVariable() || b.isVariable()) {
    if (!a.isVariable() || !b.isVariable() || a.sort() != b.sort()) return false;
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      bool left = it->first == a.var();
      bool right = it->second == b.var();
      if (left || right) return left && right;
    }
    return a.var() == b.var();
  }
  if (a.head() != b.head() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!termAlpha(a.arg(i), b.arg(i), scope)) return false;
  }
  return true;
}

bool alphaRec(const Formula& a, const Formula& b, Scope& scope) {
  if (a.kind() != b.kind() || a.children().size() != b.children().size()) return false;
  switch (a.kind()) {
    case Connective::Atom: {
      const Literal& x = a.atomLiteral();
      const Literal& y = b.atomLiteral();
      if (x.equality != y.equality || !termAlpha(x.lhs, y.lhs, scope)) return false;
      return !x.equality || termAlpha(x.rhs, y.rhs, scope);
    }
    case Connective::Forall:
    case Connective::Exists: {
      if (a.boundVariables().size() != b.boundVariables().size()) return false;
      std::size_t mark = scope.size();
      for (std::size_t i = 0; i < a.boundVariables().size(); ++i) {
        const Term& u = a.boundVariables()[i];
        const Term& v = b.boundVariables()[i];
        if (u.sort() != v.sort()) return false;
        scope.emplace_back(u.var(), v.var());
      }
      bool ok = alphaRec(a.child(), b.child(), scope);
      scope.resize(mark);
      return ok;
    }
    default:
      for (std::size_t i = 0; i < a.children().size(); ++i) {
        if (!alphaRec(a.child(i), b.child(i), scope)) return false;
      }
      return true;
  }
}

}  // namespace

std::vector<Term> Formula::freeVariables() const {
  std::vector<VarId> bound;
  std::vector<Term> out;
  collectFree(*this, bound, out);
  return out;
}

Formula negate(const Formula& f) { return Formula::negation(f); }

bool alphaEquivalent(const Formula& a, const Formula& b) {
  Scope scope;
  return alphaRec(a, b, scope);
}

bool isWellSorted(const Formula& f, const Signature& sig) {
  switch (f.kind()) {
    case Connective::Atom:
      return isWellSorted(f.atomLiteral(), sig);
    case Connective::Forall:
    case Connective::Exists:
      for (const Term& v : f.boundVariables()) {
        if (!v.isVariable() || v.sort() == Signature::kBool) return false;
      }
      return isWellSorted(f.child(), sig);
    default:
      return std::all_of(f.children().begin(), f.children().end(),
                         [&](const Formula& c) { return isWellSorted(c, sig); });
  }
}

std::string toString(const Formula& f, const Signature& sig) {
  auto joined = [&](const char* op) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.children().size(); ++i) {
      if (i) out += op;
      out += toString(f.child(i), sig);
    }
    return out + ")";
  };
  auto quantified = [&](const char* q) {
    std::string out = q;
    out += '[';
    for (std::size_t i = 0; i < f.boundVariables().size(); ++i) {
      if (i) out += ',';
      out += toString(f.boundVariables()[i], sig) + ":" + sig.sort(f.boundVariables()[i].sort()).name;
    }
    return out + "]: " + toString(f.child(), sig);
  };
  switch (f.kind()) {
    case Connective::Atom:
      return toString(f.atomLiteral(), sig);
    case Connective::True:
      return "$true";
    case Connective::False:
      return "$false";
    case Connective::Not:
      return "~" + toString(f.child(), sig);
    case Connective::And:
      return joined(" & ");
    case Connective::Or:
      return joined(" | ");
    case Connective::Implies:
      return joined(" => ");
    case Connective::Iff:
      return joined(" <=> ");
    case Connective::Forall:
      return "(" + quantified("!") + ")";
    case Connective::Exists:
      return "(" + quantified("?") + ")";
  }
  return "?";
}

std::int64_t maxVariable(const Formula& f) {
  std::int64_t m = -1;
  if (f.kind() == Connective::Atom) {
    m = f.atomLiteral().maxVar();
  }
  for (const Term& v : f.boundVariables()) m = std::max<std::int64_t>(m, v.var());
  for (const Formula& c : f.children()) m = std::max(m, maxVariable(c));
  return m;
}

}  // namespace adt
