#include <algorithm>

#include "adt/ta/theory.hpp"

namespace adt {

namespace {

bool isCtorApp(const Term& t, const Signature& sig) {
  return !t.isVariable() && sig.isConstructor(t.head());
}

bool descends(const Term& t, const Signature& sig) {
  return isCtorApp(t, sig) && sig.isInductive(t.sort());
}

bool distinctConstructors(const Literal& l, const Signature& sig) {
  return l.equality && isCtorApp(l.lhs, sig) && isCtorApp(l.rhs, sig) && l.lhs.head() != l.rhs.head();
}

bool cyclicEquation(const Literal& l, const Signature& sig) {
  return l.equality &&
         (isConstructorSubterm(l.lhs, l.rhs, sig) || isConstructorSubterm(l.rhs, l.lhs, sig));
}

void collectConstructorSubterms(const Term& t, const Signature& sig, std::vector<Term>& out) {
  if (!descends(t, sig)) return;
  for (const Term& a : t.args()) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    collectConstructorSubterms(a, sig, out);
  }
}

std::vector<Literal> without(const std::vector<Literal>& c, std::size_t skip) {
  std::vector<Literal> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != skip) out.push_back(c[i]);
  }
  return out;
}

}  // namespace

bool isConstructorSubterm(const Term& s, const Term& t, const Signature& sig) {
  if (!descends(t, sig) || s.size() >= t.size()) return false;
  for (const Term& a : t.args()) {
    if (a == s || isConstructorSubterm(s, a, sig)) return true;
  }
  return false;
}

std::vector<Term> constructorSubterms(const Term& t, const Signature& sig) {
  std::vector<Term> out;
  collectConstructorSubterms(t, sig, out);
  return out;
}

std::optional<std::vector<Literal>> distSimplify(const std::vector<Literal>& c, const Signature& sig) {
  std::vector<Literal> out;
  for (const Literal& l : c) {
    if (l.positive && distinctConstructors(l, sig)) continue;
    out.push_back(l);
  }
  if (out.size() == c.size()) return std::nullopt;
  return out;
}

bool distDelete(const std::vector<Literal>& c, const Signature& sig) {
  return std::any_of(c.begin(), c.end(),
                     [&](const Literal& l) { return !l.positive && distinctConstructors(l, sig); });
}

std::optional<std::vector<std::vector<Literal>>> injSimplifyPositive(const std::vector<Literal>& c,
                                                                      const Signature& sig) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Literal& l = c[i];
    if (!l.positive || !l.equality || !isCtorApp(l.lhs, sig) || !isCtorApp(l.rhs, sig)) continue;
    if (l.lhs.head() != l.rhs.head() || l.lhs.arity() == 0) continue;
    std::vector<Literal> rest = without(c, i);
    std::vector<std::vector<Literal>> out;
    for (std::size_t k = 0; k < l.lhs.arity(); ++k) {
      std::vector<Literal> clause{Literal::eq(l.lhs.arg(k), l.rhs.arg(k))};
      clause.insert(clause.end(), rest.begin(), rest.end());
      out.push_back(std::move(clause));
    }
    return out;
  }
  return std::nullopt;
}

std::optional<InjectivityNegativeResult> injSimplifyNegative(const std::vector<Literal>& c,
                                                             const Ordering& ord) {
  const Signature& sig = ord.signature();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Literal& l = c[i];
    if (l.positive || !l.equality || !isCtorApp(l.lhs, sig) || !isCtorApp(l.rhs, sig)) continue;
    if (l.lhs.head() != l.rhs.head() || l.lhs.arity() == 0) continue;
    std::vector<Literal> rest = without(c, i);
    std::vector<Literal> fresh;
    for (std::size_t k = 0; k < l.lhs.arity(); ++k) {
      fresh.push_back(Literal::neq(l.lhs.arg(k), l.rhs.arg(k)));
    }
    InjectivityNegativeResult r;
    // {s_1 ≉ t_1 ∨ … ∨ s_n ≉ t_n} ≺ C, vacuous for empty C.
    r.simplifying = rest.empty() || ord.compareClauses(fresh, rest) == Verdict::Less;
    r.conclusion = std::move(fresh);
    r.conclusion.insert(r.conclusion.end(), rest.begin(), rest.end());
    return r;
  }
  return std::nullopt;
}

std::optional<std::vector<Literal>> acycSimplify(const std::vector<Literal>& c, const Signature& sig) {
  std::vector<Literal> out;
  for (const Literal& l : c) {
    if (l.positive && cyclicEquation(l, sig)) continue;
    out.push_back(l);
  }
  if (out.size() == c.size()) return std::nullopt;
  return out;
}

bool acycDelete(const std::vector<Literal>& c, const Signature& sig) {
  return std::any_of(c.begin(), c.end(),
                     [&](const Literal& l) { return !l.positive && cyclicEquation(l, sig); });
}

std::vector<Inference> acycGenerate(const Clause& c, const Signature& sig) {
  std::vector<Inference> out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    const Literal& l = c.literals[i];
    if (!l.positive || !l.equality) continue;
    std::vector<Literal> rest = without(c.literals, i);
    for (int orient = 0; orient < 2; ++orient) {
      const Term& t = orient == 0 ? l.lhs : l.rhs;
      const Term& u = orient == 0 ? l.rhs : l.lhs;
      for (const Term& s : constructorSubterms(t, sig)) {
        if (s.sort() != u.sort()) continue;
        Inference inf;
        inf.rule = rules::kAcyclicityGenerate;
        inf.premises = {c.id};
        inf.conclusion.push_back(Literal::neq(s, u));
        inf.conclusion.insert(inf.conclusion.end(), rest.begin(), rest.end());
        out.push_back(std::move(inf));
      }
    }
  }
  return out;
}

}  // namespace adt
