#pragma once

#include <string_view>
#include <vector>

#include "adt/core/clause.hpp"

namespace adt::testing {

/// A signature plus shorthand for building terms by name.
struct Fixture {
  Signature sig;

  SortId sort(std::string_view name) const { return *sig.findSort(name); }
  SymbolId symbol(std::string_view name) const { return *sig.findSymbol(name); }
  Term var(VarId id, std::string_view sortName) const { return Term::variable(id, sort(sortName)); }
  Term operator()(std::string_view f, std::vector<Term> args = {}) const { return makeApp(sig, f, std::move(args)); }
};

inline Clause clauseOf(std::vector<Literal> literals) {
  Clause c;
  c.literals = std::move(literals);
  return c;
}

/// Nat {z, s(pred)}; constants a, b, c; g : Nat → Nat; h : Nat × Nat → Nat;
/// predicates p, r : Nat and q : Nat × Nat.
inline Fixture natFixture() {
  Fixture f;
  SortId nat = f.sig.declareDatatypeSort("Nat");
  f.sig.addConstructor(nat, "z", {});
  f.sig.addConstructor(nat, "s", {{"pred", nat}});
  f.sig.finalizeDatatypes();
  for (const char* c : {"a", "b", "c"}) f.sig.declareFunction(c, {}, nat);
  f.sig.declareFunction("g", {nat}, nat);
  f.sig.declareFunction("h", {nat, nat}, nat);
  f.sig.declarePredicate("p", {nat});
  f.sig.declarePredicate("r", {nat});
  f.sig.declarePredicate("q", {nat, nat});
  return f;
}

/// Σ_Bin: plain sort tau, Bin {leaf(lab : tau), node(left : Bin, val : tau,
/// right : Bin)}; constants e : tau and t : Bin.
inline Fixture binFixture() {
  Fixture f;
  SortId tau = f.sig.declareSort("tau");
  SortId bin = f.sig.declareDatatypeSort("Bin");
  f.sig.addConstructor(bin, "leaf", {{"lab", tau}});
  f.sig.addConstructor(bin, "node", {{"left", bin}, {"val", tau}, {"right", bin}});
  f.sig.finalizeDatatypes();
  f.sig.declareFunction("e", {}, tau);
  f.sig.declareFunction("t", {}, bin);
  return f;
}

/// Nat as above plus List {nil, cons(head : Nat, tail : List)}; constants
/// l1, l2 : List and a, b : Nat; predicate p : Nat.
inline Fixture listFixture() {
  Fixture f;
  SortId nat = f.sig.declareDatatypeSort("Nat");
  SortId list = f.sig.declareDatatypeSort("List");
  f.sig.addConstructor(nat, "z", {});
  f.sig.addConstructor(nat, "s", {{"pred", nat}});
  f.sig.addConstructor(list, "nil", {});
  f.sig.addConstructor(list, "cons", {{"head", nat}, {"tail", list}});
  f.sig.finalizeDatatypes();
  for (const char* c : {"a", "b"}) f.sig.declareFunction(c, {}, nat);
  for (const char* c : {"l1", "l2"}) f.sig.declareFunction(c, {}, list);
  f.sig.declarePredicate("p", {nat});
  return f;
}

/// T {a, f(f1 : T, f2 : T)} with g : T → T uninterpreted and b : T.
inline Fixture treeFixture() {
  Fixture f;
  SortId t = f.sig.declareDatatypeSort("T");
  f.sig.addConstructor(t, "a", {});
  f.sig.addConstructor(t, "f", {{"f1", t}, {"f2", t}});
  f.sig.finalizeDatatypes();
  f.sig.declareFunction("g", {t}, t);
  f.sig.declareFunction("b", {}, t);
  f.sig.declarePredicate("p", {t});
  return f;
}

}  // namespace adt::testing
