#include <doctest.h>

#include "adt/core/error.hpp"
#include "adt/core/substitution.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace adt;
using namespace adt::testing;

namespace {

std::string str(const Term& t, const Fixture& fx) { return toString(t, fx.sig); }

Substitution bindings(std::initializer_list<std::pair<Term, Term>> bs) {
  Substitution s;
  for (const auto& [v, t] : bs) s.bind(v, t);
  return s;
}

}  // namespace

TEST_CASE("apply replaces bound variables simultaneously") {
  Fixture fx = natFixture();
  Term x = fx.var(0, "Nat"), y = fx.var(1, "Nat"), a = fx("a");
  Term fxy = fx("h", {x, y});
  CHECK(str(bindings({{x, a}}).apply(fxy), fx) == "h(a,X1)");
  CHECK(Substitution{}.apply(fxy) == fxy);
  CHECK(str(bindings({{x, y}, {y, a}}).apply(fxy), fx) == "h(X1,a)");
}

TEST_CASE("bind rejects sort mismatches and rebinding") {
  Fixture fx = listFixture();
  Substitution s;
  CHECK_THROWS_AS(s.bind(fx.var(0, "Nat"), fx("nil")), std::logic_error);
  s.bind(fx.var(0, "Nat"), fx("a"));
  CHECK_THROWS_AS(s.bind(fx.var(0, "Nat"), fx("b")), std::logic_error);
}

TEST_CASE("mgu examples") {
  Fixture fx = natFixture();
  Term x = fx.var(0, "Nat"), y = fx.var(1, "Nat");
  Term a = fx("a"), b = fx("b");

  auto t1 = mgu(x, fx("g", {y}));
  REQUIRE(t1);
  CHECK(t1->size() == 1);
  CHECK(str(t1->apply(x), fx) == "g(X1)");

  auto t2 = mgu(fx("h", {x, a}), fx("h", {b, y}));
  REQUIRE(t2);
  CHECK(t2->size() == 2);
  CHECK(t2->apply(x) == b);
  CHECK(t2->apply(y) == a);

  CHECK_FALSE(mgu(x, fx("g", {x})));
  CHECK_FALSE(mgu(fx("g", {x}), fx("s", {y})));
}

TEST_CASE("mgu on atoms of the same predicate") {
  Fixture fx = natFixture();
  Term x = fx.var(0, "Nat");
  auto theta = mgu(fx("p", {x}), fx("p", {fx("a")}));
  REQUIRE(theta);
  CHECK(theta->apply(x) == fx("a"));
  CHECK_FALSE(mgu(fx("p", {x}), fx("r", {x})));
}

TEST_CASE("mgu result is idempotent on chained bindings") {
  Fixture fx = natFixture();
  Term x = fx.var(0, "Nat"), y = fx.var(1, "Nat"), z = fx.var(2, "Nat");
  auto theta = mgu(fx("h", {x, y}), fx("h", {y, fx("g", {z})}));
  REQUIRE(theta);
  for (Term t : {x, y, z}) CHECK(theta->apply(theta->apply(t)) == theta->apply(t));
  CHECK(theta->apply(x) == fx("g", {z}));
}

TEST_CASE("renameApart separates variables") {
  Fixture fx = natFixture();
  Term x = fx.var(0, "Nat"), y = fx.var(1, "Nat");
  Clause c1 = clauseOf({Literal::atom(fx("p", {x}))});
  Clause c2 = clauseOf({Literal::atom(fx("r", {x}))});
  auto [r1, r2] = renameApart(c1, c2);
  CHECK(toString(r1, fx.sig) == "p(X0)");
  CHECK(toString(r2, fx.sig) == "r(X1)");

  Clause d2 = clauseOf({Literal::atom(fx("r", {y}))});
  auto [s1, s2] = renameApart(c1, d2);
  CHECK(s1.maxVar() < s2.literals[0].lhs.arg(0).var());

  Clause g1 = clauseOf({Literal::atom(fx("p", {fx("a")}))});
  Clause g2 = clauseOf({Literal::atom(fx("r", {fx("b")}))});
  auto [h1, h2] = renameApart(g1, g2);
  CHECK(h1.literals == g1.literals);
  CHECK(h2.literals == g2.literals);
}

TEST_CASE("makeApp checks arity and sorts") {
  Fixture fx = listFixture();
  CHECK_THROWS_AS(fx("s", {}), UserError);
  CHECK_THROWS_AS(fx("s", {fx("nil")}), UserError);
  CHECK(isWellSorted(fx("cons", {fx("a"), fx("nil")}), fx.sig));
}

TEST_CASE("signature rejects uninhabited datatypes") {
  Signature sig;
  SortId t = sig.declareDatatypeSort("Loop");
  sig.addConstructor(t, "mk", {{"un", t}});
  CHECK_THROWS_AS(sig.finalizeDatatypes(), UserError);
}

TEST_CASE("signature rejects duplicate symbols") {
  Fixture fx = natFixture();
  CHECK_THROWS_AS(fx.sig.declareFunction("a", {}, fx.sort("Nat")), UserError);
}

TEST_CASE("property: mgu soundness and most generality") {
  SuiteResult r = mguSuite(1500, 11);
  INFO(r.summary());
  CHECK(r.cases >= 1000);
  CHECK(r.ok());
}
