#include <doctest.h>

#include <algorithm>

#include "adt/frontend/smtlib.hpp"
#include "adt/saturation/saturation.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace adt;
using namespace adt::testing;

namespace {

struct PairSig {
  Signature sig;
  Term a, b;
};

// T {c, f(pf), g(pg)} with constants a, b.
PairSig pairSignature(bool withG = true) {
  PairSig p;
  SortId t = p.sig.declareDatatypeSort("T");
  p.sig.addConstructor(t, "c", {});
  p.sig.addConstructor(t, "f", {{"pf", t}});
  if (withG) p.sig.addConstructor(t, "g", {{"pg", t}});
  p.sig.finalizeDatatypes();
  p.a = Term::apply(p.sig.declareFunction("a", {}, t), t);
  p.b = Term::apply(p.sig.declareFunction("b", {}, t), t);
  return p;
}

ProverConfig quick(AcyclicityMode mode = AcyclicityMode::Rules) {
  ProverConfig cfg;
  cfg.timeLimit = 5;
  cfg.ta.acyclicity = mode;
  return cfg;
}

std::vector<Clause> refuteInput(const std::string& text, Signature& sig) {
  Problem p = parseSmtlib(text);
  sig = p.signature;
  std::vector<Clause> out;
  for (const Formula& f : p.assertions) {
    for (Clause& c : clausify(f, sig)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST_CASE("saturate: distinctness pair") {
  PairSig p = pairSignature();
  std::vector<Clause> in{clauseOf({Literal::eq(makeApp(p.sig, "f", {p.a}), p.b)}),
                         clauseOf({Literal::eq(makeApp(p.sig, "g", {p.a}), p.b)})};
  CHECK((saturate(in, p.sig, quick()) == SaturationStatus::Unsatisfiable));
  ProverConfig noAxioms = quick();
  noAxioms.ta.axioms = false;
  CHECK((saturate(in, p.sig, noAxioms) == SaturationStatus::Saturated));
}

TEST_CASE("saturate: acyclicity pair under the subterm axioms") {
  PairSig p = pairSignature(false);
  std::vector<Clause> in{clauseOf({Literal::eq(makeApp(p.sig, "f", {p.a}), p.b)}),
                         clauseOf({Literal::eq(makeApp(p.sig, "f", {p.b}), p.a)})};
  CHECK((saturate(in, p.sig, quick(AcyclicityMode::Axioms)) == SaturationStatus::Unsatisfiable));
}

TEST_CASE("saturate: empty input") {
  Signature sig;
  CHECK((saturate({}, sig, quick()) == SaturationStatus::Saturated));
  Fixture fx = natFixture();
  CHECK((saturate({}, fx.sig, quick()) == SaturationStatus::Saturated));
}

TEST_CASE("saturate: resource limits") {
  Fixture fx = natFixture();
  ProverConfig zero = quick();
  zero.timeLimit = 0;
  std::vector<Clause> in{clauseOf({Literal::atom(fx("p", {fx("a")}))})};
  CHECK((saturate(in, fx.sig, zero) == SaturationStatus::ResourceOut));
  Signature sig;
  auto game = refuteInput(generateGame(6), sig);
  ProverConfig tiny = quick();
  tiny.clauseLimit = 10;
  CHECK((saturate(game, sig, tiny) == SaturationStatus::ResourceOut));
}

TEST_CASE("forward simplification examples") {
  Fixture fx = natFixture();
  Ordering ord(fx.sig);
  Term x = fx.var(0, "Nat"), a = fx("a");
  TAConfig ta;
  Literal px = Literal::atom(fx("p", {x}));
  CHECK_FALSE(forwardSimplify({Literal::eq(x, x), px}, ord, ta, {}));

  auto r = forwardSimplify({Literal::eq(fx("z"), fx("s", {x})), px}, ord, ta, {});
  REQUIRE(r);
  REQUIRE(r->size() == 1);
  CHECK(toString((*r)[0], fx.sig) == "p(X0)");

  CHECK_FALSE(forwardSimplify({Literal::atom(fx("p", {a}))}, ord, ta, {{px}}));

  auto dup = forwardSimplify({px, px, Literal::neq(a, a)}, ord, ta, {});
  REQUIRE(dup);
  CHECK(toString((*dup)[0], fx.sig) == "p(X0)");
  CHECK_FALSE(forwardSimplify({px, Literal::atom(fx("p", {x}), false)}, ord, ta, {}));
}

TEST_CASE("forward simplification respects the acyclicity mode") {
  Fixture fx = natFixture();
  Ordering ord(fx.sig);
  Term x = fx.var(0, "Nat");
  std::vector<Literal> c{Literal::neq(x, fx("s", {x}))};
  TAConfig rulesMode;
  CHECK_FALSE(forwardSimplify(c, ord, rulesMode, {}));
  TAConfig axioms;
  axioms.acyclicity = AcyclicityMode::Axioms;
  CHECK(forwardSimplify(c, ord, axioms, {}));
}

TEST_CASE("is_redundant examples") {
  Fixture fx = natFixture();
  Term x = fx.var(0, "Nat"), a = fx("a"), b = fx("b");
  Literal px = Literal::atom(fx("p", {x})), pa = Literal::atom(fx("p", {a}));
  Literal rb = Literal::atom(fx("r", {b}));
  CHECK(isRedundant({pa, rb}, {{px}}));
  CHECK_FALSE(isRedundant({px}, {{pa}}));
  CHECK(isRedundant({px, rb}, {{px, rb}}));
  // Equations match up to symmetry; literals must map injectively.
  CHECK(subsumes({Literal::eq(x, a)}, {Literal::eq(a, b)}));
  CHECK_FALSE(subsumes({px, Literal::atom(fx("p", {fx.var(1, "Nat")}))}, {pa}));
}

TEST_CASE("decide examples") {
  Fixture fx = natFixture();
  Term x = fx.var(0, "Nat"), y = fx.var(1, "Nat");
  ProverConfig cfg = quick();
  Formula closure = Formula::forall(
      {x}, Formula::disjunction({Formula::equal(x, fx("z")), Formula::exists({y}, Formula::equal(x, fx("s", {y})))}));
  CHECK((decide(closure, fx.sig, cfg).result == DecideResult::Theorem));

  Formula cyc = Formula::exists({x}, Formula::equal(x, fx("s", {x})));
  DecideReport r = decide(cyc, fx.sig, cfg);
  CHECK((r.result == DecideResult::NonTheorem));
  CHECK_FALSE(r.proof.empty());

  CHECK((decide(Formula::top(), fx.sig, cfg).result == DecideResult::Theorem));
  CHECK((decide(Formula::bottom(), fx.sig, cfg).result == DecideResult::NonTheorem));
}

TEST_CASE("decide gives up within its time budget") {
  Fixture fx = natFixture();
  ProverConfig cfg = quick();
  cfg.timeLimit = 0.2;
  Term x = fx.var(0, "Nat");
  // p is uninterpreted: neither p(z) nor its negation follows.
  Formula f = Formula::forall({x}, Formula::implies(Formula::pred(fx("p", {x})), Formula::pred(fx("p", {fx("s", {x})}))));
  CHECK((decide(f, fx.sig, cfg).result == DecideResult::ResourceOut));
}

TEST_CASE("given-clause selection is fair") {
  Signature sig;
  auto in = refuteInput(generateGame(4), sig);
  for (unsigned ratio : {1u, 2u}) {
    ProverConfig cfg = quick();
    cfg.ageRatio = ratio;
    cfg.weightRatio = 4;
    Saturation sat(sig, cfg);
    sat.addInput(generateAxioms(sig, cfg.ta));
    sat.addInput(in);
    std::size_t sinceOldest = 0, worst = 0;
    for (int i = 0; i < 400 && sat.status() == SaturationStatus::Running; ++i) {
      ClauseId oldest = sat.oldestPassive();
      sat.step();
      if (sat.lastGiven() == oldest) {
        sinceOldest = 0;
      } else {
        worst = std::max(worst, ++sinceOldest);
      }
    }
    CHECK(worst < ratio + 4);
  }
}

TEST_CASE("runs are deterministic") {
  Signature sig;
  auto in = refuteInput(generateGame(3), sig);
  Saturation s1(sig, quick()), s2(sig, quick());
  for (Saturation* s : {&s1, &s2}) {
    s->addInput(generateAxioms(sig, quick().ta));
    s->addInput(in);
  }
  CHECK((s1.run() == s2.run()));
  CHECK(s1.statistics() == s2.statistics());
  CHECK(s1.clauseCount() == s2.clauseCount());
  auto p1 = s1.proof(), p2 = s2.proof();
  REQUIRE(p1.size() == p2.size());
  for (std::size_t i = 0; i < p1.size(); ++i) CHECK(p1[i]->literals == p2[i]->literals);
}

TEST_CASE("statistics account for every clause") {
  for (const char* mode : {"rules", "axioms"}) {
    Signature sig;
    auto in = refuteInput(generateGame(2), sig);
    ProverConfig cfg = quick(*parseAcyclicityMode(mode));
    Saturation sat(sig, cfg);
    sat.addInput(generateAxioms(sig, cfg.ta));
    sat.addInput(in);
    sat.run();
    const Statistics& st = sat.statistics();
    CHECK(st.generated == sat.clauseCount());
    CHECK(st.generated >= sat.activeClauses().size() + st.deleted);
    CHECK(st.activations >= sat.activeClauses().size());
  }
}

TEST_CASE("proofs end in the empty clause and replay") {
  Signature sig;
  auto in = refuteInput(generateGame(2), sig);
  for (AcyclicityMode mode : {AcyclicityMode::Rules, AcyclicityMode::Axioms, AcyclicityMode::Off}) {
    ProverConfig cfg = quick(mode);
    Saturation sat(sig, cfg);
    sat.addInput(generateAxioms(sig, cfg.ta));
    sat.addInput(in);
    REQUIRE((sat.run() == SaturationStatus::Unsatisfiable));
    auto proof = sat.proof();
    REQUIRE_FALSE(proof.empty());
    CHECK(proof.back()->empty());
    CHECK(std::is_sorted(proof.begin(), proof.end(), [](const ClausePtr& a, const ClausePtr& b) { return a->id < b->id; }));
    ProofCheck pc = replayProof(proof, sig, cfg);
    INFO(pc.message);
    CHECK(pc.ok);
  }
}

TEST_CASE("replay rejects a tampered proof") {
  Signature sig;
  auto in = refuteInput(generateGame(1), sig);
  ProverConfig cfg = quick();
  Saturation sat(sig, cfg);
  sat.addInput(generateAxioms(sig, cfg.ta));
  sat.addInput(in);
  REQUIRE((sat.run() == SaturationStatus::Unsatisfiable));
  auto proof = sat.proof();
  auto tampered = proof;
  for (ClausePtr& c : tampered) {
    if (!c->premises.empty() && !c->empty()) {
      Clause copy = *c;
      copy.literals.push_back(copy.literals.empty() ? Literal::eq(Term(), Term()) : copy.literals.front().negated());
      c = std::make_shared<const Clause>(copy);
      break;
    }
  }
  CHECK_FALSE(replayProof(tampered, sig, cfg).ok);
}

TEST_CASE("property: inference soundness over the regression problems") {
  auto problems = regressionProblems(CORPUS_DIR);
  REQUIRE(problems.size() >= 30);
  ProverConfig cfg;
  cfg.timeLimit = 1;
  for (AcyclicityMode mode : {AcyclicityMode::Rules, AcyclicityMode::Axioms}) {
    cfg.ta.acyclicity = mode;
    SuiteResult r = inferenceSoundnessSuite(problems, cfg, 51);
    MESSAGE(r.summary());
    CHECK(r.ok());
  }
}
