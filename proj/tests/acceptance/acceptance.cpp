#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "adt/frontend/runner.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace adt;
using namespace adt::testing;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  explicit Criterion(std::string name) : id(std::move(name)) {}
  std::string id;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

void report(const Criterion& c, std::vector<bool>& results) {
  for (const std::string& n : c.notes) std::cout << "    " << n << "\n";
  std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << "\n" << std::flush;
  results.push_back(c.pass);
}

std::string fmt(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << s << "s";
  return o.str();
}

RunReport refute(const std::string& text, AcyclicityMode mode, double limit, bool taAxioms = true) {
  RunOptions opts;
  opts.prover.timeLimit = limit;
  opts.prover.ta.acyclicity = mode;
  opts.prover.ta.axioms = taAxioms;
  return runProblem(parseSmtlib(text), opts);
}

const char* verdictName(RunVerdict v) {
  switch (v) {
    case RunVerdict::Unsatisfiable:
      return "Unsatisfiable";
    case RunVerdict::Satisfiable:
      return "Satisfiable";
    case RunVerdict::ResourceOut:
      return "ResourceOut";
    case RunVerdict::Theorem:
      return "Theorem";
    case RunVerdict::NonTheorem:
      return "NonTheorem";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Criterion ac1() {
  Criterion c("AC1 game benchmark (rules mode, k=1,2 within 2s, k=3 within 120s)");
  const double limits[] = {2.0, 2.0, 120.0};
  for (int k = 1; k <= 3; ++k) {
    auto t0 = Clock::now();
    RunReport r = refute(generateGame(k), AcyclicityMode::Rules, limits[k - 1]);
    double t = since(t0);
    c.require(r.verdict == RunVerdict::Unsatisfiable && t <= limits[k - 1],
              "k=" + std::to_string(k) + " " + verdictName(r.verdict) + " in " + fmt(t));
  }
  // Beyond the requirement: how far the engine gets.
  for (int k = 4; k <= 6; ++k) {
    auto t0 = Clock::now();
    RunReport r = refute(generateGame(k), AcyclicityMode::Rules, 10);
    c.notes.push_back("info k=" + std::to_string(k) + " " + verdictName(r.verdict) + " in " + fmt(since(t0)));
  }
  return c;
}

const char* kDistPair = R"((declare-datatypes () ((T (c) (f (pf T)) (g (pg T)))))
(declare-const a T)
(declare-const b T)
(assert (= (f a) b))
(assert (= (g a) b)))";

const char* kAcycPair = R"((declare-datatypes () ((T (c) (f (pf T)))))
(declare-const a T)
(declare-const b T)
(assert (= (f a) b))
(assert (= (f b) a)))";

Criterion ac2() {
  Criterion c("AC2 distinctness pair: refuted with axioms within 1s, saturated with rules only");
  auto t0 = Clock::now();
  RunReport r = refute(kDistPair, AcyclicityMode::Rules, 1.0);
  double t = since(t0);
  c.require(r.verdict == RunVerdict::Unsatisfiable && t <= 1.0,
            std::string("with axioms: ") + verdictName(r.verdict) + " in " + fmt(t));
  RunReport s = refute(kDistPair, AcyclicityMode::Rules, 10.0, false);
  c.require(s.verdict == RunVerdict::Satisfiable,
            std::string("axioms suppressed, rules only: ") + verdictName(s.verdict) + " after " +
                std::to_string(s.statistics.activations) + " activations");
  return c;
}

Criterion ac3() {
  Criterion c("AC3 acyclicity pair refuted with --acyclicity axioms within 1s");
  auto t0 = Clock::now();
  RunReport r = refute(kAcycPair, AcyclicityMode::Axioms, 1.0);
  double t = since(t0);
  c.require(r.verdict == RunVerdict::Unsatisfiable && t <= 1.0, std::string(verdictName(r.verdict)) + " in " + fmt(t));
  return c;
}

// ---------------------------------------------------------------------------

// Constructor terms of depth ≤ 3 properly containing x (variable 0).
std::vector<Term> a4Terms(const Fixture& fx, const char* sortName, std::size_t want, std::mt19937_64& rng) {
  SortId sort = fx.sort(sortName);
  Term x = fx.var(0, sortName);
  std::vector<Term> out;
  if (std::string(sortName) == "Nat") {
    Term t = x;
    for (int d = 0; d < 3 && out.size() < want; ++d) out.push_back(t = fx("s", {t}));
    return out;
  }
  SortId tau = fx.sort("tau");
  VarId next = 1;
  std::function<Term(int, bool)> gen = [&](int depth, bool mustContainX) -> Term {
    if (depth == 0 || (!mustContainX && rng() % 3 == 0)) {
      if (mustContainX) return x;
      return rng() % 2 ? Term::variable(next++, sort) : fx("leaf", {Term::variable(next++, tau)});
    }
    if (mustContainX && depth > 0 && rng() % 4 == 0 && depth < 3) return x;
    const int side = static_cast<int>(rng() % 2);
    Term l = gen(depth - 1, mustContainX && side == 0);
    Term r = gen(depth - 1, mustContainX && side == 1);
    return fx("node", {l, Term::variable(next++, tau), r});
  };
  std::set<std::string> seen;
  for (int tries = 0; out.size() < want && tries < 1000; ++tries) {
    next = 1;
    Term t = gen(1 + static_cast<int>(rng() % 3), true);
    if (t == x || !seen.insert(toString(t, fx.sig)).second) continue;
    out.push_back(t);
  }
  return out;
}

Criterion ac4() {
  Criterion c("AC4 20 A4 instances over nat and Bin: decide gives Theorem within 5s each");
  std::mt19937_64 rng(4);
  std::vector<std::pair<Fixture, Term>> cases;
  Fixture nat = natFixture(), bin = binFixture();
  for (const Term& t : a4Terms(nat, "Nat", 3, rng)) cases.emplace_back(nat, t);
  for (const Term& t : a4Terms(bin, "Bin", 17, rng)) cases.emplace_back(bin, t);
  c.require(cases.size() == 20, std::to_string(cases.size()) + " instances sampled");
  double worst = 0;
  int proved = 0;
  for (const auto& [fx, t] : cases) {
    std::vector<Term> vars;
    t.collectVariables(vars);
    std::vector<Term> bound;
    for (const Term& v : vars) {
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) bound.push_back(v);
    }
    Term x = *std::find_if(bound.begin(), bound.end(), [](const Term& v) { return v.var() == 0; });
    Formula f = Formula::forall(bound, Formula::negation(Formula::equal(x, t)));
    ProverConfig cfg;
    cfg.timeLimit = 5;
    cfg.ta.acyclicity = AcyclicityMode::Axioms;
    auto t0 = Clock::now();
    DecideReport r = decide(f, fx.sig, cfg);
    double secs = since(t0);
    worst = std::max(worst, secs);
    bool ok = r.result == DecideResult::Theorem && secs <= 5.0;
    proved += ok;
    if (!ok) c.require(false, "x != " + toString(t, fx.sig) + ": " + toString(r.result) + " in " + fmt(secs));
  }
  c.require(proved == static_cast<int>(cases.size()),
            std::to_string(proved) + "/" + std::to_string(cases.size()) + " Theorem, slowest " + fmt(worst));
  return c;
}

// ---------------------------------------------------------------------------

Criterion ac5(const std::string& corpus) {
  Criterion c("AC5 acyclicity mode comparison over the corpus");
  const std::vector<std::pair<std::string, AcyclicityMode>> modes{
      {"off", AcyclicityMode::Off}, {"axioms", AcyclicityMode::Axioms}, {"rules", AcyclicityMode::Rules}};
  auto files = corpusFiles(corpus);
  c.require(files.size() >= 30, std::to_string(files.size()) + " problems");
  std::map<std::string, std::map<std::string, RunVerdict>> table;
  std::map<std::string, int> refuted, satisfied, unsound;
  std::map<std::string, bool> expectUnsat;
  for (const std::string& f : files) {
    std::string name = std::filesystem::path(f).stem().string();
    Problem p = parseSmtlib(readFile(f));
    expectUnsat[name] = p.expected == ExpectedStatus::Unsat;
    for (const auto& [m, mode] : modes) {
      RunOptions opts;
      opts.prover.timeLimit = 3;
      opts.prover.ta.acyclicity = mode;
      RunVerdict v = runProblem(p, opts).verdict;
      table[name][m] = v;
      if (v == RunVerdict::Unsatisfiable) (expectUnsat[name] ? refuted[m] : unsound[m])++;
      if (v == RunVerdict::Satisfiable && !expectUnsat[name]) satisfied[m]++;
    }
  }
  std::ostringstream t;
  t << std::left << std::setw(22) << "problem" << std::setw(7) << "status";
  for (const auto& [m, mode] : modes) t << std::setw(15) << m;
  c.notes.push_back("info " + t.str());
  for (const auto& [name, row] : table) {
    std::ostringstream line;
    line << std::left << std::setw(22) << name << std::setw(7) << (expectUnsat[name] ? "unsat" : "sat");
    for (const auto& [m, mode] : modes) line << std::setw(15) << verdictName(row.at(m));
    c.notes.push_back("info " + line.str());
  }
  for (const auto& [m, mode] : modes) {
    c.notes.push_back("info " + m + ": refuted " + std::to_string(refuted[m]) + ", satisfiable (correct) " +
                      std::to_string(satisfied[m]));
  }
  bool covered = true;
  std::string separating;
  for (const auto& [name, row] : table) {
    if (row.at("off") == RunVerdict::Unsatisfiable &&
        (row.at("axioms") != RunVerdict::Unsatisfiable || row.at("rules") != RunVerdict::Unsatisfiable)) {
      covered = false;
      c.notes.push_back("FAIL solved by off but not by every mode: " + name);
    }
    if (row.at("axioms") == RunVerdict::Unsatisfiable && row.at("rules") != RunVerdict::Unsatisfiable) {
      separating += (separating.empty() ? "" : ", ") + name;
    }
  }
  c.require(covered, "axioms and rules refute every problem off refutes");
  c.require(!separating.empty(), "refuted by axioms but not rules: " + (separating.empty() ? "none" : separating));
  int bad = unsound["off"] + unsound["axioms"] + unsound["rules"];
  c.require(bad == 0, "no refutation of a satisfiable problem (" + std::to_string(bad) + ")");
  return c;
}

// ---------------------------------------------------------------------------

Criterion ac6(const std::string& corpus) {
  Criterion c("AC6 property suites");
  auto check = [&](const SuiteResult& r, std::size_t minCases) {
    c.require(r.ok() && r.cases >= minCases, r.summary());
  };
  check(kboSuite(1500, 601), 1000);
  check(selectionSuite(1000, 602), 1000);
  check(mguSuite(1500, 603), 1000);
  check(clausifierSuite(250, 604), 200);
  check(subtermSuite(1000, 605), 1000);
  check(taRuleSuite(1200, 606), 1000);
  auto problems = regressionProblems(corpus);
  for (AcyclicityMode mode : {AcyclicityMode::Rules, AcyclicityMode::Axioms, AcyclicityMode::Off}) {
    ProverConfig cfg;
    cfg.timeLimit = 1;
    cfg.ta.acyclicity = mode;
    SuiteResult r = inferenceSoundnessSuite(problems, cfg, 607);
    r.name += std::string(" [") + toString(mode) + "]";
    check(r, 1);
  }
  return c;
}

// ---------------------------------------------------------------------------

struct Proc {
  int code;
  std::string out;
};

Proc runProver(const std::string& args, const std::string& stdinText = "") {
  auto dir = std::filesystem::temp_directory_path();
  auto in = dir / "adt_acceptance_in.smt2";
  std::ofstream(in) << stdinText;
  std::string cmd = std::string(PROVER_PATH) + " " + args + " < " + in.string() + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Criterion ac7(const std::string& corpus) {
  Criterion c("AC7 frontend: figure instance, round trip, CLI contract");
  const std::string figure = generateGame(1);
  Problem p = parseSmtlib(figure);
  c.require(p.assertions.size() == 1 && p.signature.findSymbol("pred").has_value(), "figure instance parses");
  RunReport r = refute(figure, AcyclicityMode::Rules, 10);
  c.require(r.verdict == RunVerdict::Unsatisfiable, std::string("figure instance: ") + verdictName(r.verdict));

  int roundTrips = 0;
  auto files = corpusFiles(corpus);
  for (const std::string& f : files) {
    Problem a = parseSmtlib(readFile(f));
    Problem b = parseSmtlib(printSmtlib(a));
    bool same = a.signature.symbolCount() == b.signature.symbolCount() && a.assertions.size() == b.assertions.size();
    for (std::size_t i = 0; same && i < a.assertions.size(); ++i) same = alphaEquivalent(a.assertions[i], b.assertions[i]);
    for (std::uint32_t i = 0; same && i < a.signature.symbolCount(); ++i) {
      same = a.signature.symbol(SymbolId{i}).name == b.signature.symbol(SymbolId{i}).name;
    }
    if (same) ++roundTrips;
    else c.require(false, "round trip differs: " + f);
  }
  c.require(roundTrips == static_cast<int>(files.size()),
            "round trip " + std::to_string(roundTrips) + "/" + std::to_string(files.size()));

  const std::string nat = "(declare-datatypes () ((Nat (z) (s (pred Nat)))))\n";
  struct Expect {
    std::string args, input;
    int code;
    std::string out;
  };
  const std::vector<Expect> expectations{
      {"--acyclicity rules", generateGame(1), 0, "% SZS status Unsatisfiable\n"},
      {"", nat + "(declare-const a Nat)(assert (= a (s z)))", 0, "% SZS status Satisfiable\n"},
      {"--time-limit 0", generateGame(1), 1, "% SZS status GaveUp\n"},
      {"--mode decide", nat + "(assert (forall ((x Nat)) (not (= x (s x)))))", 0, "% SZS status Theorem\n"},
      {"--mode decide", nat + "(assert (exists ((x Nat)) (= x (s x))))", 0, "% SZS status CounterSatisfiable\n"},
      {"", "(assert", 2, ""},
      {"--acyclicity maybe", "", 2, ""},
      {"--generate-game 2", "", 0, generateGame(2)},
  };
  for (const Expect& e : expectations) {
    Proc pr = runProver(e.args, e.input);
    c.require(pr.code == e.code && pr.out == e.out,
              "prover " + e.args + " -> exit " + std::to_string(pr.code) + (pr.out.empty() ? "" : ", " + pr.out.substr(0, pr.out.find('\n'))));
  }
  Proc piped = runProver("--acyclicity rules", runProver("--generate-game 1").out);
  c.require(piped.code == 0 && piped.out == "% SZS status Unsatisfiable\n", "--generate-game 1 | prover --acyclicity rules");
  Proc malformed = [&] {
    auto path = std::filesystem::temp_directory_path() / "adt_acceptance_bad.smt2";
    std::ofstream(path) << nat << "(assert (= z";
    std::string cmd = std::string(PROVER_PATH) + " " + path.string() + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return Proc{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }();
  c.require(malformed.code == 2 && malformed.out.find(":2:") != std::string::npos &&
                malformed.out.find("unclosed") != std::string::npos,
            "malformed file -> exit " + std::to_string(malformed.code) + ", " + malformed.out.substr(0, malformed.out.find('\n')));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::string corpus = argc > 1 ? argv[1] : CORPUS_DIR;
  std::vector<bool> results;
  report(ac1(), results);
  report(ac2(), results);
  report(ac3(), results);
  report(ac4(), results);
  report(ac5(corpus), results);
  report(ac6(corpus), results);
  report(ac7(corpus), results);
  const auto passed = std::count(results.begin(), results.end(), true);
  std::cout << passed << "/" << results.size() << " acceptance criteria passed\n";
  return passed == static_cast<long>(results.size()) ? 0 : 1;
}
