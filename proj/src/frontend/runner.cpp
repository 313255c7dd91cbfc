#include "adt/frontend/runner.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "adt/core/error.hpp"

namespace adt {

const char* RunReport::szsStatus() const {
  switch (verdict) {
    case RunVerdict::Unsatisfiable:
      return "Unsatisfiable";
    case RunVerdict::Satisfiable:
      return "Satisfiable";
    case RunVerdict::ResourceOut:
      return "GaveUp";
    case RunVerdict::Theorem:
      return "Theorem";
    case RunVerdict::NonTheorem:
      return "CounterSatisfiable";
  }
  return "GaveUp";
}

namespace {

std::vector<std::string> proofLines(const std::vector<ClausePtr>& proof, const Signature& sig) {
  std::vector<std::string> out;
  for (const ClausePtr& c : proof) {
    std::string line = std::to_string(c->id) + ". " + toString(c->literals, sig) + " [" + c->rule;
    for (ClauseId p : c->premises) line += ", " + std::to_string(p);
    out.push_back(line + "]");
  }
  return out;
}

bool pureTermAlgebra(const Signature& sig) {
  for (std::uint32_t i = 0; i < sig.symbolCount(); ++i) {
    SymbolRole r = sig.symbol(SymbolId{i}).role;
    if (r == SymbolRole::Function || r == SymbolRole::Predicate) return false;
  }
  for (std::uint32_t i = 1; i < sig.sortCount(); ++i) {
    if (!sig.isDatatype(SortId{i})) return false;
  }
  return true;
}

Statistics combined(const Statistics& a, const Statistics& b) {
  Statistics s;
  s.generated = a.generated + b.generated;
  s.inferences = a.inferences + b.inferences;
  s.activations = a.activations + b.activations;
  s.simplified = a.simplified + b.simplified;
  s.deleted = a.deleted + b.deleted;
  s.tautologies = a.tautologies + b.tautologies;
  s.forwardSubsumed = a.forwardSubsumed + b.forwardSubsumed;
  s.backwardSubsumed = a.backwardSubsumed + b.backwardSubsumed;
  s.theorySteps = a.theorySteps + b.theorySteps;
  return s;
}

}  // namespace

RunReport runProblem(const Problem& problem, const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  RunReport report;
  if (options.mode == RunMode::Decide) {
    if (!pureTermAlgebra(problem.signature)) {
      report.warnings.push_back("decide: problem uses symbols outside the term algebra; completeness is not guaranteed");
    }
    DecideReport d = decide(Formula::conjunction(problem.assertions), problem.signature, options.prover);
    report.verdict = d.result == DecideResult::Theorem      ? RunVerdict::Theorem
                     : d.result == DecideResult::NonTheorem ? RunVerdict::NonTheorem
                                                            : RunVerdict::ResourceOut;
    report.statistics = combined(d.negatedSide, d.positiveSide);
    if (options.proof) report.proof = proofLines(d.proof, d.proofSignature);
  } else {
    Signature sig = problem.signature;
    std::vector<Clause> input;
    for (const Formula& f : problem.assertions) {
      for (Clause& c : clausify(f, sig)) input.push_back(std::move(c));
    }
    Saturation s(sig, options.prover);
    s.start();
    s.addInput(generateAxioms(sig, options.prover.ta));
    s.addInput(input);
    switch (s.run()) {
      case SaturationStatus::Unsatisfiable:
        report.verdict = RunVerdict::Unsatisfiable;
        break;
      case SaturationStatus::Saturated:
        report.verdict = RunVerdict::Satisfiable;
        break;
      default:
        report.verdict = RunVerdict::ResourceOut;
        break;
    }
    report.statistics = s.statistics();
    if (options.proof) report.proof = proofLines(s.proof(), sig);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string formatReport(const RunReport& report, const RunOptions& options) {
  std::ostringstream out;
  out << "% SZS status " << report.szsStatus() << "\n";
  if (options.proof && !report.proof.empty()) {
    for (const std::string& line : report.proof) out << line << "\n";
  }
  if (options.stats) {
    const Statistics& s = report.statistics;
    out << "% time: " << report.seconds << "\n"
        << "% generated: " << s.generated << "\n"
        << "% inferences: " << s.inferences << "\n"
        << "% activations: " << s.activations << "\n"
        << "% simplified: " << s.simplified << "\n"
        << "% deleted: " << s.deleted << "\n"
        << "% tautologies: " << s.tautologies << "\n"
        << "% forward subsumed: " << s.forwardSubsumed << "\n"
        << "% backward subsumed: " << s.backwardSubsumed << "\n"
        << "% theory steps: " << s.theorySteps << "\n";
  }
  return out.str();
}

int runCli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superposition prover for finite term algebras"};
  std::string mode = "refute";
  std::string acyclicity = "rules";
  std::string taRules = "on";
  std::string taAxioms = "on";
  std::string transitivity = "stepwise";
  double timeLimit = 60.0;
  std::uint64_t clauseLimit = ProverConfig{}.clauseLimit;
  int game = 0;
  bool proof = false;
  bool stats = false;
  std::string file;

  app.add_option("--mode", mode, "refute or decide")->check(CLI::IsMember({"refute", "decide"}));
  app.add_option("--acyclicity", acyclicity, "off, axioms or rules")->check(CLI::IsMember({"off", "axioms", "rules"}));
  app.add_option("--ta-rules", taRules, "term-algebra simplification rules")->check(CLI::IsMember({"on", "off"}));
  app.add_option("--ta-axioms", taAxioms, "closure, distinctness, injectivity and destructor axioms")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--transitivity", transitivity, "subterm transitivity axiom: full or stepwise")
      ->check(CLI::IsMember({"full", "stepwise"}));
  app.add_option("--time-limit", timeLimit, "seconds")->check(CLI::NonNegativeNumber);
  app.add_option("--clause-limit", clauseLimit, "maximum number of clauses")->check(CLI::PositiveNumber);
  app.add_option("--generate-game", game, "print the game benchmark of depth K and exit")->check(CLI::PositiveNumber);
  app.add_flag("--proof", proof, "print the refutation");
  app.add_flag("--stats", stats, "print statistics");
  app.add_option("file", file, "SMTLIB input (standard input if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (game > 0) {
    out << generateGame(game);
    return 0;
  }

  RunOptions options;
  options.mode = mode == "decide" ? RunMode::Decide : RunMode::Refute;
  options.proof = proof;
  options.stats = stats;
  options.prover.timeLimit = timeLimit;
  options.prover.clauseLimit = clauseLimit;
  options.prover.ta.acyclicity = *parseAcyclicityMode(acyclicity);
  options.prover.ta.rulesEnabled = taRules == "on";
  options.prover.ta.axioms = taAxioms == "on";
  options.prover.ta.transitivity =
      transitivity == "full" ? TransitivityVariant::TransitiveAxiom : TransitivityVariant::StepwiseAxiom;

  std::string text;
  if (file.empty()) {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(file, std::ios::binary);
    if (!f) {
      err << "error: cannot read '" << file << "'\n";
      return 2;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }

  RunReport report;
  try {
    Problem problem = parseSmtlib(text);
    report = runProblem(problem, options);
  } catch (const ParseError& e) {
    err << (file.empty() ? std::string("<stdin>") : file) << ":" << e.what() << "\n";
    return 2;
  } catch (const UserError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
  out << formatReport(report, options);
  return report.exitCode();
}

}  // namespace adt
