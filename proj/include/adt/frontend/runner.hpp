#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "adt/frontend/smtlib.hpp"
#include "adt/saturation/saturation.hpp"

namespace adt {

enum class RunMode { Refute, Decide };

struct RunOptions {
  RunMode mode = RunMode::Refute;
  ProverConfig prover;
  bool proof = false;
  bool stats = false;
};

enum class RunVerdict { Unsatisfiable, Satisfiable, ResourceOut, Theorem, NonTheorem };

struct RunReport {
  RunVerdict verdict = RunVerdict::ResourceOut;
  double seconds = 0.0;
  Statistics statistics;
  /// `id. clause [rule, premises]`, one per proof step.
  std::vector<std::string> proof;
  /// Diagnostics for standard error.
  std::vector<std::string> warnings;

  /// SZS status word: Unsatisfiable, Satisfiable, GaveUp, Theorem or
  /// CounterSatisfiable.
  const char* szsStatus() const;
  int exitCode() const { return verdict == RunVerdict::ResourceOut ? 1 : 0; }
};

/// Refute mode saturates the assertions with the term-algebra axioms;
/// decide mode runs `decide` on their conjunction.
RunReport runProblem(const Problem& problem, const RunOptions& options);

/// Status line, then the proof and statistics blocks if requested.
std::string formatReport(const RunReport& report, const RunOptions& options);

/// Command-line entry point; reads FILE or `in`. Returns the exit status:
/// 0 on a definite verdict, 1 on ResourceOut, 2 on input or usage errors.
int runCli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace adt
