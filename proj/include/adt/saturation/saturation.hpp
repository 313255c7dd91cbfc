#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "adt/clausify/clausify.hpp"
#include "adt/saturation/simplifier.hpp"

namespace adt {

struct ProverConfig {
  /// Seconds; 0 gives up immediately.
  double timeLimit = 60.0;
  std::uint64_t clauseLimit = 5'000'000;
  /// Given-clause picks by age and by weight, per cycle.
  unsigned ageRatio = 1;
  unsigned weightRatio = 4;
  TAConfig ta;
};

enum class SaturationStatus { Running, Unsatisfiable, Saturated, ResourceOut };

const char* toString(SaturationStatus s);

struct Statistics {
  /// Every clause record created: input, generated and simplified.
  std::uint64_t generated = 0;
  std::uint64_t inferences = 0;
  std::uint64_t activations = 0;
  std::uint64_t simplified = 0;
  std::uint64_t deleted = 0;
  std::uint64_t tautologies = 0;
  std::uint64_t forwardSubsumed = 0;
  std::uint64_t backwardSubsumed = 0;
  std::uint64_t theorySteps = 0;

  friend bool operator==(const Statistics&, const Statistics&) = default;
};

/// Called for every generating inference and simplification step.
using InferenceObserver = std::function<void(const Inference&)>;

/// Given-clause saturation (Discount style): only active clauses take
/// part in inferences; new clauses are simplified before entering passive
/// and once more when picked.
class Saturation {
 public:
  Saturation(const Signature& sig, ProverConfig cfg);

  /// Adds input clauses to passive. Records keep `rule`, `premises` and
  /// `theoryAxiom`; ids are reassigned.
  void addInput(const std::vector<Clause>& clauses);

  void setObserver(InferenceObserver obs) { observer_ = std::move(obs); }

  /// Starts the time budget; called by `run` if not called before.
  void start();
  /// One given-clause iteration.
  SaturationStatus step();
  SaturationStatus run();

  SaturationStatus status() const { return status_; }
  const Statistics& statistics() const { return stats_; }
  const Signature& signature() const { return *sig_; }
  const ProverConfig& config() const { return cfg_; }

  const ClausePtr& clause(ClauseId id) const { return clauses_.at(id - 1); }
  std::size_t clauseCount() const { return clauses_.size(); }
  std::vector<ClausePtr> activeClauses() const;
  std::size_t passiveCount() const { return passive_.size(); }
  /// Smallest passive id, 0 when passive is empty.
  ClauseId oldestPassive() const { return passive_.empty() ? 0 : passive_.begin()->first; }
  /// Clause picked by the latest `step`, 0 before the first pick.
  ClauseId lastGiven() const { return lastGiven_; }

  /// Ancestry of the empty clause in id order; empty unless refuted.
  std::vector<ClausePtr> proof() const;

 private:
  struct Entry {
    ClausePtr clause;
    SubsumptionKey key;
    SelectedClause selected;
  };

  ClausePtr record(std::vector<Literal> literals, std::string rule, std::vector<ClauseId> premises,
                   bool theoryAxiom = false);
  void notify(const Inference& inf);
  /// Simplifies a new clause and files the survivors in passive.
  void admit(ClausePtr c);
  /// Simplifies `c` to a fixpoint against active and passive clauses;
  /// returns the survivors.
  std::vector<ClausePtr> simplify(ClausePtr c, bool consequences);
  bool subsumedByStored(const Clause& c) const;
  void backwardSubsume(const Clause& given);
  void activate(ClausePtr given);
  void addInference(Inference inf);
  bool outOfResources();

  ClausePtr pickGiven();

  const Signature* sig_;
  ProverConfig cfg_;
  Ordering ord_;
  Simplifier simplifier_;
  InferenceObserver observer_;

  std::vector<ClausePtr> clauses_;
  std::map<ClauseId, Entry> passive_;
  std::set<std::pair<std::uint32_t, ClauseId>> byWeight_;
  std::vector<Entry> active_;
  std::uint64_t picks_ = 0;
  ClauseId lastGiven_ = 0;

  SaturationStatus status_ = SaturationStatus::Running;
  ClauseId refutation_ = 0;
  Statistics stats_;
  bool started_ = false;
  std::chrono::steady_clock::time_point deadline_;
  std::uint32_t tick_ = 0;
};

/// One-shot saturation of `input` with the term-algebra axioms of `sig`
/// added according to `cfg.ta`.
SaturationStatus saturate(const std::vector<Clause>& input, const Signature& sig, const ProverConfig& cfg);

enum class DecideResult { Theorem, NonTheorem, ResourceOut };

const char* toString(DecideResult r);

struct DecideReport {
  DecideResult result = DecideResult::ResourceOut;
  Statistics negatedSide;
  Statistics positiveSide;
  /// Proof from the side that refuted, if any.
  std::vector<ClausePtr> proof;
  /// Signature the proof's clauses live in.
  Signature proofSignature;
};

/// Proves `f` or its negation: saturates clausify(¬f) and clausify(f),
/// each with the axioms including acyclicity, alternating one given
/// clause at a time. The time limit covers both.
DecideReport decide(const Formula& f, const Signature& sig, const ProverConfig& cfg);

}  // namespace adt
