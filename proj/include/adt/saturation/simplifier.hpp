#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adt/saturation/subsumption.hpp"
#include "adt/ta/theory.hpp"

namespace adt {

namespace rules {
inline constexpr const char* kDuplicateLiteral = "duplicate_literal_removal";
inline constexpr const char* kTrivialDisequation = "trivial_disequation_removal";
inline constexpr const char* kTautology = "tautology";
inline constexpr const char* kDistinctnessDelete = "distinctness_deletion";
inline constexpr const char* kAcyclicityDelete = "acyclicity_deletion";
inline constexpr const char* kSubsumption = "subsumption";
}  // namespace rules

/// One simplification outcome for a clause.
struct SimplificationStep {
  enum class Kind { None, Delete, Replace };
  Kind kind = Kind::None;
  const char* rule = "";
  /// Replace: the clauses that take the premise's place.
  std::vector<std::vector<Literal>> conclusions;
};

/// The forward simplification rules, tried in a fixed order: duplicate
/// literals, trivial disequations, tautologies, distinctness and
/// acyclicity deletion, distinctness simplification, injectivity,
/// acyclicity simplification. Subsumption is left to the caller, which
/// owns the clause sets.
class Simplifier {
 public:
  Simplifier(const Ordering& ord, const TAConfig& ta) : ord_(&ord), ta_(ta) {}

  /// First applicable rule. Theory axioms skip the term-algebra rules.
  SimplificationStep step(const std::vector<Literal>& c, bool theoryAxiom) const;

  /// Non-simplifying instance of negative injectivity, if any: a clause
  /// to add alongside `c`.
  std::optional<std::vector<Literal>> injectivityConsequence(const std::vector<Literal>& c,
                                                             bool theoryAxiom) const;

  const TAConfig& config() const { return ta_; }

 private:
  bool taRules(bool theoryAxiom) const { return ta_.rulesEnabled && !theoryAxiom; }
  bool acycRules(bool theoryAxiom) const {
    return ta_.acyclicity == AcyclicityMode::Rules && !theoryAxiom;
  }

  const Ordering* ord_;
  TAConfig ta_;
};

/// Simplifies `c` to fixpoint and drops results subsumed by `against`.
/// Returns nullopt when `c` is deleted; otherwise the surviving clauses
/// (several after positive injectivity).
std::optional<std::vector<std::vector<Literal>>> forwardSimplify(
    const std::vector<Literal>& c, const Ordering& ord, const TAConfig& ta,
    const std::vector<std::vector<Literal>>& against);

}  // namespace adt
