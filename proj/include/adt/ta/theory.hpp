#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adt/calculus/calculus.hpp"

namespace adt {

enum class AcyclicityMode { Off, Axioms, Rules };
enum class TransitivityVariant { TransitiveAxiom, StepwiseAxiom };

struct TAConfig {
  AcyclicityMode acyclicity = AcyclicityMode::Rules;
  bool rulesEnabled = true;
  TransitivityVariant transitivity = TransitivityVariant::StepwiseAxiom;
  /// Emit domain closure, distinctness, injectivity and destructor axioms.
  bool axioms = true;
};

const char* toString(AcyclicityMode m);
std::optional<AcyclicityMode> parseAcyclicityMode(std::string_view s);

namespace rules {
inline constexpr const char* kAxiomClosure = "axiom_domain_closure";
inline constexpr const char* kAxiomDistinctness = "axiom_distinctness";
inline constexpr const char* kAxiomInjectivity = "axiom_injectivity";
inline constexpr const char* kAxiomDestructor = "axiom_destructor";
inline constexpr const char* kAxiomSubterm = "axiom_subterm";
inline constexpr const char* kAxiomSubtermStep = "axiom_subterm_step";
inline constexpr const char* kAxiomSubtermTransitive = "axiom_subterm_transitivity";
inline constexpr const char* kAxiomSubtermIrreflexive = "axiom_subterm_irreflexivity";
inline constexpr const char* kDistinctnessSimplify = "distinctness_simplification";
inline constexpr const char* kInjectivityPositive = "injectivity_simplification";
inline constexpr const char* kInjectivityNegative = "injectivity_negative";
inline constexpr const char* kAcyclicitySimplify = "acyclicity_simplification";
inline constexpr const char* kAcyclicityGenerate = "acyclicity_generation";
}  // namespace rules

/// Term-algebra axioms for every datatype sort of `sig`, as clauses
/// flagged `theoryAxiom`: domain closure in destructor form (one
/// disjunction per sort), distinctness, injectivity, destructor
/// definitions and, with `AcyclicityMode::Axioms`, the subterm axioms for
/// inductive (non-co) datatypes. Throws UserError if a datatype sort has
/// no constructor or no ground term.
std::vector<Clause> generateAxioms(const Signature& sig, const TAConfig& cfg);

/// `s` is reachable from `t` by one or more steps through arguments of
/// constructor applications (of inductive datatype sorts).
bool isConstructorSubterm(const Term& s, const Term& t, const Signature& sig);

/// All constructor subterms of `t` in pre-order, without duplicates.
std::vector<Term> constructorSubterms(const Term& t, const Signature& sig);

/// Dist-S⁺: drops every positive literal f(s̄) ≈ g(t̄) with distinct
/// constructors f, g. Returns nullopt if nothing changed.
std::optional<std::vector<Literal>> distSimplify(const std::vector<Literal>& c, const Signature& sig);

/// Dist-S⁻: clause contains f(s̄) ≉ g(t̄) with distinct constructors.
bool distDelete(const std::vector<Literal>& c, const Signature& sig);

/// Injectivity on a positive f(s̄) ≈ f(t̄), f a constructor of arity n > 0:
/// the n clauses s_i ≈ t_i ∨ C. Applies to the first such literal.
std::optional<std::vector<std::vector<Literal>>> injSimplifyPositive(const std::vector<Literal>& c,
                                                                      const Signature& sig);

struct InjectivityNegativeResult {
  std::vector<Literal> conclusion;
  /// True when the new disequations are smaller than C, so the premise
  /// may be deleted; otherwise the conclusion is only added.
  bool simplifying = false;
};

/// Injectivity on a negative f(s̄) ≉ f(t̄) ∨ C: s_1 ≉ t_1 ∨ … ∨ s_n ≉ t_n ∨ C.
std::optional<InjectivityNegativeResult> injSimplifyNegative(const std::vector<Literal>& c,
                                                             const Ordering& ord);

/// Drops every positive s ≈ t (either orientation) where s is a
/// constructor subterm of t.
std::optional<std::vector<Literal>> acycSimplify(const std::vector<Literal>& c, const Signature& sig);

/// Clause contains s ≉ t (either orientation), s a constructor subterm of t.
bool acycDelete(const std::vector<Literal>& c, const Signature& sig);

/// For each positive t ≈ u ∨ A (both orientations) and each constructor
/// subterm s of t: s ≉ u ∨ A. The premise is kept.
std::vector<Inference> acycGenerate(const Clause& c, const Signature& sig);

}  // namespace adt
