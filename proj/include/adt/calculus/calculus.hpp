#pragma once

#include <string>
#include <vector>

#include "adt/core/substitution.hpp"
#include "adt/order/ordering.hpp"

namespace adt {

/// One inference step. `conclusion` is the raw instantiated literal list
/// (not variable-normalized).
///
/// For binary rules the second premise's variables were shifted by
/// `renameOffset` before unification, so the instantiated premises are
/// `unifier(P1)` and `unifier(shift(P2, renameOffset))`.
struct Inference {
  std::string rule;
  std::vector<ClauseId> premises;
  std::vector<Literal> conclusion;
  Substitution unifier;
  VarId renameOffset = 0;
  /// Superposition only: the instantiated rewritten term and its
  /// replacement, kept so the ordering side condition can be audited.
  Term rewrittenFrom;
  Term rewrittenTo;
};

namespace rules {
inline constexpr const char* kResolution = "resolution";
inline constexpr const char* kEqualityResolution = "equality_resolution";
inline constexpr const char* kSuperposition = "superposition";
inline constexpr const char* kFactoring = "factoring";
inline constexpr const char* kEqualityFactoring = "equality_factoring";
}  // namespace rules

/// A clause with its selected literal indices.
struct SelectedClause {
  const Clause* clause = nullptr;
  std::vector<std::uint32_t> selected;
};

SelectedClause withSelection(const Clause& c, const Ordering& ord);

/// Resolution: selected positive non-equality atom of `c1` against a
/// selected negative atom of `c2`.
void resolve(const SelectedClause& c1, const SelectedClause& c2, const Ordering& ord,
             std::vector<Inference>& out);
/// Equality resolution on a selected negative equation.
void equalityResolve(const SelectedClause& c, const Ordering& ord, std::vector<Inference>& out);
/// Superposition of a selected positive equation of `from` into a
/// selected literal of `into`, in all three forms.
void superpose(const SelectedClause& from, const SelectedClause& into, const Ordering& ord,
               std::vector<Inference>& out);
/// Factoring of two selected positive atoms, and equality factoring.
void factor(const SelectedClause& c, const Ordering& ord, std::vector<Inference>& out);

std::vector<Inference> resolve(const Clause& c1, const Clause& c2, const Ordering& ord);
std::vector<Inference> equalityResolve(const Clause& c, const Ordering& ord);
std::vector<Inference> superpose(const Clause& from, const Clause& into, const Ordering& ord);
std::vector<Inference> factor(const Clause& c, const Ordering& ord);

/// Every generating inference between `given` and `other` in both
/// directions; with `other == given` the self-inferences. Unary rules on
/// `given` are not included.
void generateBinary(const SelectedClause& given, const SelectedClause& other, const Ordering& ord,
                    std::vector<Inference>& out);

}  // namespace adt
