#pragma once

#include <vector>

#include "adt/clausify/formula.hpp"

namespace adt {

struct ClausifyOptions {
  /// Distribution of a disjunction over conjunctions is replaced by naming
  /// once it would produce more than `namingFactor` × (input size) clauses.
  double namingFactor = 10.0;
};

/// Clausal normal form of a formula: universal closure, expansion of
/// `⇒`/`⇔`, negation normal form, outside-in skolemization and CNF by
/// distribution (with definitional naming as a size guard).
///
/// Skolem functions and naming predicates are added to `sig`. The result
/// is equisatisfiable with `f`.
std::vector<Clause> clausify(const Formula& f, Signature& sig, const ClausifyOptions& options = {});

}  // namespace adt
