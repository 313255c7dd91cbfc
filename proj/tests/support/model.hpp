#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "adt/core/clause.hpp"

namespace adt::testing {

using Assignment = std::map<VarId, Term>;

/// A term-algebra model of a signature: datatype sorts are interpreted by
/// their ground constructor terms (exactly), plain sorts by a few opaque
/// elements, and every other symbol by a seeded hash into a finite pool of
/// values. Destructors invert their constructor and are hashed elsewhere;
/// subterm predicates are the true proper-subterm relation.
class Model {
 public:
  Model(const Signature& sig, std::uint64_t seed, std::size_t poolDepth = 3, std::size_t maxPool = 40);

  Term eval(const Term& t, const Assignment& a) const;
  bool holds(const Literal& l, const Assignment& a) const;
  bool holds(std::span<const Literal> clause, const Assignment& a) const;

  /// Candidate values for variables of `sort`.
  const std::vector<Term>& domain(SortId sort) const { return pools_.at(sort.index); }
  Assignment randomAssignment(std::span<const Term> vars, std::mt19937_64& rng) const;

 private:
  const Term& hashed(SortId sort, std::size_t h) const;
  std::size_t mix(std::size_t h, std::size_t v) const;

  const Signature* sig_;
  Signature ext_;
  std::uint64_t seed_;
  std::vector<std::vector<Term>> pools_;
};

/// Variables of a literal list, without duplicates.
std::vector<Term> variablesOf(std::span<const Literal> lits);

}  // namespace adt::testing
