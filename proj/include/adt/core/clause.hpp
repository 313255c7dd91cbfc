#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "adt/core/term.hpp"

namespace adt {

/// An equality `lhs ≈ rhs` / disequality, or a predicate atom held in
/// `lhs` (with `rhs` null), with a polarity.
struct Literal {
  bool positive = true;
  bool equality = false;
  Term lhs;
  Term rhs;

  static Literal eq(Term l, Term r, bool positive = true) {
    return Literal{positive, true, std::move(l), std::move(r)};
  }
  static Literal neq(Term l, Term r) { return eq(std::move(l), std::move(r), false); }
  static Literal atom(Term a, bool positive = true) {
    return Literal{positive, false, std::move(a), Term()};
  }

  Literal negated() const { return Literal{!positive, equality, lhs, rhs}; }
  bool isGround() const { return lhs.isGround() && (!equality || rhs.isGround()); }
  std::int64_t maxVar() const { return equality ? std::max(lhs.maxVar(), rhs.maxVar()) : lhs.maxVar(); }
  std::uint32_t weight() const { return lhs.size() + (equality ? rhs.size() : 0); }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.positive == b.positive && a.equality == b.equality && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

/// Equal up to swapping the sides of an equation.
bool sameModuloSymmetry(const Literal& a, const Literal& b);

/// Complementary up to swapping the sides of an equation.
bool complementary(const Literal& a, const Literal& b);

using ClauseId = std::uint64_t;

/// Disjunction of literals with a derivation record. Variables are
/// implicitly universally quantified.
struct Clause {
  std::vector<Literal> literals;
  ClauseId id = 0;
  /// Derivation depth: 0 for input clauses.
  std::uint32_t age = 0;
  std::string rule = "input";
  std::vector<ClauseId> premises;
  /// Theory axioms are exempt from the term-algebra simplification rules.
  bool theoryAxiom = false;

  bool empty() const { return literals.empty(); }
  std::size_t size() const { return literals.size(); }
  std::int64_t maxVar() const;
  std::uint32_t weight() const;
  bool isGround() const { return maxVar() < 0; }
};

using ClausePtr = std::shared_ptr<const Clause>;

/// Renames variables to 0,1,2,... in order of first occurrence.
std::vector<Literal> normalizeVariables(const std::vector<Literal>& literals);

/// Shifts every variable id by `offset`.
Term shiftVariables(const Term& t, VarId offset);
Literal shiftVariables(const Literal& l, VarId offset);
Clause shiftVariables(const Clause& c, VarId offset);

/// Returns variants of the two clauses sharing no variables: the first is
/// normalized, the second is normalized and shifted past the first.
std::pair<Clause, Clause> renameApart(const Clause& c1, const Clause& c2);

std::string toString(const Literal& l, const Signature& sig);
std::string toString(const std::vector<Literal>& literals, const Signature& sig);
std::string toString(const Clause& c, const Signature& sig);

bool isWellSorted(const Literal& l, const Signature& sig);
bool isWellSorted(const Clause& c, const Signature& sig);

}  // namespace adt
