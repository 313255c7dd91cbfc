#pragma once

#include <memory>
#include <string>
#include <vector>

#include "adt/core/clause.hpp"

namespace adt {

enum class Connective { Atom, True, False, Not, And, Or, Implies, Iff, Forall, Exists };

/// Immutable first-order formula. Atoms are positive literals (equations
/// or predicate applications); quantifiers bind sorted variables.
class Formula {
 public:
  static Formula atom(Literal positiveAtom);
  static Formula equal(Term l, Term r) { return atom(Literal::eq(std::move(l), std::move(r))); }
  static Formula pred(Term a) { return atom(Literal::atom(std::move(a))); }
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula forall(std::vector<Term> vars, Formula body);
  static Formula exists(std::vector<Term> vars, Formula body);

  Connective kind() const { return node_->kind; }
  const Literal& atomLiteral() const { return node_->atom; }
  const std::vector<Formula>& children() const { return node_->children; }
  const Formula& child(std::size_t i = 0) const { return node_->children[i]; }
  const std::vector<Term>& boundVariables() const { return node_->vars; }

  /// Number of nodes (connectives, quantifiers and atoms).
  std::size_t size() const;
  /// Free variables, in first-occurrence order.
  std::vector<Term> freeVariables() const;
  /// Number of quantifier nodes.
  std::size_t quantifierCount() const;

 private:
  struct Node {
    Connective kind = Connective::True;
    Literal atom;
    std::vector<Formula> children;
    std::vector<Term> vars;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;
};

/// Logical negation, without simplification.
Formula negate(const Formula& f);

/// Equal up to consistent renaming of bound variables.
bool alphaEquivalent(const Formula& a, const Formula& b);

bool isWellSorted(const Formula& f, const Signature& sig);

std::string toString(const Formula& f, const Signature& sig);

/// Largest variable id occurring (free or bound), or -1.
std::int64_t maxVariable(const Formula& f);

}  // namespace adt
