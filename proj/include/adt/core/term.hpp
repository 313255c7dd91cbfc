#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "adt/core/signature.hpp"

namespace adt {

/// Immutable first-order term: a sorted variable or an application of a
/// symbol to arguments. Copies share structure; equality is syntactic.
///
/// Predicate atoms are represented as applications of Bool-sorted
/// symbols, so unification and matching treat terms and atoms uniformly.
class Term {
 public:
  /// Null term. Only valid as a placeholder; most accessors require a
  /// non-null term.
  Term() = default;

  static Term variable(VarId id, SortId sort);
  static Term apply(SymbolId head, SortId sort, std::vector<Term> args = {});

  bool isNull() const { return node_ == nullptr; }
  bool isVariable() const { return node_->variable; }
  VarId var() const { return node_->id; }
  SymbolId head() const { return SymbolId{node_->id}; }
  SortId sort() const { return node_->sort; }
  std::span<const Term> args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }
  const Term& arg(std::size_t i) const { return node_->args[i]; }

  bool isGround() const { return node_->maxVar < 0; }
  /// Largest variable id occurring in the term, or -1 if ground.
  std::int64_t maxVar() const { return node_->maxVar; }
  /// Number of symbol and variable occurrences.
  std::uint32_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }
  std::size_t depth() const { return node_->depth; }

  bool contains(VarId v) const;
  bool containsSubterm(const Term& t) const;
  void collectVariables(std::vector<Term>& out) const;

  /// Replace the subterm at `position` (argument indices from the root).
  Term replaceAt(std::span<const std::uint32_t> position, const Term& replacement) const;
  const Term& at(std::span<const std::uint32_t> position) const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  /// Deterministic total order on terms, used only for canonical
  /// ordering of containers (not the simplification ordering).
  static int structuralCompare(const Term& a, const Term& b);

 private:
  struct Node {
    bool variable = false;
    std::uint32_t id = 0;
    SortId sort;
    std::vector<Term> args;
    std::int64_t maxVar = -1;
    std::uint32_t size = 1;
    std::uint32_t depth = 0;
    std::size_t hash = 0;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

std::string toString(const Term& t, const Signature& sig);

/// Builds an application after checking arity and argument sorts.
Term makeApp(const Signature& sig, SymbolId head, std::vector<Term> args);
Term makeApp(const Signature& sig, std::string_view name, std::vector<Term> args = {});

/// True iff every application in `t` matches its symbol's declaration.
bool isWellSorted(const Term& t, const Signature& sig);

/// Visits every subterm occurrence (pre-order) with its position.
void forEachSubterm(const Term& t,
                    const std::function<void(const Term&, const std::vector<std::uint32_t>&)>& visit);

}  // namespace adt
