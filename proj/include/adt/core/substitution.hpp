#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adt/core/clause.hpp"

namespace adt {

/// Finite, sort-preserving map from variables to terms. Application is
/// simultaneous: images are not themselves rewritten.
class Substitution {
 public:
  /// Binds `variable` (a variable term) to `value`. Throws
  /// std::logic_error if the sorts differ or the variable is bound.
  void bind(const Term& variable, Term value);

  const Term* lookup(VarId v) const {
    return v < images_.size() && !images_[v].isNull() ? &images_[v] : nullptr;
  }
  bool empty() const { return count_ == 0; }
  std::size_t size() const { return count_; }

  Term apply(const Term& t) const;
  Literal apply(const Literal& l) const;
  std::vector<Literal> apply(const std::vector<Literal>& literals) const;

  std::vector<std::pair<VarId, Term>> bindings() const;

  /// Composition: applying the result equals applying `*this`, then `next`.
  Substitution then(const Substitution& next) const;

  /// For a triangular substitution (images may mention bound variables,
  /// without cycles) returns the equivalent idempotent one.
  Substitution resolved() const;

  friend bool operator==(const Substitution& a, const Substitution& b);

 private:
  std::vector<Term> images_;
  std::size_t count_ = 0;
};

/// Most general unifier of two terms (or two atoms), Robinson-style with
/// occurs check. The result is idempotent.
std::optional<Substitution> mgu(const Term& a, const Term& b);

/// Extends `sigma` (triangular or idempotent) to also unify `a` and `b`.
/// On failure `sigma` is left in an unspecified state.
bool unifyInto(const Term& a, const Term& b, Substitution& sigma);

/// One-sided matching: extends `sigma` so that sigma(pattern) == target,
/// binding only variables of `pattern`. On failure `sigma` is left in an
/// unspecified state.
bool matchInto(const Term& pattern, const Term& target, Substitution& sigma);
std::optional<Substitution> match(const Term& pattern, const Term& target);

/// True if `a` and `b` are equal up to a bijective variable renaming.
bool isVariant(const Term& a, const Term& b);

}  // namespace adt
