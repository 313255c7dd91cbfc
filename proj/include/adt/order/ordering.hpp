#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adt/core/clause.hpp"

namespace adt {

enum class Verdict { Less, Greater, Equal, Incomparable };

Verdict reverse(Verdict v);
const char* toString(Verdict v);

/// Knuth-Bendix ordering over a signature's weights and precedence,
/// extended to literals and clauses by multisets.
///
/// Literals compare as multisets: `s ≈ t` as {s, t}, `s ≉ t` as
/// {s, s, t, t}; a predicate atom A stands for `A ≈ ⊤` with ⊤ below
/// every term.
class Ordering {
 public:
  explicit Ordering(const Signature& sig) : sig_(&sig) {}

  const Signature& signature() const { return *sig_; }

  Verdict compare(const Term& s, const Term& t) const;
  bool greater(const Term& s, const Term& t) const { return compare(s, t) == Verdict::Greater; }
  /// `s ⪯ t`: less or equal.
  bool lessOrEqual(const Term& s, const Term& t) const {
    Verdict v = compare(s, t);
    return v == Verdict::Less || v == Verdict::Equal;
  }

  Verdict compareLiterals(const Literal& a, const Literal& b) const;
  Verdict compareClauses(std::span<const Literal> a, std::span<const Literal> b) const;

 private:
  const Signature* sig_;
};

/// Dershowitz-Manna extension of a partial order to finite multisets.
/// `cmp(x, y)` compares elements; identical elements must yield Equal.
template <typename T, typename Cmp>
Verdict multisetCompare(std::vector<T> a, std::vector<T> b, Cmp cmp) {
  // Cancel common elements.
  std::vector<bool> usedB(b.size(), false);
  std::vector<T> restA;
  for (auto& x : a) {
    bool cancelled = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!usedB[j] && cmp(x, b[j]) == Verdict::Equal) {
        usedB[j] = true;
        cancelled = true;
        break;
      }
    }
    if (!cancelled) restA.push_back(std::move(x));
  }
  std::vector<T> restB;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!usedB[j]) restB.push_back(std::move(b[j]));
  }
  if (restA.empty() && restB.empty()) return Verdict::Equal;
  auto dominates = [&](const std::vector<T>& big, const std::vector<T>& small) {
    if (big.empty()) return false;
    for (const auto& y : small) {
      bool covered = false;
      for (const auto& x : big) {
        if (cmp(x, y) == Verdict::Greater) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  };
  if (dominates(restA, restB)) return Verdict::Greater;
  if (dominates(restB, restA)) return Verdict::Less;
  return Verdict::Incomparable;
}

/// Indices of the selected literals of a non-empty clause: the maximal
/// negative literal (earliest on ties) if any, else all maximal literals.
std::vector<std::uint32_t> select(std::span<const Literal> clause, const Ordering& ord);

}  // namespace adt
