#include "adt/calculus/calculus.hpp"

#include <algorithm>

namespace adt {

namespace {

VarId offsetAfter(const Clause& c) { return static_cast<VarId>(c.maxVar() + 1); }

std::vector<Literal> shifted(const Clause& c, VarId offset) {
  std::vector<Literal> out;
  out.reserve(c.literals.size());
  for (const Literal& l : c.literals) out.push_back(shiftVariables(l, offset));
  return out;
}

void appendExcept(std::vector<Literal>& out, const std::vector<Literal>& lits, std::size_t skip,
                  const Substitution& s) {
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i != skip) out.push_back(s.apply(lits[i]));
  }
}

bool notLessOrEqual(const Ordering& ord, const Term& a, const Term& b) { return !ord.lessOrEqual(a, b); }

// Non-variable subterm positions of `t` whose sort is `sort`.
void candidatePositions(const Term& t, SortId sort, std::vector<std::uint32_t>& path,
                        std::vector<std::vector<std::uint32_t>>& out) {
  if (t.isVariable()) return;
  if (t.sort() == sort) out.push_back(path);
  for (std::uint32_t i = 0; i < t.arity(); ++i) {
    path.push_back(i);
    candidatePositions(t.arg(i), sort, path, out);
    path.pop_back();
  }
}

bool headsMayUnify(const Term& a, const Term& b) {
  return a.isVariable() || b.isVariable() || a.head() == b.head();
}

}  // namespace

SelectedClause withSelection(const Clause& c, const Ordering& ord) {
  return SelectedClause{&c, select(c.literals, ord)};
}

void resolve(const SelectedClause& c1, const SelectedClause& c2, const Ordering&, std::vector<Inference>& out) {
  const Clause& a = *c1.clause;
  const VarId offset = offsetAfter(a);
  std::vector<Literal> b;
  for (std::uint32_t i : c1.selected) {
    const Literal& pos = a.literals[i];
    if (!pos.positive || pos.equality) continue;
    for (std::uint32_t j : c2.selected) {
      const Literal& negRaw = c2.clause->literals[j];
      if (negRaw.positive || negRaw.equality || negRaw.lhs.head() != pos.lhs.head()) continue;
      if (b.empty()) b = shifted(*c2.clause, offset);
      auto theta = mgu(pos.lhs, b[j].lhs);
      if (!theta) continue;
      Inference inf;
      inf.rule = rules::kResolution;
      inf.premises = {a.id, c2.clause->id};
      appendExcept(inf.conclusion, a.literals, i, *theta);
      appendExcept(inf.conclusion, b, j, *theta);
      inf.unifier = std::move(*theta);
      inf.renameOffset = offset;
      out.push_back(std::move(inf));
    }
  }
}

void equalityResolve(const SelectedClause& c, const Ordering&, std::vector<Inference>& out) {
  const Clause& a = *c.clause;
  for (std::uint32_t i : c.selected) {
    const Literal& l = a.literals[i];
    if (l.positive || !l.equality || !headsMayUnify(l.lhs, l.rhs)) continue;
    auto theta = mgu(l.lhs, l.rhs);
    if (!theta) continue;
    Inference inf;
    inf.rule = rules::kEqualityResolution;
    inf.premises = {a.id};
    appendExcept(inf.conclusion, a.literals, i, *theta);
    inf.unifier = std::move(*theta);
    out.push_back(std::move(inf));
  }
}

void superpose(const SelectedClause& from, const SelectedClause& into, const Ordering& ord,
               std::vector<Inference>& out) {
  const Clause& a = *from.clause;
  const VarId offset = offsetAfter(a);
  std::vector<Literal> b;
  std::vector<std::vector<std::uint32_t>> positions;
  std::vector<std::uint32_t> path;

  for (std::uint32_t i : from.selected) {
    const Literal& eq = a.literals[i];
    if (!eq.positive || !eq.equality) continue;
    for (int orient = 0; orient < 2; ++orient) {
      const Term& l = orient == 0 ? eq.lhs : eq.rhs;
      const Term& r = orient == 0 ? eq.rhs : eq.lhs;
      // l ⪯ r is stable under substitution, so no instance can qualify.
      if (ord.lessOrEqual(l, r)) continue;
      for (std::uint32_t j : into.selected) {
        if (b.empty()) b = shifted(*into.clause, offset);
        const Literal& target = b[j];
        const int sides = target.equality ? 2 : 1;
        for (int side = 0; side < sides; ++side) {
          const Term& t = side == 0 ? target.lhs : target.rhs;
          positions.clear();
          candidatePositions(t, l.sort(), path, positions);
          for (const auto& pos : positions) {
            const Term& sub = t.at(pos);
            if (!headsMayUnify(l, sub)) continue;
            auto theta = mgu(l, sub);
            if (!theta) continue;
            Term lInst = theta->apply(l);
            Term rInst = theta->apply(r);
            if (!notLessOrEqual(ord, lInst, rInst)) continue;
            Term rewritten = t.replaceAt(pos, r);
            Literal newLit = target;
            if (target.equality) {
              const Term& other = side == 0 ? target.rhs : target.lhs;
              if (!notLessOrEqual(ord, theta->apply(t), theta->apply(other))) continue;
              if (side == 0) {
                newLit.lhs = rewritten;
              } else {
                newLit.rhs = rewritten;
              }
            } else {
              newLit.lhs = rewritten;
            }
            Inference inf;
            inf.rule = rules::kSuperposition;
            inf.premises = {a.id, into.clause->id};
            appendExcept(inf.conclusion, a.literals, i, *theta);
            inf.conclusion.push_back(theta->apply(newLit));
            appendExcept(inf.conclusion, b, j, *theta);
            inf.rewrittenFrom = std::move(lInst);
            inf.rewrittenTo = std::move(rInst);
            inf.unifier = std::move(*theta);
            inf.renameOffset = offset;
            out.push_back(std::move(inf));
          }
        }
      }
    }
  }
}

void factor(const SelectedClause& c, const Ordering& ord, std::vector<Inference>& out) {
  const Clause& a = *c.clause;
  const auto& lits = a.literals;
  // A ∨ A' ∨ C  ⟹  (A ∨ C)σ, both atoms selected.
  for (std::size_t x = 0; x < c.selected.size(); ++x) {
    const Literal& p = lits[c.selected[x]];
    if (!p.positive || p.equality) continue;
    for (std::size_t y = x + 1; y < c.selected.size(); ++y) {
      const Literal& q = lits[c.selected[y]];
      if (!q.positive || q.equality || p.lhs.head() != q.lhs.head()) continue;
      auto theta = mgu(p.lhs, q.lhs);
      if (!theta) continue;
      Inference inf;
      inf.rule = rules::kFactoring;
      inf.premises = {a.id};
      appendExcept(inf.conclusion, lits, c.selected[y], *theta);
      inf.unifier = std::move(*theta);
      out.push_back(std::move(inf));
    }
  }
  // Equality factoring on a selected s ≈ t against another positive
  // equation s' ≈ t': (t ≉ t' ∨ s' ≈ t' ∨ C)θ with θ = mgu(s, s'),
  // sθ ⋠ tθ and tθ ⋠ t'θ.
  for (std::uint32_t i : c.selected) {
    const Literal& sel = lits[i];
    if (!sel.positive || !sel.equality) continue;
    for (int o1 = 0; o1 < 2; ++o1) {
      const Term& s = o1 == 0 ? sel.lhs : sel.rhs;
      const Term& t = o1 == 0 ? sel.rhs : sel.lhs;
      if (ord.lessOrEqual(s, t)) continue;
      for (std::uint32_t k = 0; k < lits.size(); ++k) {
        const Literal& other = lits[k];
        if (k == i || !other.positive || !other.equality) continue;
        for (int o2 = 0; o2 < 2; ++o2) {
          const Term& s2 = o2 == 0 ? other.lhs : other.rhs;
          const Term& t2 = o2 == 0 ? other.rhs : other.lhs;
          if (s.sort() != s2.sort() || !headsMayUnify(s, s2)) continue;
          auto theta = mgu(s, s2);
          if (!theta) continue;
          if (ord.lessOrEqual(theta->apply(s), theta->apply(t))) continue;
          if (ord.lessOrEqual(theta->apply(t), theta->apply(t2))) continue;
          Inference inf;
          inf.rule = rules::kEqualityFactoring;
          inf.premises = {a.id};
          appendExcept(inf.conclusion, lits, i, *theta);
          inf.conclusion.push_back(theta->apply(Literal::neq(t, t2)));
          inf.unifier = std::move(*theta);
          out.push_back(std::move(inf));
        }
      }
    }
  }
}

std::vector<Inference> resolve(const Clause& c1, const Clause& c2, const Ordering& ord) {
  std::vector<Inference> out;
  resolve(withSelection(c1, ord), withSelection(c2, ord), ord, out);
  return out;
}

std::vector<Inference> equalityResolve(const Clause& c, const Ordering& ord) {
  std::vector<Inference> out;
  equalityResolve(withSelection(c, ord), ord, out);
  return out;
}

std::vector<Inference> superpose(const Clause& from, const Clause& into, const Ordering& ord) {
  std::vector<Inference> out;
  superpose(withSelection(from, ord), withSelection(into, ord), ord, out);
  return out;
}

std::vector<Inference> factor(const Clause& c, const Ordering& ord) {
  std::vector<Inference> out;
  factor(withSelection(c, ord), ord, out);
  return out;
}

void generateBinary(const SelectedClause& given, const SelectedClause& other, const Ordering& ord,
                    std::vector<Inference>& out) {
  const bool self = given.clause == other.clause;
  resolve(given, other, ord, out);
  if (!self) resolve(other, given, ord, out);
  superpose(given, other, ord, out);
  if (!self) superpose(other, given, ord, out);
}

}  // namespace adt
