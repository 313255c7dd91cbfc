#include "adt/order/ordering.hpp"

#include <algorithm>

namespace adt {

Verdict reverse(Verdict v) {
  switch (v) {
    case Verdict::Less:
      return Verdict::Greater;
    case Verdict::Greater:
      return Verdict::Less;
    default:
      return v;
  }
}

const char* toString(Verdict v) {
  switch (v) {
    case Verdict::Less:
      return "Less";
    case Verdict::Greater:
      return "Greater";
    case Verdict::Equal:
      return "Equal";
    case Verdict::Incomparable:
      return "Incomparable";
  }
  return "?";
}

namespace {

struct Balance {
  // (variable, occurrences in s minus occurrences in t)
  std::vector<std::pair<VarId, int>> vars;
  std::int64_t weight = 0;

  void add(VarId v, int delta) {
    for (auto& [x, n] : vars) {
      if (x == v) {
        n += delta;
        return;
      }
    }
    vars.emplace_back(v, delta);
  }

  bool leftCoversRight() const {
    return std::all_of(vars.begin(), vars.end(), [](const auto& p) { return p.second >= 0; });
  }
  bool rightCoversLeft() const {
    return std::all_of(vars.begin(), vars.end(), [](const auto& p) { return p.second <= 0; });
  }
};

void accumulate(const Term& t, int sign, Balance& b, const Signature& sig) {
  if (t.isVariable()) {
    b.add(t.var(), sign);
    b.weight += sign * static_cast<std::int64_t>(Signature::kVariableWeight);
    return;
  }
  b.weight += sign * static_cast<std::int64_t>(sig.weight(t.head()));
  for (const Term& a : t.args()) accumulate(a, sign, b, sig);
}

Verdict kbo(const Term& s, const Term& t, const Signature& sig) {
  if (s == t) return Verdict::Equal;
  if (s.isVariable() && t.isVariable()) return Verdict::Incomparable;
  Balance b;
  accumulate(s, 1, b, sig);
  accumulate(t, -1, b, sig);
  const bool sCovers = b.leftCoversRight();
  const bool tCovers = b.rightCoversLeft();
  auto orient = [&](bool sBigger) {
    if (sBigger) return sCovers ? Verdict::Greater : Verdict::Incomparable;
    return tCovers ? Verdict::Less : Verdict::Incomparable;
  };
  if (b.weight > 0) return orient(true);
  if (b.weight < 0) return orient(false);
  // Equal weights. A variable can only be below a term containing it, and
  // with all weights positive that term would be strictly heavier.
  if (s.isVariable() || t.isVariable()) return Verdict::Incomparable;
  if (s.head() != t.head()) {
    return orient(sig.precedence(s.head()) > sig.precedence(t.head()));
  }
  for (std::size_t i = 0; i < s.arity(); ++i) {
    Verdict v = kbo(s.arg(i), t.arg(i), sig);
    if (v == Verdict::Equal) continue;
    if (v == Verdict::Incomparable) return v;
    return orient(v == Verdict::Greater);
  }
  return Verdict::Equal;
}

// Null stands for ⊤, the least element.
Verdict compareOrTop(const Term* a, const Term* b, const Signature& sig) {
  if (!a && !b) return Verdict::Equal;
  if (!a) return Verdict::Less;
  if (!b) return Verdict::Greater;
  return kbo(*a, *b, sig);
}

std::vector<const Term*> literalMultiset(const Literal& l) {
  const Term* second = l.equality ? &l.rhs : nullptr;
  if (l.positive) return {&l.lhs, second};
  return {&l.lhs, &l.lhs, second, second};
}

}  // namespace

Verdict Ordering::compare(const Term& s, const Term& t) const { return kbo(s, t, *sig_); }

Verdict Ordering::compareLiterals(const Literal& a, const Literal& b) const {
  if (a == b) return Verdict::Equal;
  return multisetCompare(literalMultiset(a), literalMultiset(b),
                         [this](const Term* x, const Term* y) { return compareOrTop(x, y, *sig_); });
}

Verdict Ordering::compareClauses(std::span<const Literal> a, std::span<const Literal> b) const {
  std::vector<const Literal*> xs, ys;
  for (const Literal& l : a) xs.push_back(&l);
  for (const Literal& l : b) ys.push_back(&l);
  return multisetCompare(std::move(xs), std::move(ys), [this](const Literal* x, const Literal* y) {
    return compareLiterals(*x, *y);
  });
}

std::vector<std::uint32_t> select(std::span<const Literal> clause, const Ordering& ord) {
  std::vector<std::uint32_t> out;
  if (clause.empty()) return out;
  auto dominated = [&](std::uint32_t i, bool negativesOnly) {
    for (std::uint32_t j = 0; j < clause.size(); ++j) {
      if (j == i || (negativesOnly && clause[j].positive)) continue;
      if (ord.compareLiterals(clause[j], clause[i]) == Verdict::Greater) return true;
    }
    return false;
  };
  bool anyNegative = std::any_of(clause.begin(), clause.end(), [](const Literal& l) { return !l.positive; });
  if (anyNegative) {
    for (std::uint32_t i = 0; i < clause.size(); ++i) {
      if (!clause[i].positive && !dominated(i, true)) return {i};
    }
  }
  for (std::uint32_t i = 0; i < clause.size(); ++i) {
    if (!dominated(i, false)) out.push_back(i);
  }
  return out;
}

}  // namespace adt
