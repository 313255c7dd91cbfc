#include "adt/saturation/simplifier.hpp"

#include <algorithm>

namespace adt {

namespace {

SimplificationStep replaceWith(const char* rule, std::vector<Literal> c) {
  SimplificationStep s;
  s.kind = SimplificationStep::Kind::Replace;
  s.rule = rule;
  s.conclusions.push_back(std::move(c));
  return s;
}

SimplificationStep deleted(const char* rule) {
  SimplificationStep s;
  s.kind = SimplificationStep::Kind::Delete;
  s.rule = rule;
  return s;
}

std::optional<std::vector<Literal>> removeDuplicates(const std::vector<Literal>& c) {
  std::vector<Literal> out;
  for (const Literal& l : c) {
    if (std::none_of(out.begin(), out.end(), [&](const Literal& k) { return sameModuloSymmetry(k, l); })) {
      out.push_back(l);
    }
  }
  if (out.size() == c.size()) return std::nullopt;
  return out;
}

bool trivialDisequation(const Literal& l) { return !l.positive && l.equality && l.lhs == l.rhs; }

bool isTautology(const std::vector<Literal>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].positive && c[i].equality && c[i].lhs == c[i].rhs) return true;
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (complementary(c[i], c[j])) return true;
    }
  }
  return false;
}

}  // namespace

SimplificationStep Simplifier::step(const std::vector<Literal>& c, bool theoryAxiom) const {
  const Signature& sig = ord_->signature();
  if (auto r = removeDuplicates(c)) return replaceWith(rules::kDuplicateLiteral, std::move(*r));
  if (std::any_of(c.begin(), c.end(), trivialDisequation)) {
    std::vector<Literal> out;
    std::copy_if(c.begin(), c.end(), std::back_inserter(out), [](const Literal& l) { return !trivialDisequation(l); });
    return replaceWith(rules::kTrivialDisequation, std::move(out));
  }
  if (isTautology(c)) return deleted(rules::kTautology);
  if (taRules(theoryAxiom) && distDelete(c, sig)) return deleted(rules::kDistinctnessDelete);
  if (acycRules(theoryAxiom) && acycDelete(c, sig)) return deleted(rules::kAcyclicityDelete);
  if (taRules(theoryAxiom)) {
    if (auto r = distSimplify(c, sig)) return replaceWith(rules::kDistinctnessSimplify, std::move(*r));
    if (auto r = injSimplifyPositive(c, sig)) {
      SimplificationStep s;
      s.kind = SimplificationStep::Kind::Replace;
      s.rule = rules::kInjectivityPositive;
      s.conclusions = std::move(*r);
      return s;
    }
    if (auto r = injSimplifyNegative(c, *ord_); r && r->simplifying) {
      return replaceWith(rules::kInjectivityNegative, std::move(r->conclusion));
    }
  }
  if (acycRules(theoryAxiom)) {
    if (auto r = acycSimplify(c, sig)) return replaceWith(rules::kAcyclicitySimplify, std::move(*r));
  }
  return {};
}

std::optional<std::vector<Literal>> Simplifier::injectivityConsequence(const std::vector<Literal>& c,
                                                                       bool theoryAxiom) const {
  if (!taRules(theoryAxiom)) return std::nullopt;
  auto r = injSimplifyNegative(c, *ord_);
  if (!r || r->simplifying) return std::nullopt;
  return std::move(r->conclusion);
}

std::optional<std::vector<std::vector<Literal>>> forwardSimplify(
    const std::vector<Literal>& c, const Ordering& ord, const TAConfig& ta,
    const std::vector<std::vector<Literal>>& against) {
  Simplifier simp(ord, ta);
  std::vector<std::vector<Literal>> work{c};
  std::vector<std::vector<Literal>> done;
  while (!work.empty()) {
    std::vector<Literal> x = std::move(work.back());
    work.pop_back();
    SimplificationStep s = simp.step(x, false);
    if (s.kind == SimplificationStep::Kind::Delete) continue;
    if (s.kind == SimplificationStep::Kind::Replace) {
      for (auto& y : s.conclusions) work.push_back(std::move(y));
      continue;
    }
    if (isRedundant(x, against)) continue;
    done.push_back(std::move(x));
  }
  if (done.empty()) return std::nullopt;
  return done;
}

}  // namespace adt
