#include "adt/core/substitution.hpp"

#include <stdexcept>
#include <unordered_map>

namespace adt {

void Substitution::bind(const Term& variable, Term value) {
  if (!variable.isVariable()) throw std::logic_error("binding a non-variable");
  if (variable.sort() != value.sort()) throw std::logic_error("sort-changing binding");
  VarId v = variable.var();
  if (v >= images_.size()) images_.resize(v + 1);
  if (!images_[v].isNull()) throw std::logic_error("variable bound twice");
  images_[v] = std::move(value);
  ++count_;
}

Term Substitution::apply(const Term& t) const {
  if (t.isGround() || count_ == 0) return t;
  if (t.isVariable()) {
    const Term* image = lookup(t.var());
    return image ? *image : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a));
    changed = changed || args.back() != a;
  }
  if (!changed) return t;
  return Term::apply(t.head(), t.sort(), std::move(args));
}

Literal Substitution::apply(const Literal& l) const {
  Literal r = l;
  r.lhs = apply(l.lhs);
  if (l.equality) r.rhs = apply(l.rhs);
  return r;
}

std::vector<Literal> Substitution::apply(const std::vector<Literal>& literals) const {
  std::vector<Literal> out;
  out.reserve(literals.size());
  for (const Literal& l : literals) out.push_back(apply(l));
  return out;
}

std::vector<std::pair<VarId, Term>> Substitution::bindings() const {
  std::vector<std::pair<VarId, Term>> out;
  for (VarId v = 0; v < images_.size(); ++v) {
    if (!images_[v].isNull()) out.emplace_back(v, images_[v]);
  }
  return out;
}

Substitution Substitution::then(const Substitution& next) const {
  Substitution out;
  for (const auto& [v, image] : bindings()) {
    out.bind(Term::variable(v, image.sort()), next.apply(image));
  }
  for (const auto& [v, image] : next.bindings()) {
    if (!lookup(v)) out.bind(Term::variable(v, image.sort()), image);
  }
  return out;
}

namespace {

Term applyFully(const Term& t, const Substitution& sigma) {
  if (t.isGround()) return t;
  if (t.isVariable()) {
    const Term* image = sigma.lookup(t.var());
    return image ? applyFully(*image, sigma) : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(applyFully(a, sigma));
    changed = changed || args.back() != a;
  }
  if (!changed) return t;
  return Term::apply(t.head(), t.sort(), std::move(args));
}

const Term& deref(const Term& t, const Substitution& sigma) {
  const Term* cur = &t;
  while (cur->isVariable()) {
    const Term* image = sigma.lookup(cur->var());
    if (!image) break;
    cur = image;
  }
  return *cur;
}

bool occurs(VarId v, const Term& t, const Substitution& sigma) {
  const Term& d = deref(t, sigma);
  if (d.isGround()) return false;
  if (d.isVariable()) return d.var() == v;
  for (const Term& a : d.args()) {
    if (occurs(v, a, sigma)) return true;
  }
  return false;
}

}  // namespace

Substitution Substitution::resolved() const {
  Substitution out;
  for (const auto& [v, image] : bindings()) {
    out.bind(Term::variable(v, image.sort()), applyFully(image, *this));
  }
  return out;
}

bool operator==(const Substitution& a, const Substitution& b) {
  return a.bindings() == b.bindings();
}

bool unifyInto(const Term& a, const Term& b, Substitution& sigma) {
  std::vector<std::pair<Term, Term>> work{{a, b}};
  while (!work.empty()) {
    auto [x0, y0] = std::move(work.back());
    work.pop_back();
    const Term& x = deref(x0, sigma);
    const Term& y = deref(y0, sigma);
    if (x == y) continue;
    if (x.sort() != y.sort()) return false;
    if (x.isVariable() || y.isVariable()) {
      const Term& var = x.isVariable() ? x : y;
      const Term& other = x.isVariable() ? y : x;
      if (occurs(var.var(), other, sigma)) return false;
      sigma.bind(var, other);
      continue;
    }
    if (x.head() != y.head() || x.arity() != y.arity()) return false;
    for (std::size_t i = x.arity(); i-- > 0;) work.emplace_back(x.arg(i), y.arg(i));
  }
  return true;
}

std::optional<Substitution> mgu(const Term& a, const Term& b) {
  if (!a.isVariable() && !b.isVariable() && (a.head() != b.head() || a.sort() != b.sort())) {
    return std::nullopt;
  }
  Substitution sigma;
  if (!unifyInto(a, b, sigma)) return std::nullopt;
  return sigma.resolved();
}

bool matchInto(const Term& pattern, const Term& target, Substitution& sigma) {
  if (pattern.isVariable()) {
    if (pattern.sort() != target.sort()) return false;
    if (const Term* image = sigma.lookup(pattern.var())) return *image == target;
    sigma.bind(pattern, target);
    return true;
  }
  if (target.isVariable() || pattern.head() != target.head() || pattern.arity() != target.arity()) {
    return false;
  }
  if (pattern.isGround()) return pattern == target;
  if (pattern.size() > target.size()) return false;
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!matchInto(pattern.arg(i), target.arg(i), sigma)) return false;
  }
  return true;
}

std::optional<Substitution> match(const Term& pattern, const Term& target) {
  Substitution sigma;
  if (!matchInto(pattern, target, sigma)) return std::nullopt;
  return sigma;
}

namespace {

bool variantRec(const Term& a, const Term& b, std::unordered_map<VarId, VarId>& fwd,
                std::unordered_map<VarId, VarId>& back) {
  if (a.isVariable() || b.isVariable()) {
    if (!a.isVariable() || !b.isVariable() || a.sort() != b.sort()) return false;
    auto [i, ins1] = fwd.emplace(a.var(), b.var());
    auto [j, ins2] = back.emplace(b.var(), a.var());
    return i->second == b.var() && j->second == a.var();
  }
  if (a.head() != b.head() || a.arity() != b.arity()) return false;
  for (std::size_t k = 0; k < a.arity(); ++k) {
    if (!variantRec(a.arg(k), b.arg(k), fwd, back)) return false;
  }
  return true;
}

}  // namespace

bool isVariant(const Term& a, const Term& b) {
  std::unordered_map<VarId, VarId> fwd, back;
  return variantRec(a, b, fwd, back);
}

}  // namespace adt
