#include "adt/clausify/clausify.hpp"

#include <algorithm>

#include "adt/core/error.hpp"
#include "adt/core/substitution.hpp"

namespace adt {

namespace {

// Negation normal form over literals; implications and equivalences are
// gone and negation only occurs inside literals.
struct Nnf {
  enum class Kind { Lit, True, False, And, Or, Forall, Exists } kind = Kind::True;
  Literal lit;
  std::vector<Nnf> children;
  std::vector<Term> vars;
};

Nnf constant(bool value) { return Nnf{value ? Nnf::Kind::True : Nnf::Kind::False, {}, {}, {}}; }

Nnf junction(bool isAnd, std::vector<Nnf> parts) {
  const Nnf::Kind self = isAnd ? Nnf::Kind::And : Nnf::Kind::Or;
  const Nnf::Kind unit = isAnd ? Nnf::Kind::True : Nnf::Kind::False;
  const Nnf::Kind zero = isAnd ? Nnf::Kind::False : Nnf::Kind::True;
  std::vector<Nnf> flat;
  for (Nnf& p : parts) {
    if (p.kind == zero) return constant(!isAnd);
    if (p.kind == unit) continue;
    if (p.kind == self) {
      for (Nnf& c : p.children) flat.push_back(std::move(c));
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return constant(isAnd);
  if (flat.size() == 1) return std::move(flat.front());
  return Nnf{self, {}, std::move(flat), {}};
}

Nnf quantify(bool universal, std::vector<Term> vars, Nnf body) {
  if (body.kind == Nnf::Kind::True || body.kind == Nnf::Kind::False) return body;
  return Nnf{universal ? Nnf::Kind::Forall : Nnf::Kind::Exists, {}, {std::move(body)}, std::move(vars)};
}

class Clausifier {
 public:
  Clausifier(Signature& sig, const ClausifyOptions& options, VarId firstFree, std::size_t inputSize)
      : sig_(sig), nextVar_(firstFree) {
    limit_ = static_cast<std::size_t>(options.namingFactor * static_cast<double>(inputSize));
    limit_ = std::max<std::size_t>(limit_, 1);
  }

  std::vector<Clause> run(const Formula& f) {
    Substitution none;
    Nnf nnf = toNnf(f, true, none);
    Nnf qf = skolemize(nnf);
    auto clauses = cnf(qf);
    for (auto& c : clauses) emit(std::move(c));
    return std::move(out_);
  }

 private:
  // Bound variables are renamed apart while pushing negations inward.
  Nnf toNnf(const Formula& f, bool positive, const Substitution& rename) {
    switch (f.kind()) {
      case Connective::Atom: {
        Literal l = rename.apply(f.atomLiteral());
        l.positive = positive;
        return Nnf{Nnf::Kind::Lit, std::move(l), {}, {}};
      }
      case Connective::True:
        return constant(positive);
      case Connective::False:
        return constant(!positive);
      case Connective::Not:
        return toNnf(f.child(), !positive, rename);
      case Connective::And:
      case Connective::Or: {
        std::vector<Nnf> parts;
        for (const Formula& c : f.children()) parts.push_back(toNnf(c, positive, rename));
        bool isAnd = (f.kind() == Connective::And) == positive;
        return junction(isAnd, std::move(parts));
      }
      case Connective::Implies: {
        // a ⇒ b  ≡  ¬a ∨ b
        std::vector<Nnf> parts;
        parts.push_back(toNnf(f.child(0), !positive, rename));
        parts.push_back(toNnf(f.child(1), positive, rename));
        return junction(!positive, std::move(parts));
      }
      case Connective::Iff: {
        // a ⇔ b  ≡  (¬a ∨ b) ∧ (a ∨ ¬b);  ¬(a ⇔ b)  ≡  (a ∨ b) ∧ (¬a ∨ ¬b)
        std::vector<Nnf> first, second;
        first.push_back(toNnf(f.child(0), !positive, rename));
        first.push_back(toNnf(f.child(1), true, rename));
        second.push_back(toNnf(f.child(0), positive, rename));
        second.push_back(toNnf(f.child(1), false, rename));
        std::vector<Nnf> both;
        both.push_back(junction(false, std::move(first)));
        both.push_back(junction(false, std::move(second)));
        return junction(true, std::move(both));
      }
      case Connective::Forall:
      case Connective::Exists: {
        Substitution inner;
        std::vector<Term> fresh;
        for (const Term& v : f.boundVariables()) {
          fresh.push_back(Term::variable(nextVar_++, v.sort()));
        }
        for (const auto& [v, image] : rename.bindings()) {
          bool shadowed = std::any_of(f.boundVariables().begin(), f.boundVariables().end(),
                                      [&](const Term& b) { return b.var() == v; });
          if (!shadowed) inner.bind(Term::variable(v, image.sort()), image);
        }
        for (std::size_t i = 0; i < fresh.size(); ++i) {
          if (!inner.lookup(f.boundVariables()[i].var())) inner.bind(f.boundVariables()[i], fresh[i]);
        }
        bool universal = (f.kind() == Connective::Forall) == positive;
        return quantify(universal, std::move(fresh), toNnf(f.child(), positive, inner));
      }
    }
    throw std::logic_error("unreachable connective");
  }

  static void freeVarsOf(const Nnf& n, std::vector<Term>& out) {
    if (n.kind == Nnf::Kind::Lit) {
      n.lit.lhs.collectVariables(out);
      if (n.lit.equality) n.lit.rhs.collectVariables(out);
      return;
    }
    std::vector<Term> inner;
    for (const Nnf& c : n.children) freeVarsOf(c, inner);
    for (const Term& v : inner) {
      if (std::find(n.vars.begin(), n.vars.end(), v) != n.vars.end()) continue;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }

  static Nnf substitute(const Nnf& n, const Substitution& s) {
    Nnf r = n;
    if (n.kind == Nnf::Kind::Lit) {
      r.lit = s.apply(n.lit);
      return r;
    }
    for (Nnf& c : r.children) c = substitute(c, s);
    return r;
  }

  // Bound variables are unique, so free variables of a subformula are
  // exactly the enclosing universals it depends on.
  Nnf skolemize(const Nnf& n) {
    switch (n.kind) {
      case Nnf::Kind::Forall:
        return skolemize(n.children.front());
      case Nnf::Kind::Exists: {
        std::vector<Term> deps;
        freeVarsOf(n.children.front(), deps);
        std::erase_if(deps, [&](const Term& v) {
          return std::find(n.vars.begin(), n.vars.end(), v) != n.vars.end();
        });
        std::sort(deps.begin(), deps.end(), [](const Term& a, const Term& b) { return a.var() < b.var(); });
        std::vector<SortId> depSorts;
        for (const Term& d : deps) depSorts.push_back(d.sort());
        Substitution s;
        for (const Term& v : n.vars) {
          SymbolId sk = sig_.freshSkolem(depSorts, v.sort());
          s.bind(v, Term::apply(sk, v.sort(), deps));
        }
        return skolemize(substitute(n.children.front(), s));
      }
      case Nnf::Kind::And:
      case Nnf::Kind::Or: {
        std::vector<Nnf> parts;
        for (const Nnf& c : n.children) parts.push_back(skolemize(c));
        return junction(n.kind == Nnf::Kind::And, std::move(parts));
      }
      default:
        return n;
    }
  }

  using ClauseSet = std::vector<std::vector<Literal>>;

  ClauseSet cnf(const Nnf& n) {
    switch (n.kind) {
      case Nnf::Kind::True:
        return {};
      case Nnf::Kind::False:
        return {{}};
      case Nnf::Kind::Lit:
        return {{n.lit}};
      case Nnf::Kind::And: {
        ClauseSet out;
        for (const Nnf& c : n.children) {
          ClauseSet part = cnf(c);
          for (auto& cl : part) out.push_back(std::move(cl));
        }
        return out;
      }
      case Nnf::Kind::Or: {
        ClauseSet acc{{}};
        for (const Nnf& c : n.children) {
          ClauseSet part = cnf(c);
          if (acc.size() > 1 && part.size() > 1 && acc.size() * part.size() > limit_) {
            if (part.size() >= acc.size()) {
              part = name(std::move(part));
            } else {
              acc = name(std::move(acc));
            }
          }
          ClauseSet next;
          next.reserve(acc.size() * part.size());
          for (const auto& a : acc) {
            for (const auto& b : part) {
              auto merged = a;
              merged.insert(merged.end(), b.begin(), b.end());
              next.push_back(std::move(merged));
            }
          }
          acc = std::move(next);
        }
        return acc;
      }
      default:
        throw std::logic_error("quantifier left after skolemization");
    }
  }

  // Replaces a clause set S by a fresh atom d(x̄), emitting ¬d(x̄) ∨ C for
  // each C in S. Only this direction is needed since d occurs positively.
  ClauseSet name(ClauseSet set) {
    std::vector<Term> vars;
    for (const auto& cl : set) {
      for (const Literal& l : cl) {
        l.lhs.collectVariables(vars);
        if (l.equality) l.rhs.collectVariables(vars);
      }
    }
    std::sort(vars.begin(), vars.end(), [](const Term& a, const Term& b) { return a.var() < b.var(); });
    std::vector<SortId> sorts;
    for (const Term& v : vars) sorts.push_back(v.sort());
    SymbolId def = sig_.freshDefinition(sorts);
    Term atom = Term::apply(def, Signature::kBool, vars);
    for (auto& cl : set) {
      cl.insert(cl.begin(), Literal::atom(atom, false));
      emit(std::move(cl));
    }
    return {{Literal::atom(atom, true)}};
  }

  void emit(std::vector<Literal> literals) {
    std::vector<Literal> dedup;
    for (Literal& l : literals) {
      if (std::none_of(dedup.begin(), dedup.end(), [&](const Literal& d) { return d == l; })) {
        dedup.push_back(std::move(l));
      }
    }
    Clause c;
    c.literals = normalizeVariables(dedup);
    c.rule = "input";
    out_.push_back(std::move(c));
  }

  Signature& sig_;
  VarId nextVar_;
  std::size_t limit_ = 1;
  std::vector<Clause> out_;
};

}  // namespace

std::vector<Clause> clausify(const Formula& f, Signature& sig, const ClausifyOptions& options) {
  if (!isWellSorted(f, sig)) {
    throw UserError("ill-sorted formula: " + toString(f, sig));
  }
  Formula closed = Formula::forall(f.freeVariables(), f);
  auto firstFree = static_cast<VarId>(maxVariable(closed) + 1);
  Clausifier c(sig, options, firstFree, closed.size());
  return c.run(closed);
}

}  // namespace adt
