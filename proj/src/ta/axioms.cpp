#include <string>

#include "adt/core/error.hpp"
#include "adt/ta/theory.hpp"

namespace adt {

const char* toString(AcyclicityMode m) {
  switch (m) {
    case AcyclicityMode::Off:
      return "off";
    case AcyclicityMode::Axioms:
      return "axioms";
    case AcyclicityMode::Rules:
      return "rules";
  }
  return "?";
}

std::optional<AcyclicityMode> parseAcyclicityMode(std::string_view s) {
  if (s == "off") return AcyclicityMode::Off;
  if (s == "axioms") return AcyclicityMode::Axioms;
  if (s == "rules") return AcyclicityMode::Rules;
  return std::nullopt;
}

namespace {

class AxiomBuilder {
 public:
  explicit AxiomBuilder(const Signature& sig) : sig_(sig) {}

  Term var(VarId id, SortId sort) const { return Term::variable(id, sort); }

  // Fresh variables for the arguments of `ctor`, numbered from `first`.
  std::vector<Term> argVars(SymbolId ctor, VarId first) const {
    std::vector<Term> vars;
    const auto& sorts = sig_.symbol(ctor).argSorts;
    for (std::size_t i = 0; i < sorts.size(); ++i) {
      vars.push_back(var(first + static_cast<VarId>(i), sorts[i]));
    }
    return vars;
  }

  Term app(SymbolId f, std::vector<Term> args) const { return makeApp(sig_, f, std::move(args)); }

  void add(std::vector<Literal> lits, const char* rule) {
    Clause c;
    c.literals = normalizeVariables(lits);
    c.rule = rule;
    c.theoryAxiom = true;
    out.push_back(std::move(c));
  }

  std::vector<Clause> out;

 private:
  const Signature& sig_;
};

}  // namespace

std::vector<Clause> generateAxioms(const Signature& sig, const TAConfig& cfg) {
  if (auto bad = sig.uninhabitedDatatypes(); !bad.empty()) {
    throw UserError("datatype '" + sig.sort(bad.front()).name + "' has no ground term");
  }
  AxiomBuilder b(sig);
  for (SortId sort : sig.datatypeSorts()) {
    const SortInfo& info = sig.sort(sort);
    if (info.constructors.empty()) {
      throw UserError("datatype '" + info.name + "' has no constructors");
    }
    const auto& ctors = info.constructors;

    if (cfg.axioms) {
      // x ≈ f1(p_f1^1(x), …) ∨ … ∨ x ≈ fk(…)
      Term x = b.var(0, sort);
      std::vector<Literal> closure;
      for (SymbolId f : ctors) {
        std::vector<Term> projections;
        for (SymbolId d : sig.symbol(f).destructors) projections.push_back(b.app(d, {x}));
        closure.push_back(Literal::eq(x, b.app(f, std::move(projections))));
      }
      b.add(std::move(closure), rules::kAxiomClosure);

      for (std::size_t i = 0; i < ctors.size(); ++i) {
        for (std::size_t j = i + 1; j < ctors.size(); ++j) {
          auto xs = b.argVars(ctors[i], 0);
          auto ys = b.argVars(ctors[j], static_cast<VarId>(xs.size()));
          b.add({Literal::neq(b.app(ctors[i], xs), b.app(ctors[j], ys))}, rules::kAxiomDistinctness);
        }
      }

      for (SymbolId f : ctors) {
        const std::size_t n = sig.symbol(f).arity();
        for (std::size_t i = 0; i < n; ++i) {
          auto xs = b.argVars(f, 0);
          auto ys = b.argVars(f, static_cast<VarId>(n));
          b.add({Literal::neq(b.app(f, xs), b.app(f, ys)), Literal::eq(xs[i], ys[i])},
                rules::kAxiomInjectivity);
        }
      }

      for (SymbolId f : ctors) {
        const auto& destructors = sig.symbol(f).destructors;
        for (std::size_t i = 0; i < destructors.size(); ++i) {
          auto xs = b.argVars(f, 0);
          b.add({Literal::eq(b.app(destructors[i], {b.app(f, xs)}), xs[i])}, rules::kAxiomDestructor);
        }
      }
    }

    if (cfg.acyclicity != AcyclicityMode::Axioms || !sig.isInductive(sort)) continue;
    if (!info.subPredicate) {
      throw UserError("datatype '" + info.name + "' has no subterm predicate declared");
    }
    const SymbolId sub = *info.subPredicate;
    auto subAtom = [&](Term a, Term c) { return b.app(sub, {std::move(a), std::move(c)}); };

    // B1: Sub(x_i, f(x_1, …, x_n)) for arguments of the same sort.
    for (SymbolId f : ctors) {
      const auto& sorts = sig.symbol(f).argSorts;
      for (std::size_t i = 0; i < sorts.size(); ++i) {
        if (sorts[i] != sort) continue;
        auto xs = b.argVars(f, 0);
        b.add({Literal::atom(subAtom(xs[i], b.app(f, xs)))}, rules::kAxiomSubterm);
      }
    }
    // B3: ¬Sub(x, x)
    {
      Term x = b.var(0, sort);
      b.add({Literal::atom(subAtom(x, x), false)}, rules::kAxiomSubtermIrreflexive);
    }
    if (cfg.transitivity == TransitivityVariant::TransitiveAxiom) {
      // B2: Sub(x, y) ∧ Sub(y, z) → Sub(x, z)
      Term x = b.var(0, sort), y = b.var(1, sort), z = b.var(2, sort);
      b.add({Literal::atom(subAtom(x, y), false), Literal::atom(subAtom(y, z), false),
             Literal::atom(subAtom(x, z))},
            rules::kAxiomSubtermTransitive);
    } else {
      // Sub(x, x_i) → Sub(x, f(x_1, …, x_i, …, x_n))
      for (SymbolId f : ctors) {
        const auto& sorts = sig.symbol(f).argSorts;
        for (std::size_t i = 0; i < sorts.size(); ++i) {
          if (sorts[i] != sort) continue;
          Term x = b.var(0, sort);
          auto xs = b.argVars(f, 1);
          b.add({Literal::atom(subAtom(x, xs[i]), false), Literal::atom(subAtom(x, b.app(f, xs)))},
                rules::kAxiomSubtermStep);
        }
      }
    }
  }
  return std::move(b.out);
}

}  // namespace adt
