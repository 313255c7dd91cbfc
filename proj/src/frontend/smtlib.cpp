#include "adt/frontend/smtlib.hpp"

#include <cctype>
#include <optional>

#include "adt/core/error.hpp"
#include "adt/frontend/sexpr.hpp"

namespace adt {

const char* toString(LogicNote n) {
  switch (n) {
    case LogicNote::None:
      return "none";
    case LogicNote::Datatypes:
      return "datatypes";
    case LogicNote::Codatatypes:
      return "codatatypes";
    case LogicNote::Mixed:
      return "mixed";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const SExpr& at, const std::string& message) {
  throw ParseError(message, at.line, at.column);
}

/// A parsed expression: a term of a non-Bool sort or a formula.
struct Value {
  std::optional<Term> term;
  std::optional<Formula> formula;
};

class Parser {
 public:
  Problem run(const std::vector<SExpr>& commands) {
    for (const SExpr& c : commands) {
      if (done_) break;
      try {
        command(c);
      } catch (const ParseError&) {
        throw;
      } catch (const UserError& e) {
        fail(c, e.what());
      }
    }
    return std::move(p_);
  }

 private:
  Signature& sig() { return p_.signature; }

  const std::string& symbolText(const SExpr& e) {
    if (!e.isSymbol()) fail(e, "expected a symbol");
    return e.text;
  }

  SortId sort(const SExpr& e) {
    if (!e.isSymbol()) fail(e, "unsupported sort expression");
    if (auto s = sig().findSort(e.text)) return *s;
    fail(e, "unknown sort '" + e.text + "'");
  }

  void expectArgs(const SExpr& e, std::size_t n) {
    if (e.items.size() != n + 1) {
      fail(e, "'" + e.items[0].text + "' expects " + std::to_string(n) + " argument(s)");
    }
  }

  void command(const SExpr& c) {
    if (!c.isList() || c.items.empty() || !c.items[0].isSymbol()) fail(c, "expected a command");
    const std::string& name = c.items[0].text;
    if (name == "declare-datatypes" || name == "declare-codatatypes") {
      datatypesCommand(c, name == "declare-codatatypes");
    } else if (name == "declare-datatype" || name == "declare-codatatype") {
      expectArgs(c, 2);
      std::vector<std::pair<const SExpr*, const SExpr*>> group{{&c.items[1], &c.items[2]}};
      declareDatatypes(c, group, false, name == "declare-codatatype");
    } else if (name == "declare-sort") {
      if (c.items.size() != 2 && c.items.size() != 3) fail(c, "'declare-sort' expects a name and arity");
      if (c.items.size() == 3 && !c.items[2].isSymbol("0")) fail(c.items[2], "sort parameters are not supported");
      SortId s = sig().declareSort(symbolText(c.items[1]));
      p_.declarations.push_back({Declaration::Kind::Sort, {s}, {}});
    } else if (name == "declare-fun") {
      expectArgs(c, 3);
      if (!c.items[2].isList()) fail(c.items[2], "expected a list of argument sorts");
      std::vector<SortId> args;
      for (const SExpr& s : c.items[2].items) args.push_back(sort(s));
      declareFunction(c.items[1], std::move(args), c.items[3]);
    } else if (name == "declare-const") {
      expectArgs(c, 2);
      declareFunction(c.items[1], {}, c.items[2]);
    } else if (name == "assert") {
      expectArgs(c, 1);
      p_.assertions.push_back(formula(c.items[1]));
    } else if (name == "check-sat") {
      p_.checkSat = true;
    } else if (name == "set-info") {
      if (c.items.size() >= 3 && c.items[1].isSymbol(":status")) {
        const std::string& v = c.items[2].text;
        if (v == "sat") {
          p_.expected = ExpectedStatus::Sat;
        } else if (v == "unsat") {
          p_.expected = ExpectedStatus::Unsat;
        } else {
          p_.expected.reset();
        }
      } else {
        p_.notes.push_back("ignored: " + toString(c));
      }
    } else if (name == "set-logic" || name == "set-option") {
      p_.notes.push_back("ignored: " + toString(c));
    } else if (name == "exit") {
      done_ = true;
    } else {
      fail(c.items[0], "unknown command '" + name + "'");
    }
  }

  void declareFunction(const SExpr& nameExpr, std::vector<SortId> args, const SExpr& resultExpr) {
    SymbolId f = sig().declareFunction(symbolText(nameExpr), std::move(args), sort(resultExpr));
    p_.declarations.push_back({Declaration::Kind::Function, {}, f});
  }

  void datatypesCommand(const SExpr& c, bool co) {
    expectArgs(c, 2);
    const SExpr& first = c.items[1];
    const SExpr& second = c.items[2];
    if (!first.isList() || !second.isList()) fail(c, "malformed datatype declaration");
    std::vector<std::pair<const SExpr*, const SExpr*>> group;
    if (first.items.empty()) {
      // (declare-datatypes () ((Name ctor ...) ...))
      for (const SExpr& d : second.items) {
        if (!d.isList() || d.items.empty()) fail(d, "malformed datatype");
        group.push_back({&d.items[0], &d});
      }
      declareDatatypes(c, group, true, co);
      return;
    }
    // (declare-datatypes ((Name 0) ...) ((ctor ...) ...))
    if (first.items.size() != second.items.size()) fail(c, "datatype names and bodies differ in number");
    for (std::size_t i = 0; i < first.items.size(); ++i) {
      const SExpr& head = first.items[i];
      if (!head.isList() || head.items.size() != 2) fail(head, "expected (name arity)");
      if (!head.items[1].isSymbol("0")) fail(head.items[1], "parametric datatypes are not supported");
      group.push_back({&head.items[0], &second.items[i]});
    }
    declareDatatypes(c, group, false, co);
  }

  /// `group` pairs each sort name with its constructor list; in the
  /// pre-2.6 form the list starts with the name itself.
  void declareDatatypes(const SExpr& c, const std::vector<std::pair<const SExpr*, const SExpr*>>& group,
                        bool skipFirst, bool co) {
    std::vector<SortId> sorts;
    for (const auto& [name, body] : group) sorts.push_back(sig().declareDatatypeSort(symbolText(*name), co));
    for (std::size_t i = 0; i < group.size(); ++i) {
      const SExpr& body = *group[i].second;
      if (!body.isList()) fail(body, "expected a constructor list");
      for (std::size_t j = skipFirst ? 1 : 0; j < body.items.size(); ++j) {
        const SExpr& ctor = body.items[j];
        if (ctor.isSymbol()) {
          sig().addConstructor(sorts[i], ctor.text, {});
          continue;
        }
        if (!ctor.isList() || ctor.items.empty()) fail(ctor, "malformed constructor");
        std::vector<ConstructorField> fields;
        for (std::size_t k = 1; k < ctor.items.size(); ++k) {
          const SExpr& field = ctor.items[k];
          if (!field.isList() || field.items.size() != 2) fail(field, "expected (selector sort)");
          fields.push_back({symbolText(field.items[0]), sort(field.items[1])});
        }
        sig().addConstructor(sorts[i], symbolText(ctor.items[0]), std::move(fields));
      }
      if (sig().sort(sorts[i]).constructors.empty()) fail(body, "datatype without constructors");
    }
    sig().finalizeDatatypes();
    p_.declarations.push_back({co ? Declaration::Kind::Codatatypes : Declaration::Kind::Datatypes, sorts, {}});
    LogicNote note = co ? LogicNote::Codatatypes : LogicNote::Datatypes;
    if (p_.logicNote == LogicNote::None) {
      p_.logicNote = note;
    } else if (p_.logicNote != note) {
      p_.logicNote = LogicNote::Mixed;
    }
    (void)c;
  }

  Formula formula(const SExpr& e) {
    Value v = expr(e);
    if (!v.formula) fail(e, "expected a Bool expression");
    return *v.formula;
  }

  Term term(const SExpr& e) {
    Value v = expr(e);
    if (!v.term) fail(e, "expected a non-Bool term");
    return *v.term;
  }

  static Value ofTerm(Term t) { return Value{std::move(t), std::nullopt}; }
  static Value ofFormula(Formula f) { return Value{std::nullopt, std::move(f)}; }

  Value application(const SExpr& at, SymbolId f, std::vector<Term> args) {
    Term t;
    try {
      t = makeApp(sig(), f, std::move(args));
    } catch (const UserError& err) {
      fail(at, err.what());
    }
    if (sig().isPredicate(f)) return ofFormula(Formula::pred(std::move(t)));
    return ofTerm(std::move(t));
  }

  Value expr(const SExpr& e) {
    if (e.kind == SExpr::Kind::String) fail(e, "unexpected string literal");
    if (e.isSymbol()) {
      if (e.text == "true") return ofFormula(Formula::top());
      if (e.text == "false") return ofFormula(Formula::bottom());
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
        if (it->first == e.text) return ofTerm(it->second);
      }
      auto f = sig().findSymbol(e.text);
      if (!f) fail(e, "unknown symbol '" + e.text + "'");
      return application(e, *f, {});
    }
    if (e.items.empty()) fail(e, "empty expression");
    const SExpr& head = e.items[0];
    if (!head.isSymbol()) fail(head, "expected a function symbol");
    const std::string& op = head.text;
    const std::size_t n = e.items.size() - 1;

    if (op == "not") {
      expectArgs(e, 1);
      return ofFormula(Formula::negation(formula(e.items[1])));
    }
    if (op == "and" || op == "or") {
      std::vector<Formula> fs;
      for (std::size_t i = 1; i <= n; ++i) fs.push_back(formula(e.items[i]));
      return ofFormula(op == "and" ? Formula::conjunction(std::move(fs)) : Formula::disjunction(std::move(fs)));
    }
    if (op == "=>") {
      if (n < 2) fail(e, "'=>' expects at least 2 arguments");
      Formula f = formula(e.items[n]);
      for (std::size_t i = n - 1; i >= 1; --i) f = Formula::implies(formula(e.items[i]), f);
      return ofFormula(f);
    }
    if (op == "xor") {
      expectArgs(e, 2);
      return ofFormula(Formula::negation(Formula::iff(formula(e.items[1]), formula(e.items[2]))));
    }
    if (op == "=" || op == "distinct") {
      if (n < 2) fail(e, "'" + op + "' expects at least 2 arguments");
      std::vector<Value> vs;
      for (std::size_t i = 1; i <= n; ++i) vs.push_back(expr(e.items[i]));
      const bool boolean = vs[0].formula.has_value();
      for (std::size_t i = 1; i < vs.size(); ++i) {
        if (vs[i].formula.has_value() != boolean ||
            (!boolean && vs[i].term->sort() != vs[0].term->sort())) {
          fail(e.items[i + 1], "sort mismatch in '" + op + "'");
        }
      }
      auto same = [&](const Value& a, const Value& b) {
        return boolean ? Formula::iff(*a.formula, *b.formula) : Formula::equal(*a.term, *b.term);
      };
      std::vector<Formula> parts;
      if (op == "=") {
        for (std::size_t i = 0; i + 1 < vs.size(); ++i) parts.push_back(same(vs[i], vs[i + 1]));
      } else {
        for (std::size_t i = 0; i < vs.size(); ++i) {
          for (std::size_t j = i + 1; j < vs.size(); ++j) parts.push_back(Formula::negation(same(vs[i], vs[j])));
        }
      }
      return ofFormula(Formula::conjunction(std::move(parts)));
    }
    if (op == "forall" || op == "exists") {
      expectArgs(e, 2);
      const SExpr& binders = e.items[1];
      if (!binders.isList() || binders.items.empty()) fail(binders, "expected a non-empty variable list");
      std::vector<Term> vars;
      for (const SExpr& b : binders.items) {
        if (!b.isList() || b.items.size() != 2) fail(b, "expected (variable sort)");
        SortId s = sort(b.items[1]);
        if (s == Signature::kBool) fail(b.items[1], "Bool variables are not supported");
        Term v = Term::variable(nextVar_++, s);
        scope_.emplace_back(symbolText(b.items[0]), v);
        vars.push_back(v);
      }
      Formula body = formula(e.items[2]);
      scope_.resize(scope_.size() - vars.size());
      return ofFormula(op == "forall" ? Formula::forall(std::move(vars), std::move(body))
                                      : Formula::exists(std::move(vars), std::move(body)));
    }
    if (op == "!") {
      if (n < 1) fail(e, "empty annotation");
      return expr(e.items[1]);
    }
    if (op == "ite" || op == "let" || op == "match" || op == "_" || op == "as") {
      fail(head, "'" + op + "' is not supported");
    }
    auto f = sig().findSymbol(op);
    if (!f) fail(head, "unknown symbol '" + op + "'");
    std::vector<Term> args;
    for (std::size_t i = 1; i <= n; ++i) args.push_back(term(e.items[i]));
    return application(e, *f, std::move(args));
  }

  Problem p_;
  std::vector<std::pair<std::string, Term>> scope_;
  VarId nextVar_ = 0;
  bool done_ = false;
};

bool isSimpleSymbol(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) continue;
    if (std::string_view("~!@$%^&*_-+=<>.?/").find(c) == std::string_view::npos) return false;
  }
  return true;
}

std::string quoted(const std::string& s) { return isSimpleSymbol(s) ? s : "|" + s + "|"; }

class Printer {
 public:
  explicit Printer(const Problem& p) : p_(p), sig_(p.signature) {}

  std::string run() {
    if (p_.expected) {
      out_ += std::string("(set-info :status ") + (*p_.expected == ExpectedStatus::Sat ? "sat" : "unsat") + ")\n";
    }
    for (const Declaration& d : declarations()) declaration(d);
    for (const Formula& f : p_.assertions) {
      out_ += "(assert " + formula(f) + ")\n";
    }
    if (p_.checkSat) out_ += "(check-sat)\n";
    return std::move(out_);
  }

 private:
  // Declarations of a problem built in code: plain sorts, one datatype
  // block per kind, then functions and predicates.
  std::vector<Declaration> declarations() const {
    if (!p_.declarations.empty()) return p_.declarations;
    std::vector<Declaration> ds;
    Declaration inductive{Declaration::Kind::Datatypes, {}, {}};
    Declaration co{Declaration::Kind::Codatatypes, {}, {}};
    for (std::uint32_t i = 1; i < sig_.sortCount(); ++i) {
      SortId s{i};
      if (!sig_.isDatatype(s)) {
        ds.push_back({Declaration::Kind::Sort, {s}, {}});
      } else {
        (sig_.sort(s).codatatype ? co : inductive).sorts.push_back(s);
      }
    }
    if (!inductive.sorts.empty()) ds.push_back(inductive);
    if (!co.sorts.empty()) ds.push_back(co);
    for (std::uint32_t i = 0; i < sig_.symbolCount(); ++i) {
      SymbolRole r = sig_.symbol(SymbolId{i}).role;
      if (r == SymbolRole::Function || r == SymbolRole::Predicate) {
        ds.push_back({Declaration::Kind::Function, {}, SymbolId{i}});
      }
    }
    return ds;
  }

  void declaration(const Declaration& d) {
    switch (d.kind) {
      case Declaration::Kind::Sort:
        out_ += "(declare-sort " + quoted(sig_.sort(d.sorts[0]).name) + " 0)\n";
        return;
      case Declaration::Kind::Datatypes:
      case Declaration::Kind::Codatatypes: {
        out_ += d.kind == Declaration::Kind::Datatypes ? "(declare-datatypes ()\n  (" : "(declare-codatatypes ()\n  (";
        for (std::size_t i = 0; i < d.sorts.size(); ++i) {
          const SortInfo& info = sig_.sort(d.sorts[i]);
          if (i) out_ += "\n   ";
          out_ += "(" + quoted(info.name);
          for (SymbolId c : info.constructors) {
            const SymbolInfo& ci = sig_.symbol(c);
            out_ += " (" + quoted(ci.name);
            for (std::size_t k = 0; k < ci.arity(); ++k) {
              out_ += " (" + quoted(sig_.symbol(ci.destructors[k]).name) + " " + quoted(sig_.sort(ci.argSorts[k]).name) + ")";
            }
            out_ += ")";
          }
          out_ += ")";
        }
        out_ += "))\n";
        return;
      }
      case Declaration::Kind::Function: {
        const SymbolInfo& f = sig_.symbol(d.symbol);
        out_ += "(declare-fun " + quoted(f.name) + " (";
        for (std::size_t k = 0; k < f.arity(); ++k) {
          if (k) out_ += ' ';
          out_ += quoted(sig_.sort(f.argSorts[k]).name);
        }
        out_ += ") " + quoted(sig_.sort(f.resultSort).name) + ")\n";
        return;
      }
    }
  }

  static std::string variable(const Term& v) { return "?x" + std::to_string(v.var()); }

  std::string term(const Term& t) const {
    if (t.isVariable()) return variable(t);
    std::string name = quoted(sig_.symbol(t.head()).name);
    if (t.arity() == 0) return name;
    std::string s = "(" + name;
    for (const Term& a : t.args()) s += " " + term(a);
    return s + ")";
  }

  std::string formula(const Formula& f) const {
    switch (f.kind()) {
      case Connective::Atom: {
        const Literal& l = f.atomLiteral();
        if (l.equality) return "(= " + term(l.lhs) + " " + term(l.rhs) + ")";
        return term(l.lhs);
      }
      case Connective::True:
        return "true";
      case Connective::False:
        return "false";
      case Connective::Not:
        return "(not " + formula(f.child()) + ")";
      case Connective::And:
      case Connective::Or: {
        std::string s = f.kind() == Connective::And ? "(and" : "(or";
        for (const Formula& c : f.children()) s += " " + formula(c);
        return s + ")";
      }
      case Connective::Implies:
        return "(=> " + formula(f.child(0)) + " " + formula(f.child(1)) + ")";
      case Connective::Iff:
        return "(= " + formula(f.child(0)) + " " + formula(f.child(1)) + ")";
      case Connective::Forall:
      case Connective::Exists: {
        std::string s = f.kind() == Connective::Forall ? "(forall (" : "(exists (";
        bool first = true;
        for (const Term& v : f.boundVariables()) {
          if (!first) s += ' ';
          first = false;
          s += "(" + variable(v) + " " + quoted(sig_.sort(v.sort()).name) + ")";
        }
        return s + ") " + formula(f.child()) + ")";
      }
    }
    return {};
  }

  const Problem& p_;
  const Signature& sig_;
  std::string out_;
};

}  // namespace

Problem parseSmtlib(std::string_view text) { return Parser().run(readSExprs(text)); }

std::string printSmtlib(const Problem& p) { return Printer(p).run(); }

}  // namespace adt
