#include "adt/core/signature.hpp"

#include <algorithm>

#include "adt/core/error.hpp"

namespace adt {

Signature::Signature() {
  sorts_.push_back(SortInfo{"Bool", SortKind::Boolean, false, {}, std::nullopt});
  sortByName_.emplace("Bool", kBool);
}

SortId Signature::declareSort(std::string name) {
  if (sortByName_.contains(name)) {
    throw UserError("sort '" + name + "' declared twice");
  }
  SortId id{static_cast<std::uint32_t>(sorts_.size())};
  sortByName_.emplace(name, id);
  sorts_.push_back(SortInfo{std::move(name), SortKind::Plain, false, {}, std::nullopt});
  return id;
}

SortId Signature::declareDatatypeSort(std::string name, bool codatatype) {
  SortId id = declareSort(std::move(name));
  sorts_[id.index].kind = SortKind::Datatype;
  sorts_[id.index].codatatype = codatatype;
  return id;
}

void Signature::checkSortDeclared(SortId id) const {
  if (id.index >= sorts_.size()) {
    throw UserError("undeclared sort #" + std::to_string(id.index));
  }
}

SymbolId Signature::addSymbol(SymbolInfo info) {
  if (symbolByName_.contains(info.name)) {
    throw UserError("symbol '" + info.name + "' declared twice");
  }
  for (SortId s : info.argSorts) {
    checkSortDeclared(s);
    if (s == kBool) {
      throw UserError("symbol '" + info.name + "' takes a Bool argument");
    }
  }
  checkSortDeclared(info.resultSort);
  SymbolId id{static_cast<std::uint32_t>(symbols_.size())};
  info.declIndex = id.index;
  symbolByName_.emplace(info.name, id);
  symbols_.push_back(std::move(info));
  return id;
}

SymbolId Signature::declareFunction(std::string name, std::vector<SortId> argSorts, SortId result) {
  if (result == kBool) {
    return declarePredicate(std::move(name), std::move(argSorts));
  }
  SymbolInfo info;
  info.name = std::move(name);
  info.argSorts = std::move(argSorts);
  info.resultSort = result;
  info.role = SymbolRole::Function;
  return addSymbol(std::move(info));
}

SymbolId Signature::declarePredicate(std::string name, std::vector<SortId> argSorts) {
  SymbolInfo info;
  info.name = std::move(name);
  info.argSorts = std::move(argSorts);
  info.resultSort = kBool;
  info.role = SymbolRole::Predicate;
  return addSymbol(std::move(info));
}

SymbolId Signature::addConstructor(SortId sort, std::string name,
                                   std::vector<ConstructorField> fields) {
  checkSortDeclared(sort);
  if (!isDatatype(sort)) {
    throw UserError("constructor '" + name + "' added to non-datatype sort '" +
                    sorts_[sort.index].name + "'");
  }
  SymbolInfo info;
  info.name = name;
  info.resultSort = sort;
  info.role = SymbolRole::Constructor;
  for (const auto& field : fields) {
    info.argSorts.push_back(field.sort);
  }
  SymbolId ctor = addSymbol(std::move(info));
  sorts_[sort.index].constructors.push_back(ctor);

  std::vector<SymbolId> destructors;
  for (std::uint32_t i = 0; i < fields.size(); ++i) {
    SymbolInfo d;
    d.name = fields[i].destructor.empty() ? name + "$" + std::to_string(i + 1) : fields[i].destructor;
    d.argSorts = {sort};
    d.resultSort = fields[i].sort;
    d.role = SymbolRole::Destructor;
    d.parent = ctor;
    d.parentIndex = i;
    destructors.push_back(addSymbol(std::move(d)));
  }
  symbols_[ctor.index].destructors = std::move(destructors);
  return ctor;
}

std::vector<SortId> Signature::uninhabitedDatatypes() const {
  // Fixpoint: a sort is inhabited once some constructor has all argument
  // sorts inhabited.
  std::vector<bool> inhabited(sorts_.size(), false);
  for (std::size_t i = 0; i < sorts_.size(); ++i) {
    inhabited[i] = sorts_[i].kind == SortKind::Plain;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < sorts_.size(); ++i) {
      if (inhabited[i] || sorts_[i].kind != SortKind::Datatype) continue;
      for (SymbolId c : sorts_[i].constructors) {
        const auto& args = symbols_[c.index].argSorts;
        if (std::all_of(args.begin(), args.end(), [&](SortId s) { return inhabited[s.index]; })) {
          inhabited[i] = true;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<SortId> out;
  for (std::uint32_t i = 0; i < sorts_.size(); ++i) {
    if (sorts_[i].kind == SortKind::Datatype && !inhabited[i]) out.push_back(SortId{i});
  }
  return out;
}

void Signature::finalizeDatatypes() {
  // Codatatypes need a finite witness as well.
  if (auto bad = uninhabitedDatatypes(); !bad.empty()) {
    throw UserError("datatype '" + sorts_[bad.front().index].name + "' has no ground term");
  }
  for (std::size_t i = 0; i < sorts_.size(); ++i) {
    SortId id{static_cast<std::uint32_t>(i)};
    if (isInductive(id) && !sorts_[i].subPredicate) {
      SymbolInfo info;
      info.name = "sub$" + sorts_[i].name;
      info.argSorts = {id, id};
      info.resultSort = kBool;
      info.role = SymbolRole::SubtermPredicate;
      sorts_[i].subPredicate = addSymbol(std::move(info));
    }
  }
}

SymbolId Signature::freshSkolem(std::vector<SortId> argSorts, SortId result) {
  for (;;) {
    std::string name = "sk$" + std::to_string(skolemCounter_++);
    if (symbolByName_.contains(name)) continue;
    SymbolInfo info;
    info.name = std::move(name);
    info.argSorts = std::move(argSorts);
    info.resultSort = result;
    info.role = SymbolRole::Skolem;
    return addSymbol(std::move(info));
  }
}

SymbolId Signature::freshDefinition(std::vector<SortId> argSorts) {
  for (;;) {
    std::string name = "def$" + std::to_string(definitionCounter_++);
    if (symbolByName_.contains(name)) continue;
    SymbolInfo info;
    info.name = std::move(name);
    info.argSorts = std::move(argSorts);
    info.resultSort = kBool;
    info.role = SymbolRole::Skolem;
    return addSymbol(std::move(info));
  }
}

std::optional<SortId> Signature::findSort(std::string_view name) const {
  auto it = sortByName_.find(std::string(name));
  if (it == sortByName_.end()) return std::nullopt;
  return it->second;
}

std::optional<SymbolId> Signature::findSymbol(std::string_view name) const {
  auto it = symbolByName_.find(std::string(name));
  if (it == symbolByName_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t Signature::precedence(SymbolId id) const {
  const SymbolInfo& info = symbol(id);
  std::uint64_t group = 2;
  switch (info.role) {
    case SymbolRole::Constructor:
      group = 0;
      break;
    case SymbolRole::Destructor:
      group = 1;
      break;
    case SymbolRole::Skolem:
      group = 3;
      break;
    default:
      break;
  }
  return (group << 32) | info.declIndex;
}

std::vector<SortId> Signature::datatypeSorts() const {
  std::vector<SortId> out;
  for (std::uint32_t i = 0; i < sorts_.size(); ++i) {
    if (sorts_[i].kind == SortKind::Datatype) out.push_back(SortId{i});
  }
  return out;
}

}  // namespace adt
