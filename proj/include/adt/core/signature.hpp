#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace adt {

struct SortId {
  std::uint32_t index = 0;
  friend auto operator<=>(const SortId&, const SortId&) = default;
};

struct SymbolId {
  std::uint32_t index = 0;
  friend auto operator<=>(const SymbolId&, const SymbolId&) = default;
};

using VarId = std::uint32_t;

enum class SortKind { Boolean, Datatype, Plain };

enum class SymbolRole {
  Constructor,
  Destructor,
  Function,
  Predicate,
  Skolem,
  SubtermPredicate,
};

struct SortInfo {
  std::string name;
  SortKind kind = SortKind::Plain;
  bool codatatype = false;
  std::vector<SymbolId> constructors;
  std::optional<SymbolId> subPredicate;
};

struct SymbolInfo {
  std::string name;
  std::vector<SortId> argSorts;
  SortId resultSort;
  SymbolRole role = SymbolRole::Function;
  /// For destructors: the constructor they invert and the 0-based argument.
  std::optional<SymbolId> parent;
  std::uint32_t parentIndex = 0;
  /// For constructors: destructor per argument.
  std::vector<SymbolId> destructors;
  std::uint32_t declIndex = 0;
  std::uint32_t weight = 1;

  std::size_t arity() const { return argSorts.size(); }
};

/// One field of a constructor declaration. An empty destructor name asks
/// the signature to invent one.
struct ConstructorField {
  std::string destructor;
  SortId sort;
};

/// Sorts and symbols of a problem. Bool is always sort 0.
///
/// Symbols are only ever appended, so SymbolIds stay valid in copies that
/// are extended independently (as the two halves of `decide` do).
class Signature {
 public:
  static constexpr SortId kBool{0};

  Signature();

  SortId declareSort(std::string name);
  SortId declareDatatypeSort(std::string name, bool codatatype = false);

  SymbolId declareFunction(std::string name, std::vector<SortId> argSorts, SortId result);
  SymbolId declarePredicate(std::string name, std::vector<SortId> argSorts);

  /// Adds a constructor of `sort` and one destructor per field.
  SymbolId addConstructor(SortId sort, std::string name, std::vector<ConstructorField> fields);

  /// Checks that every datatype sort has a ground term and declares the
  /// subterm predicate for each inductive datatype sort that lacks one.
  void finalizeDatatypes();

  /// Datatype sorts without a finite ground term (plain sorts count as
  /// inhabited).
  std::vector<SortId> uninhabitedDatatypes() const;

  SymbolId freshSkolem(std::vector<SortId> argSorts, SortId result);
  SymbolId freshDefinition(std::vector<SortId> argSorts);

  std::optional<SortId> findSort(std::string_view name) const;
  std::optional<SymbolId> findSymbol(std::string_view name) const;

  const SortInfo& sort(SortId id) const { return sorts_.at(id.index); }
  const SymbolInfo& symbol(SymbolId id) const { return symbols_.at(id.index); }
  std::size_t sortCount() const { return sorts_.size(); }
  std::size_t symbolCount() const { return symbols_.size(); }

  bool isConstructor(SymbolId id) const { return symbol(id).role == SymbolRole::Constructor; }
  bool isPredicate(SymbolId id) const { return symbol(id).resultSort == kBool; }
  bool isDatatype(SortId id) const { return sort(id).kind == SortKind::Datatype; }
  /// Datatype sort whose terms are required to be acyclic.
  bool isInductive(SortId id) const { return isDatatype(id) && !sort(id).codatatype; }

  /// Total precedence key: constructors < destructors < other declared
  /// symbols < skolem and definition symbols, then declaration order.
  std::uint64_t precedence(SymbolId id) const;
  std::uint32_t weight(SymbolId id) const { return symbol(id).weight; }
  static constexpr std::uint32_t kVariableWeight = 1;

  std::vector<SortId> datatypeSorts() const;

 private:
  SymbolId addSymbol(SymbolInfo info);
  void checkSortDeclared(SortId id) const;

  std::vector<SortInfo> sorts_;
  std::vector<SymbolInfo> symbols_;
  std::unordered_map<std::string, SortId> sortByName_;
  std::unordered_map<std::string, SymbolId> symbolByName_;
  std::uint32_t skolemCounter_ = 0;
  std::uint32_t definitionCounter_ = 0;
};

}  // namespace adt
