#include <string>

#include "adt/core/error.hpp"
#include "adt/frontend/smtlib.hpp"

namespace adt {

namespace {

std::string pad(int n) { return std::string(static_cast<std::size_t>(n), ' '); }

// winning_k(p) := ∃w ((p ≈ s(w) ∨ p ≈ s(s(w))) ∧
//                     ∀l ((w ≈ s(l) ∨ w ≈ s(s(l))) → winning_{k-1}(l)))
// winning_0(p) := ⊥
std::string winning(int k, const std::string& p, int indent) {
  if (k == 0) return "false";
  const std::string w = "w" + std::to_string(k);
  const std::string l = "l" + std::to_string(k - 1);
  const int i = indent;
  std::string s;
  s += "(exists\n";
  s += pad(i + 2) + "((" + w + " Nat))\n";
  s += pad(i + 2) + "(and\n";
  s += pad(i + 4) + "(or\n";
  s += pad(i + 6) + "(= " + p + " (s " + w + "))\n";
  s += pad(i + 6) + "(= " + p + " (s (s " + w + ")))\n";
  s += pad(i + 4) + ")\n";
  s += pad(i + 4) + "(forall\n";
  s += pad(i + 6) + "((" + l + " Nat))\n";
  s += pad(i + 6) + "(=>\n";
  s += pad(i + 8) + "(or\n";
  s += pad(i + 10) + "(= " + w + " (s " + l + "))\n";
  s += pad(i + 10) + "(= " + w + " (s (s " + l + ")))\n";
  s += pad(i + 8) + ")\n";
  s += pad(i + 8) + winning(k - 1, l, i + 8) + "))))";
  return s;
}

}  // namespace

std::string generateGame(int k) {
  if (k < 1) throw UserError("game depth must be at least 1");
  std::string s;
  s += "(declare-datatypes ()\n";
  s += "  ((Nat (z) (s (pred Nat)))))\n\n";
  s += "(assert\n";
  s += "  (not\n";
  s += "    " + winning(k, "(s z)", 4) + "))\n\n";
  s += "(check-sat)\n";
  return s;
}

}  // namespace adt
