#pragma once

#include <cstdint>
#include <vector>

#include "adt/core/substitution.hpp"

namespace adt {

/// Cheap necessary conditions for subsumption: literal count and a bit
/// set over (polarity, predicate) pairs.
struct SubsumptionKey {
  std::uint32_t size = 0;
  std::uint64_t bits = 0;

  static SubsumptionKey of(const std::vector<Literal>& c);
  /// False only if a clause with key `*this` cannot subsume one with `other`.
  bool mayCover(const SubsumptionKey& other) const {
    return size <= other.size && (bits & ~other.bits) == 0;
  }
};

/// `d` subsumes `c`: some θ maps the literals of `d` injectively onto
/// literals of `c` (equations matched up to symmetry).
bool subsumes(const std::vector<Literal>& d, const std::vector<Literal>& c);

/// `c` is redundant with respect to `against` by subsumption.
bool isRedundant(const std::vector<Literal>& c, const std::vector<std::vector<Literal>>& against);

/// Same literals up to variable renaming (mutual subsumption with equal
/// size).
bool isVariant(const std::vector<Literal>& a, const std::vector<Literal>& b);

}  // namespace adt
