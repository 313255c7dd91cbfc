#include "adt/saturation/subsumption.hpp"

#include <algorithm>
#include <numeric>

namespace adt {

namespace {

std::uint64_t literalBit(const Literal& l) {
  std::uint64_t slot = l.equality ? 0 : (l.lhs.head().index % 31) + 1;
  return std::uint64_t{1} << (slot * 2 + (l.positive ? 1 : 0));
}

bool matchLiteral(const Literal& d, const Literal& c, bool swap, Substitution& sigma) {
  if (d.positive != c.positive || d.equality != c.equality) return false;
  if (!d.equality) return matchInto(d.lhs, c.lhs, sigma);
  const Term& cl = swap ? c.rhs : c.lhs;
  const Term& cr = swap ? c.lhs : c.rhs;
  return matchInto(d.lhs, cl, sigma) && matchInto(d.rhs, cr, sigma);
}

bool quickCompatible(const Literal& d, const Literal& c) {
  if (d.positive != c.positive || d.equality != c.equality) return false;
  if (!d.equality) return d.lhs.head() == c.lhs.head();
  return true;
}

class Matcher {
 public:
  Matcher(const std::vector<Literal>& d, const std::vector<Literal>& c) : d_(d), c_(c), used_(c.size(), false) {
    order_.resize(d.size());
    std::iota(order_.begin(), order_.end(), 0);
    // Heavier literals constrain the substitution most.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return d[a].weight() > d[b].weight(); });
  }

  bool run() {
    for (const Literal& l : d_) {
      if (std::none_of(c_.begin(), c_.end(), [&](const Literal& x) { return quickCompatible(l, x); })) {
        return false;
      }
    }
    Substitution sigma;
    return search(0, sigma);
  }

 private:
  bool search(std::size_t k, const Substitution& sigma) {
    if (k == order_.size()) return true;
    const Literal& dl = d_[order_[k]];
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (used_[j] || !quickCompatible(dl, c_[j])) continue;
      const int orientations = dl.equality ? 2 : 1;
      for (int o = 0; o < orientations; ++o) {
        Substitution extended = sigma;
        if (!matchLiteral(dl, c_[j], o == 1, extended)) continue;
        used_[j] = true;
        if (search(k + 1, extended)) return true;
        used_[j] = false;
      }
    }
    return false;
  }

  const std::vector<Literal>& d_;
  const std::vector<Literal>& c_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
};

}  // namespace

SubsumptionKey SubsumptionKey::of(const std::vector<Literal>& c) {
  SubsumptionKey k;
  k.size = static_cast<std::uint32_t>(c.size());
  for (const Literal& l : c) k.bits |= literalBit(l);
  return k;
}

bool subsumes(const std::vector<Literal>& d, const std::vector<Literal>& c) {
  if (d.size() > c.size()) return false;
  if (!SubsumptionKey::of(d).mayCover(SubsumptionKey::of(c))) return false;
  return Matcher(d, c).run();
}

bool isRedundant(const std::vector<Literal>& c, const std::vector<std::vector<Literal>>& against) {
  return std::any_of(against.begin(), against.end(), [&](const auto& d) { return subsumes(d, c); });
}

bool isVariant(const std::vector<Literal>& a, const std::vector<Literal>& b) {
  return a.size() == b.size() && subsumes(a, b) && subsumes(b, a);
}

}  // namespace adt
