#include "rif/approx.hpp"

namespace rif {

BlockApproximation block_values(const Partition& r, const IFSet& x,
                                Side side) {
  require_same_universe(r.universe(), x.universe(), "approximation");
  BlockApproximation out{side, {}};
  out.values.reserve(r.block_count());
  for (std::size_t b = 0; b < r.block_count(); ++b) {
    const auto& members = r.block(b);
    DegreePair acc = x.at(members.front());
    for (std::size_t k = 1; k < members.size(); ++k) {
      const DegreePair& g = x.at(members[k]);
      if (side == Side::Lower) {
        acc = {min(acc.mu, g.mu), max(acc.nu, g.nu)};
      } else {
        acc = {max(acc.mu, g.mu), min(acc.nu, g.nu)};
      }
    }
    out.values.push_back(acc);
  }
  return out;
}

namespace {

IFSet lift(const Partition& r, const BlockApproximation& blocks) {
  std::vector<DegreePair> grades(r.universe()->size());
  for (std::size_t i = 0; i < grades.size(); ++i) {
    grades[i] = blocks.values[r.block_index_of(i)];
  }
  return IFSet(r.universe(), std::move(grades));
}

}  // namespace

IFSet lower_if(const Partition& r, const IFSet& x) {
  return lift(r, block_values(r, x, Side::Lower));
}

IFSet upper_if(const Partition& r, const IFSet& x) {
  return lift(r, block_values(r, x, Side::Upper));
}

RoughIFPair rough_if_pair(const Partition& r, const IFSet& x) {
  return {lower_if(r, x), upper_if(r, x)};
}

CrispSet lower_crisp(const Partition& r, const CrispSet& x) {
  require_same_universe(r.universe(), x.universe(), "approximation");
  std::vector<bool> members(x.size(), false);
  for (std::size_t b = 0; b < r.block_count(); ++b) {
    const auto& block = r.block(b);
    bool contained = true;
    for (std::size_t i : block) contained = contained && x.contains(i);
    if (contained) {
      for (std::size_t i : block) members[i] = true;
    }
  }
  return CrispSet(x.universe(), std::move(members));
}

CrispSet upper_crisp(const Partition& r, const CrispSet& x) {
  require_same_universe(r.universe(), x.universe(), "approximation");
  std::vector<bool> members(x.size(), false);
  for (std::size_t b = 0; b < r.block_count(); ++b) {
    const auto& block = r.block(b);
    bool meets = false;
    for (std::size_t i : block) meets = meets || x.contains(i);
    if (meets) {
      for (std::size_t i : block) members[i] = true;
    }
  }
  return CrispSet(x.universe(), std::move(members));
}

CrispSet boundary_crisp(const Partition& r, const CrispSet& x) {
  return set_difference(upper_crisp(r, x), lower_crisp(r, x));
}

FuzzySet lower_fuzzy(const Partition& r, const FuzzySet& x) {
  return to_fuzzy(lower_if(r, embed_fuzzy(x)));
}

FuzzySet upper_fuzzy(const Partition& r, const FuzzySet& x) {
  return to_fuzzy(upper_if(r, embed_fuzzy(x)));
}

}  // namespace rif
