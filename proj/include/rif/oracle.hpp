#pragma once

#include <string>
#include <vector>

#include "rif/equality.hpp"
#include "rif/ifset.hpp"
#include "rif/universe.hpp"

// Brute-force re-computation of the approximation and comparison predicates,
// written against the definitions rather than the primary data layout: block
// membership is resolved by scanning id lists, folds walk raw ticks, cuts
// accumulate id vectors. Slow on purpose; exists so the primary path has an
// independent implementation to agree with.
namespace rif::oracle {

IFSet approx(const Partition& r, const IFSet& x, Side side);

std::vector<std::string> cut_ids(const IFSet& x, const CutParams& p);

struct Verdict {
  bool bottom_equal;
  bool bottom_equivalent;
  bool top_equal;
  bool top_equivalent;

  bool rough_equality() const { return bottom_equal && top_equal; }
  bool approximate_rough_equality() const {
    return bottom_equal && top_equivalent;
  }
  bool approximate_rough_equivalence() const {
    return bottom_equivalent && top_equal;
  }
  bool rough_equivalence() const { return bottom_equivalent && top_equivalent; }
};

Verdict classify(const IFSet& x, const IFSet& y, const Partition& r,
                 const CutParams& p);

bool included(const IFSet& x, const IFSet& y, const Partition& r,
              const CutParams& p, InclusionMode mode);
bool comparable(const IFSet& x, const IFSet& y, const Partition& r,
                const CutParams& p, InclusionMode mode);

}  // namespace rif::oracle
