#pragma once

#include <vector>

#include "rif/ifset.hpp"
#include "rif/universe.hpp"

namespace rif {

enum class Side { Lower, Upper };

// Per-block grades of an approximation: Lower folds (min mu, max nu) over
// each block, Upper folds (max mu, min nu). Every element of a block shares
// its block's value, so the lifted element-wise form is block-constant.
struct BlockApproximation {
  Side side;
  std::vector<DegreePair> values;  // indexed like Partition::block
};

BlockApproximation block_values(const Partition& r, const IFSet& x, Side side);

// Element-wise lift of block_values onto the universe.
IFSet lower_if(const Partition& r, const IFSet& x);
IFSet upper_if(const Partition& r, const IFSet& x);

struct RoughIFPair {
  IFSet lower;
  IFSet upper;
};

RoughIFPair rough_if_pair(const Partition& r, const IFSet& x);

// Classical approximations: lower keeps blocks contained in x, upper keeps
// blocks meeting x, boundary is their difference.
CrispSet lower_crisp(const Partition& r, const CrispSet& x);
CrispSet upper_crisp(const Partition& r, const CrispSet& x);
CrispSet boundary_crisp(const Partition& r, const CrispSet& x);

// Constrained path through the graded machinery (membership folds only).
FuzzySet lower_fuzzy(const Partition& r, const FuzzySet& x);
FuzzySet upper_fuzzy(const Partition& r, const FuzzySet& x);

}  // namespace rif
