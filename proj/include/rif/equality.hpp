#pragma once

#include "rif/approx.hpp"
#include "rif/degree.hpp"
#include "rif/ifset.hpp"

namespace rif {

// Strict two-sided cut: keeps x with mu(x) > alpha AND nu(x) < beta.
// Ties at either threshold exclude the element.
CrispSet cut(const IFSet& x, const CutParams& p);

// Strict one-sided cut of a membership-only set: mu(x) > alpha. Equals
// cut(embed_fuzzy(x), (alpha, 1-alpha)).
CrispSet alpha_cut(const FuzzySet& x, Degree alpha);

// One side of the leveled comparison. Bottom compares cuts of the lower
// approximations and asks "empty or non-empty together"; Top compares cuts
// of the upper approximations and asks "whole universe or not together".
// The cut sets ride along so reports can show the evidence.
struct SideVerdict {
  bool equal;
  bool equivalent;
  CrispSet left_cut;
  CrispSet right_cut;
};

SideVerdict side_verdict(const IFSet& x, const IFSet& y, const Partition& r,
                         const CutParams& p, Side side);

// The four leveled kinds are conjunctions of the two sides:
//   equality           = bottom equal      and top equal
//   approx. equality   = bottom equal      and top equivalent
//   approx. equivalence= bottom equivalent and top equal
//   equivalence        = bottom equivalent and top equivalent
// Since equal cuts are trivially empty/full together, equality implies all
// three weaker kinds and each approximate kind implies equivalence.
struct EqualityVerdict {
  SideVerdict bottom;
  SideVerdict top;

  bool rough_equality() const { return bottom.equal && top.equal; }
  bool approximate_rough_equality() const {
    return bottom.equal && top.equivalent;
  }
  bool approximate_rough_equivalence() const {
    return bottom.equivalent && top.equal;
  }
  bool rough_equivalence() const {
    return bottom.equivalent && top.equivalent;
  }
};

EqualityVerdict classify(const IFSet& x, const IFSet& y, const Partition& r,
                         const CutParams& p);

// Disjunctive form of each side's weak comparison: cuts equal, or
// empty/universe status shared. Logically this collapses to the equivalent
// flag (equal cuts share status), but it is kept in the printed form.
bool related(const IFSet& x, const IFSet& y, const Partition& r,
             const CutParams& p, Side side);

enum class InclusionMode { Bottom, Top, Full };

// Bottom: lower cuts nest; Top: upper cuts nest; Full: both.
bool included(const IFSet& x, const IFSet& y, const Partition& r,
              const CutParams& p, InclusionMode mode);

// x included in y or y included in x, per side; Full needs both sides
// comparable (not "fully included either way").
bool comparable(const IFSet& x, const IFSet& y, const Partition& r,
                const CutParams& p, InclusionMode mode);

// Reduction targets. Four flags with the same conjunction structure, driven
// by the classical/membership-only approximations directly, so the graded
// path can be checked against them.
struct LevelVerdict {
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

LevelVerdict classify_crisp(const CrispSet& x, const CrispSet& y,
                            const Partition& r);
LevelVerdict classify_fuzzy(const FuzzySet& x, const FuzzySet& y,
                            const Partition& r, Degree alpha);

}  // namespace rif
