#include "rif/equality.hpp"

namespace rif {

CrispSet cut(const IFSet& x, const CutParams& p) {
  std::vector<bool> members(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    members[i] = x.mu(i) > p.alpha() && x.nu(i) < p.beta();
  }
  return CrispSet(x.universe(), std::move(members));
}

CrispSet alpha_cut(const FuzzySet& x, Degree alpha) {
  std::vector<bool> members(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) members[i] = x.mu(i) > alpha;
  return CrispSet(x.universe(), std::move(members));
}

SideVerdict side_verdict(const IFSet& x, const IFSet& y, const Partition& r,
                         const CutParams& p, Side side) {
  CrispSet left = side == Side::Lower ? cut(lower_if(r, x), p)
                                      : cut(upper_if(r, x), p);
  CrispSet right = side == Side::Lower ? cut(lower_if(r, y), p)
                                       : cut(upper_if(r, y), p);
  bool equal = left == right;
  bool equivalent = side == Side::Lower
                        ? left.is_empty() == right.is_empty()
                        : left.is_universe() == right.is_universe();
  return SideVerdict{equal, equivalent, std::move(left), std::move(right)};
}

EqualityVerdict classify(const IFSet& x, const IFSet& y, const Partition& r,
                         const CutParams& p) {
  return EqualityVerdict{side_verdict(x, y, r, p, Side::Lower),
                         side_verdict(x, y, r, p, Side::Upper)};
}

bool related(const IFSet& x, const IFSet& y, const Partition& r,
             const CutParams& p, Side side) {
  SideVerdict v = side_verdict(x, y, r, p, side);
  return v.equal || v.equivalent;
}

bool included(const IFSet& x, const IFSet& y, const Partition& r,
              const CutParams& p, InclusionMode mode) {
  if (mode == InclusionMode::Full) {
    return included(x, y, r, p, InclusionMode::Bottom) &&
           included(x, y, r, p, InclusionMode::Top);
  }
  if (mode == InclusionMode::Bottom) {
    return subset_of(cut(lower_if(r, x), p), cut(lower_if(r, y), p));
  }
  return subset_of(cut(upper_if(r, x), p), cut(upper_if(r, y), p));
}

bool comparable(const IFSet& x, const IFSet& y, const Partition& r,
                const CutParams& p, InclusionMode mode) {
  if (mode == InclusionMode::Full) {
    return comparable(x, y, r, p, InclusionMode::Bottom) &&
           comparable(x, y, r, p, InclusionMode::Top);
  }
  return included(x, y, r, p, mode) || included(y, x, r, p, mode);
}

LevelVerdict classify_crisp(const CrispSet& x, const CrispSet& y,
                            const Partition& r) {
  CrispSet lx = lower_crisp(r, x);
  CrispSet ly = lower_crisp(r, y);
  CrispSet ux = upper_crisp(r, x);
  CrispSet uy = upper_crisp(r, y);
  return LevelVerdict{lx == ly, lx.is_empty() == ly.is_empty(), ux == uy,
                      ux.is_universe() == uy.is_universe()};
}

LevelVerdict classify_fuzzy(const FuzzySet& x, const FuzzySet& y,
                            const Partition& r, Degree alpha) {
  CrispSet lx = alpha_cut(lower_fuzzy(r, x), alpha);
  CrispSet ly = alpha_cut(lower_fuzzy(r, y), alpha);
  CrispSet ux = alpha_cut(upper_fuzzy(r, x), alpha);
  CrispSet uy = alpha_cut(upper_fuzzy(r, y), alpha);
  return LevelVerdict{lx == ly, lx.is_empty() == ly.is_empty(), ux == uy,
                      ux.is_universe() == uy.is_universe()};
}

}  // namespace rif
