#include "rif/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace rif::oracle {

namespace {

// The block holding `id`, found by scanning the id lists front to back.
std::vector<std::string> block_of_id(const Partition& r,
                                     const std::string& id) {
  for (const auto& block : r.blocks_as_ids()) {
    if (std::find(block.begin(), block.end(), id) != block.end()) {
      return block;
    }
  }
  return {};
}

std::int32_t mu_ticks(const IFSet& x, const std::string& id) {
  return x.mu(*x.universe()->index_of(id)).ticks();
}

std::int32_t nu_ticks(const IFSet& x, const std::string& id) {
  return x.nu(*x.universe()->index_of(id)).ticks();
}

}  // namespace

IFSet approx(const Partition& r, const IFSet& x, Side side) {
  require_same_universe(r.universe(), x.universe(), "oracle approximation");
  std::vector<DegreePair> grades;
  grades.reserve(x.size());
  for (const auto& id : x.universe()->elements()) {
    std::vector<std::string> block = block_of_id(r, id);
    std::int32_t mu = mu_ticks(x, block.front());
    std::int32_t nu = nu_ticks(x, block.front());
    for (const auto& other : block) {
      std::int32_t m = mu_ticks(x, other);
      std::int32_t n = nu_ticks(x, other);
      if (side == Side::Lower) {
        if (m < mu) mu = m;
        if (n > nu) nu = n;
      } else {
        if (m > mu) mu = m;
        if (n < nu) nu = n;
      }
    }
    grades.push_back({Degree::from_ticks(mu), Degree::from_ticks(nu)});
  }
  return IFSet(x.universe(), std::move(grades));
}

std::vector<std::string> cut_ids(const IFSet& x, const CutParams& p) {
  std::vector<std::string> out;
  for (const auto& id : x.universe()->elements()) {
    if (mu_ticks(x, id) > p.alpha().ticks() &&
        nu_ticks(x, id) < p.beta().ticks()) {
      out.push_back(id);
    }
  }
  return out;
}

namespace {

struct SideCuts {
  std::vector<std::string> left;
  std::vector<std::string> right;
};

SideCuts side_cuts(const IFSet& x, const IFSet& y, const Partition& r,
                   const CutParams& p, Side side) {
  return {cut_ids(approx(r, x, side), p), cut_ids(approx(r, y, side), p)};
}

bool id_subset(const std::vector<std::string>& a,
               const std::vector<std::string>& b) {
  for (const auto& id : a) {
    if (std::find(b.begin(), b.end(), id) == b.end()) return false;
  }
  return true;
}

}  // namespace

Verdict classify(const IFSet& x, const IFSet& y, const Partition& r,
                 const CutParams& p) {
  SideCuts bottom = side_cuts(x, y, r, p, Side::Lower);
  SideCuts top = side_cuts(x, y, r, p, Side::Upper);
  std::size_t n = x.universe()->size();
  return Verdict{
      bottom.left == bottom.right,
      bottom.left.empty() == bottom.right.empty(),
      top.left == top.right,
      (top.left.size() == n) == (top.right.size() == n),
  };
}

bool included(const IFSet& x, const IFSet& y, const Partition& r,
              const CutParams& p, InclusionMode mode) {
  if (mode == InclusionMode::Full) {
    return oracle::included(x, y, r, p, InclusionMode::Bottom) &&
           oracle::included(x, y, r, p, InclusionMode::Top);
  }
  Side side = mode == InclusionMode::Bottom ? Side::Lower : Side::Upper;
  SideCuts cuts = side_cuts(x, y, r, p, side);
  return id_subset(cuts.left, cuts.right);
}

bool comparable(const IFSet& x, const IFSet& y, const Partition& r,
                const CutParams& p, InclusionMode mode) {
  if (mode == InclusionMode::Full) {
    return oracle::comparable(x, y, r, p, InclusionMode::Bottom) &&
           oracle::comparable(x, y, r, p, InclusionMode::Top);
  }
  return oracle::included(x, y, r, p, mode) ||
         oracle::included(y, x, r, p, mode);
}

}  // namespace rif::oracle
