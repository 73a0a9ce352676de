#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rif/errors.hpp"

namespace rif {

// Finite, ordered universe of named objects. The element order given at
// construction is the canonical iteration order everywhere (approximations,
// cuts, reports), so output is deterministic.
class Universe {
 public:
  explicit Universe(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> elements);

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

// Throws UniverseMismatchError unless a and b agree.
void require_same_universe(const UniversePtr& a, const UniversePtr& b,
                           std::string_view what);

// Subset of a universe, one membership bit per element.
class CrispSet {
 public:
  CrispSet(UniversePtr universe, std::vector<bool> members);

  static CrispSet empty_set(UniversePtr universe);
  static CrispSet full_set(UniversePtr universe);
  static CrispSet from_ids(UniversePtr universe,
                           const std::vector<std::string>& ids);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t i) const { return members_[i]; }

  std::size_t count() const;
  bool is_empty() const;
  bool is_universe() const;
  std::vector<std::string> ids() const;

  friend bool operator==(const CrispSet& a, const CrispSet& b);

 private:
  UniversePtr universe_;
  std::vector<bool> members_;
};

CrispSet set_union(const CrispSet& a, const CrispSet& b);
CrispSet set_intersection(const CrispSet& a, const CrispSet& b);
CrispSet set_difference(const CrispSet& a, const CrispSet& b);
CrispSet set_complement(const CrispSet& a);
bool subset_of(const CrispSet& a, const CrispSet& b);

// Equivalence classes over a universe: pairwise disjoint blocks covering
// every element. Block order is the order given; members are stored in
// universe order.
class Partition {
 public:
  Partition(UniversePtr universe, std::vector<std::vector<std::string>> blocks);

  static Partition single_block(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::size_t>& block(std::size_t b) const {
    return blocks_[b];
  }
  std::size_t block_index_of(std::size_t element) const {
    return block_of_[element];
  }
  std::vector<std::vector<std::string>> blocks_as_ids() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return same_universe(a.universe_, b.universe_) && a.blocks_ == b.blocks_;
  }

 private:
  UniversePtr universe_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

}  // namespace rif
