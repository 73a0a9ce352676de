#include "rif/universe.hpp"

#include <algorithm>

namespace rif {

Universe::Universe(std::vector<std::string> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw ValidationError("universe must contain at least one element");
  }
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].empty()) {
      throw ValidationError("universe element ids must be non-empty");
    }
    if (!index_.emplace(elements_[i], i).second) {
      throw DuplicateObjectIdError("duplicate universe element '" +
                                   elements_[i] + "'");
    }
  }
}

std::optional<std::size_t> Universe::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

UniversePtr make_universe(std::vector<std::string> elements) {
  return std::make_shared<const Universe>(std::move(elements));
}

void require_same_universe(const UniversePtr& a, const UniversePtr& b,
                           std::string_view what) {
  if (!same_universe(a, b)) {
    throw UniverseMismatchError(std::string(what) +
                                ": operands live on different universes");
  }
}

CrispSet::CrispSet(UniversePtr universe, std::vector<bool> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  if (!universe_ || members_.size() != universe_->size()) {
    throw ValidationError("crisp set membership vector does not match "
                          "universe size");
  }
}

CrispSet CrispSet::empty_set(UniversePtr universe) {
  std::vector<bool> none(universe->size(), false);
  return CrispSet(std::move(universe), std::move(none));
}

CrispSet CrispSet::full_set(UniversePtr universe) {
  std::vector<bool> all(universe->size(), true);
  return CrispSet(std::move(universe), std::move(all));
}

CrispSet CrispSet::from_ids(UniversePtr universe,
                            const std::vector<std::string>& ids) {
  std::vector<bool> members(universe->size(), false);
  for (const auto& id : ids) {
    auto i = universe->index_of(id);
    if (!i) {
      throw ValidationError("element '" + id + "' is not in the universe");
    }
    members[*i] = true;
  }
  return CrispSet(std::move(universe), std::move(members));
}

std::size_t CrispSet::count() const {
  return static_cast<std::size_t>(
      std::count(members_.begin(), members_.end(), true));
}

bool CrispSet::is_empty() const { return count() == 0; }

bool CrispSet::is_universe() const { return count() == members_.size(); }

std::vector<std::string> CrispSet::ids() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(universe_->element(i));
  }
  return out;
}

bool operator==(const CrispSet& a, const CrispSet& b) {
  return same_universe(a.universe_, b.universe_) && a.members_ == b.members_;
}

namespace {

template <typename Fn>
CrispSet combine(const CrispSet& a, const CrispSet& b, std::string_view what,
                 Fn&& fn) {
  require_same_universe(a.universe(), b.universe(), what);
  std::vector<bool> members(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    members[i] = fn(a.contains(i), b.contains(i));
  }
  return CrispSet(a.universe(), std::move(members));
}

}  // namespace

CrispSet set_union(const CrispSet& a, const CrispSet& b) {
  return combine(a, b, "union", [](bool x, bool y) { return x || y; });
}

CrispSet set_intersection(const CrispSet& a, const CrispSet& b) {
  return combine(a, b, "intersection", [](bool x, bool y) { return x && y; });
}

CrispSet set_difference(const CrispSet& a, const CrispSet& b) {
  return combine(a, b, "difference", [](bool x, bool y) { return x && !y; });
}

CrispSet set_complement(const CrispSet& a) {
  std::vector<bool> members(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) members[i] = !a.contains(i);
  return CrispSet(a.universe(), std::move(members));
}

bool subset_of(const CrispSet& a, const CrispSet& b) {
  require_same_universe(a.universe(), b.universe(), "subset");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.contains(i) && !b.contains(i)) return false;
  }
  return true;
}

Partition::Partition(UniversePtr universe,
                     std::vector<std::vector<std::string>> blocks)
    : universe_(std::move(universe)) {
  if (!universe_) throw ValidationError("partition requires a universe");
  const std::size_t n = universe_->size();
  block_of_.assign(n, n);  // n marks "unassigned"

  for (const auto& block : blocks) {
    if (block.empty()) {
      throw ValidationError("partition blocks must be non-empty");
    }
    std::vector<std::size_t> indices;
    indices.reserve(block.size());
    for (const auto& id : block) {
      auto i = universe_->index_of(id);
      if (!i) {
        throw ValidationError("partition names '" + id +
                              "' which is not in the universe");
      }
      if (block_of_[*i] != n) {
        throw ValidationError("partition blocks overlap at '" + id + "'");
      }
      block_of_[*i] = blocks_.size();
      indices.push_back(*i);
    }
    std::sort(indices.begin(), indices.end());
    blocks_.push_back(std::move(indices));
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (block_of_[i] == n) {
      throw ValidationError("partition does not cover '" +
                            universe_->element(i) + "'");
    }
  }
}

Partition Partition::single_block(UniversePtr universe) {
  std::vector<std::vector<std::string>> blocks = {universe->elements()};
  return Partition(std::move(universe), std::move(blocks));
}

std::vector<std::vector<std::string>> Partition::blocks_as_ids() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(blocks_.size());
  for (const auto& block : blocks_) {
    std::vector<std::string> ids;
    ids.reserve(block.size());
    for (std::size_t i : block) ids.push_back(universe_->element(i));
    out.push_back(std::move(ids));
  }
  return out;
}

}  // namespace rif
