#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "rif/degree.hpp"
#include "rif/ifset.hpp"
#include "rif/universe.hpp"

namespace rif {

// One generated test instance: an equivalence partition, set_count graded
// sets over its universe, and one threshold pair.
struct Instance {
  Partition partition;
  std::vector<IFSet> sets;
  CutParams params;
};

struct InstanceSpec {
  std::size_t universe_size = 4;  // exact size for exhaustive, max for random
  Degree step = Degree::parse("0.25");
  int set_count = 2;
  std::optional<CutParams> fixed_params;  // restrict the threshold sweep
};

std::uint64_t bell_number(std::size_t n);

// All partitions of the universe, enumerated via restricted growth strings;
// exactly bell_number(size) of them, in a stable order.
std::vector<Partition> enumerate_partitions(const UniversePtr& universe);

// Grid degrees {0, step, 2*step, ..., 1}; step must divide 1 exactly.
std::vector<Degree> degree_grid(Degree step);
// Grid pairs with mu + nu <= 1, mu-major order.
std::vector<DegreePair> degree_grid_pairs(Degree step);
// Grid threshold pairs with alpha + beta <= 1.
std::vector<CutParams> param_grid(Degree step);

// Number of instances exhaustive generation would emit (saturating).
std::uint64_t exhaustive_space_size(const InstanceSpec& spec);

// Cap on what exhaustive generation will attempt.
inline constexpr std::uint64_t kExhaustiveCap = 10'000'000;

// Emits the full product partitions x set tuples x thresholds at exactly
// spec.universe_size, in a stable order. The callback may return false to
// stop early. Throws SpaceTooLargeError beyond kExhaustiveCap, and rejects
// universe_size > 4 or step < 0.25 outright (the space bound formula is
// bell(n) * p^(n*set_count) * |params| with p grid pairs per element).
void for_each_exhaustive(const InstanceSpec& spec,
                         const std::function<bool(const Instance&)>& fn);

// Seeded stream of random instances with |U| drawn uniformly in
// [1, universe_size]. Set tuples are biased so conditional hypotheses fire:
// with probability 1/4 the second set absorbs the first (making it a
// pointwise superset), and with probability 1/4 a four-set tuple copies the
// first pair into the second. Same seed, same stream.
class RandomInstanceGen {
 public:
  RandomInstanceGen(InstanceSpec spec, std::uint64_t seed);

  Instance next();

 private:
  InstanceSpec spec_;
  std::mt19937_64 rng_;
  std::vector<DegreePair> pairs_;
  std::vector<CutParams> params_;
};

}  // namespace rif
