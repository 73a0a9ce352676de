#include "rif/generate.hpp"

#include <limits>
#include <string>

namespace rif {

namespace {

std::vector<std::string> default_elements(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

Partition partition_from_labels(const UniversePtr& universe,
                                const std::vector<std::size_t>& labels) {
  std::size_t blocks = 0;
  for (std::size_t l : labels) blocks = std::max(blocks, l + 1);
  std::vector<std::vector<std::string>> ids(blocks);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ids[labels[i]].push_back(universe->element(i));
  }
  return Partition(universe, std::move(ids));
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

}  // namespace

std::uint64_t bell_number(std::size_t n) {
  // Bell triangle; n is tiny here (generator caps at 8).
  std::vector<std::uint64_t> row = {1};
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next = {row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.back();
}

std::vector<Partition> enumerate_partitions(const UniversePtr& universe) {
  const std::size_t n = universe->size();
  std::vector<Partition> out;

  // Restricted growth strings: labels[0] = 0 and each label is at most
  // 1 + max of the labels before it. These biject with set partitions.
  std::vector<std::size_t> labels(n, 0);
  while (true) {
    out.push_back(partition_from_labels(universe, labels));

    std::size_t i = n;
    while (i-- > 1) {
      std::size_t cap = 0;
      for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, labels[j]);
      if (labels[i] <= cap) {
        ++labels[i];
        for (std::size_t j = i + 1; j < n; ++j) labels[j] = 0;
        break;
      }
      if (i == 1) return out;
    }
    if (n == 1) return out;
  }
}

std::vector<Degree> degree_grid(Degree step) {
  if (step.ticks() <= 0 || Degree::kScale % step.ticks() != 0) {
    throw ValidationError("grid step " + step.str() +
                          " must divide 1 exactly");
  }
  std::vector<Degree> out;
  for (std::int32_t t = 0; t <= Degree::kScale; t += step.ticks()) {
    out.push_back(Degree::from_ticks(t));
  }
  return out;
}

std::vector<DegreePair> degree_grid_pairs(Degree step) {
  std::vector<DegreePair> out;
  for (Degree mu : degree_grid(step)) {
    for (Degree nu : degree_grid(step)) {
      if (sum_at_most_one(mu, nu)) out.push_back({mu, nu});
    }
  }
  return out;
}

std::vector<CutParams> param_grid(Degree step) {
  std::vector<CutParams> out;
  for (DegreePair d : degree_grid_pairs(step)) out.push_back({d.mu, d.nu});
  return out;
}

std::uint64_t exhaustive_space_size(const InstanceSpec& spec) {
  const std::uint64_t pairs = degree_grid_pairs(spec.step).size();
  const std::uint64_t tuples = sat_pow(
      pairs, spec.universe_size * static_cast<std::uint64_t>(spec.set_count));
  const std::uint64_t params =
      spec.fixed_params ? 1 : param_grid(spec.step).size();
  return sat_mul(bell_number(spec.universe_size), sat_mul(tuples, params));
}

void for_each_exhaustive(const InstanceSpec& spec,
                         const std::function<bool(const Instance&)>& fn) {
  if (spec.universe_size == 0 || spec.universe_size > 4) {
    throw SpaceTooLargeError("exhaustive generation supports universe sizes "
                             "1 through 4");
  }
  if (spec.step < Degree::parse("0.25")) {
    throw SpaceTooLargeError("exhaustive generation needs a grid step of at "
                             "least 0.25");
  }
  if (exhaustive_space_size(spec) > kExhaustiveCap) {
    throw SpaceTooLargeError(
        "exhaustive space holds " +
        std::to_string(exhaustive_space_size(spec)) +
        " instances, beyond the cap of " + std::to_string(kExhaustiveCap));
  }

  UniversePtr universe = make_universe(default_elements(spec.universe_size));
  const std::vector<DegreePair> pairs = degree_grid_pairs(spec.step);
  std::vector<CutParams> params;
  if (spec.fixed_params) {
    params.push_back(*spec.fixed_params);
  } else {
    params = param_grid(spec.step);
  }

  const std::size_t slots =
      spec.universe_size * static_cast<std::size_t>(spec.set_count);
  std::vector<std::size_t> odometer(slots, 0);

  for (const Partition& partition : enumerate_partitions(universe)) {
    std::fill(odometer.begin(), odometer.end(), 0);
    while (true) {
      std::vector<IFSet> sets;
      sets.reserve(spec.set_count);
      for (int s = 0; s < spec.set_count; ++s) {
        std::vector<DegreePair> grades(spec.universe_size);
        for (std::size_t i = 0; i < spec.universe_size; ++i) {
          grades[i] = pairs[odometer[s * spec.universe_size + i]];
        }
        sets.emplace_back(universe, std::move(grades));
      }
      for (const CutParams& p : params) {
        if (!fn(Instance{partition, sets, p})) return;
      }

      std::size_t slot = 0;
      while (slot < slots && ++odometer[slot] == pairs.size()) {
        odometer[slot] = 0;
        ++slot;
      }
      if (slot == slots) break;
    }
  }
}

RandomInstanceGen::RandomInstanceGen(InstanceSpec spec, std::uint64_t seed)
    : spec_(spec),
      rng_(seed),
      pairs_(degree_grid_pairs(spec.step)),
      params_(param_grid(spec.step)) {
  if (spec_.universe_size == 0 || spec_.universe_size > 8) {
    throw SpaceTooLargeError("random generation supports universe sizes 1 "
                             "through 8");
  }
}

Instance RandomInstanceGen::next() {
  std::uniform_int_distribution<std::size_t> size_dist(1, spec_.universe_size);
  const std::size_t n = size_dist(rng_);
  UniversePtr universe = make_universe(default_elements(n));

  std::uniform_int_distribution<std::size_t> label_dist(0, n - 1);
  std::vector<std::size_t> labels(n);
  for (auto& l : labels) l = label_dist(rng_);
  // Normalize to first-appearance order so every label set is a valid
  // block index sequence.
  std::vector<std::size_t> remap(n, n);
  std::size_t next_label = 0;
  for (auto& l : labels) {
    if (remap[l] == n) remap[l] = next_label++;
    l = remap[l];
  }

  std::uniform_int_distribution<std::size_t> pair_dist(0, pairs_.size() - 1);
  std::vector<IFSet> sets;
  sets.reserve(spec_.set_count);
  for (int s = 0; s < spec_.set_count; ++s) {
    std::vector<DegreePair> grades(n);
    for (auto& g : grades) g = pairs_[pair_dist(rng_)];
    sets.emplace_back(universe, std::move(grades));
  }

  std::uniform_int_distribution<int> quarter(0, 3);
  if (spec_.set_count >= 2 && quarter(rng_) == 0) {
    sets[1] = union_if(sets[0], sets[1]);
  }
  if (spec_.set_count >= 4 && quarter(rng_) == 0) {
    sets[2] = sets[0];
    sets[3] = sets[1];
  }

  std::uniform_int_distribution<std::size_t> param_dist(0, params_.size() - 1);
  CutParams p = spec_.fixed_params ? *spec_.fixed_params : params_[param_dist(rng_)];

  return Instance{partition_from_labels(universe, labels), std::move(sets), p};
}

}  // namespace rif
