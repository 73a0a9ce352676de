#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rif/generate.hpp"

namespace rif {

enum class PropertyStatus { Holds, Fails, WitnessFound, NoWitnessInSpace };

std::string to_string(PropertyStatus s);

struct PropertyReport {
  std::string property_id;
  PropertyStatus status = PropertyStatus::Holds;
  std::uint64_t checked = 0;
  std::uint64_t vacuous = 0;  // instances where the hypothesis did not fire
  std::optional<Instance> witness;
  std::string note;
};

// Outcome of one law on one instance. For theorems a violation is
// applicable && !holds. For searchable laws the same combination is the
// witness the search hunts for.
struct PropertyEval {
  bool applicable = true;
  bool holds = true;
  std::string note;
};

struct PropertyDef {
  std::string id;
  int arity = 2;        // sets consumed from an instance, in role order
  bool theorem = true;  // false: witness search target
  bool reading_dependent = false;
  std::string summary;
  std::string witness_means;  // what a found witness demonstrates
  std::function<PropertyEval(const Instance&)> eval;
};

const std::vector<PropertyDef>& property_registry();

// Throws UnknownPropertyError listing the catalog.
const PropertyDef& find_property(const std::string& id);

// Streaming tally of many instances against a fixed list of laws. Laws with
// arity above the instance's set count are skipped for that instance.
class PropertySuite {
 public:
  explicit PropertySuite(std::vector<const PropertyDef*> defs);

  static PropertySuite all_theorems();

  void feed(const Instance& inst);
  std::vector<PropertyReport> reports() const;

 private:
  struct Tally {
    const PropertyDef* def;
    std::uint64_t checked = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t hits = 0;  // theorem violations / search witnesses
    std::optional<Instance> first_hit;
    std::string first_note;
    std::string info_note;  // first note seen on a non-violating instance
  };
  std::vector<Tally> tallies_;
};

// The distributivity/containment laws of approximation under union and
// intersection, evaluated on one instance.
std::vector<PropertyReport> check_algebra(const Partition& r, const IFSet& x,
                                          const IFSet& y, const CutParams& p);

// Every registered theorem whose arity the instance can serve.
std::vector<PropertyReport> check_guaranteed(const Instance& inst);

// The verdict implication diagram on one instance.
PropertyReport check_lattice(const Instance& inst);

struct SearchOptions {
  std::uint64_t budget = 100'000;
  std::uint64_t seed = 1;
};

// Hunts for applicable && !holds. Exhausts the grid space in stable order
// when it fits the budget (needs step >= 0.25 and universe_size <= 4),
// otherwise samples seeded random instances. Deterministic either way.
PropertyReport search_counterexample(const std::string& property_id,
                                     const InstanceSpec& spec,
                                     const SearchOptions& options);

// Re-evaluates a law on a concrete instance; status WitnessFound when the
// instance is a genuine witness, NoWitnessInSpace otherwise.
PropertyReport replay_witness(const std::string& property_id,
                              const Instance& inst);

}  // namespace rif
