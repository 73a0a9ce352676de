#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "rif/instance_io.hpp"
#include "rif/properties.hpp"

using rif::CutParams;
using rif::Degree;
using rif::IFSet;
using rif::Instance;
using rif::InstanceSpec;
using rif::Partition;
using rif::PropertyReport;
using rif::PropertyStatus;
using rif::PropertySuite;
using rif::SearchOptions;

namespace {

std::string fixture(const std::string& name) {
  return std::string(RIF_FIXTURES_DIR) + "/" + name;
}

CutParams cp(const char* alpha, const char* beta) {
  return CutParams(Degree::parse(alpha), Degree::parse(beta));
}

Instance fixture_instance(const std::string& file, const CutParams& p) {
  auto data = rif::load_instance_file(fixture(file));
  std::vector<IFSet> sets;
  for (const auto& [name, s] : data.sets) sets.push_back(s);
  return Instance{*data.partition, std::move(sets), p};
}

const PropertyReport& report_for(const std::vector<PropertyReport>& reports,
                                 const std::string& id) {
  for (const auto& r : reports) {
    if (r.property_id == id) return r;
  }
  REQUIRE_MESSAGE(false, "missing report for " << id);
  static PropertyReport unreachable;
  return unreachable;
}

}  // namespace

TEST_CASE("registry is well formed") {
  const auto& defs = rif::property_registry();
  CHECK(defs.size() >= 40);

  std::set<std::string> ids;
  for (const auto& def : defs) {
    CAPTURE(def.id);
    CHECK(ids.insert(def.id).second);
    CHECK((def.arity == 1 || def.arity == 2 || def.arity == 4));
    CHECK_FALSE(def.summary.empty());
    CHECK(bool(def.eval));
    if (!def.theorem) CHECK_FALSE(def.witness_means.empty());
  }
  CHECK(ids.count("lattice") == 1);
  CHECK(ids.count("5.3.1") == 1);
  CHECK(ids.count("5.5.6") == 1);

  CHECK(rif::find_property("5.4.9").arity == 1);
  CHECK(rif::find_property("5.4.3.ii-sufficiency").arity == 4);
  CHECK(rif::find_property("5.5.1.ii").reading_dependent);
  CHECK_FALSE(rif::find_property("5.3.2-strict").theorem);

  CHECK_THROWS_AS(rif::find_property("nope"), rif::UnknownPropertyError);
  try {
    rif::find_property("nope");
  } catch (const rif::UnknownPropertyError& e) {
    std::string msg = e.what();
    CHECK(msg.find("nope") != std::string::npos);
    CHECK(msg.find("5.3.1") != std::string::npos);
    CHECK(msg.find("5.5.6") != std::string::npos);
  }
}

TEST_CASE("status names are stable") {
  CHECK(to_string(PropertyStatus::Holds) == "Holds");
  CHECK(to_string(PropertyStatus::Fails) == "Fails");
  CHECK(to_string(PropertyStatus::WitnessFound) == "WitnessFound");
  CHECK(to_string(PropertyStatus::NoWitnessInSpace) == "NoWitnessInSpace");
}

TEST_CASE("algebra laws hold on the worked examples") {
  for (const auto* file : {"ex_5_2_1.json", "ex_5_2_2.json",
                           "ex_5_3_counter.json"}) {
    auto data = rif::load_instance_file(fixture(file));
    CAPTURE(file);
    auto reports = rif::check_algebra(*data.partition, data.set_named("X"),
                                      data.set_named("Y"), cp("0.25", "0.65"));
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) {
      CAPTURE(r.property_id);
      CHECK(r.status == PropertyStatus::Holds);
      CHECK(r.checked == 1);
    }
  }
}

TEST_CASE("strictness is reported even though the law holds") {
  auto data = rif::load_instance_file(fixture("ex_5_3_counter.json"));
  auto reports = rif::check_algebra(*data.partition, data.set_named("X"),
                                    data.set_named("Y"), cp("0.25", "0.65"));
  const auto& r532 = report_for(reports, "5.3.2");
  CHECK(r532.status == PropertyStatus::Holds);
  CHECK(r532.note ==
        "containment proper at alpha=0.25 beta=0.65, gap {x1,x2,x4}");
}

TEST_CASE("guaranteed laws all hold on fixture instances") {
  for (const auto* file : {"ex_5_2_1.json", "ex_5_2_2.json"}) {
    Instance inst = fixture_instance(file, cp("0.1", "0.8"));
    CAPTURE(file);
    auto reports = rif::check_guaranteed(inst);
    CHECK(reports.size() >= 15);
    for (const auto& r : reports) {
      CAPTURE(r.property_id);
      CHECK(r.status == PropertyStatus::Holds);
      CHECK(r.checked > 0);
    }
  }
  Instance inst = fixture_instance("ex_5_2_1.json", cp("0.1", "0.8"));
  CHECK(rif::check_lattice(inst).status == PropertyStatus::Holds);
}

TEST_CASE("vacuous instances are counted, not judged") {
  Instance inst = fixture_instance("ex_5_2_1.json", cp("0.1", "0.8"));
  // X is not a pointwise subset of Y here, so the monotone laws do not fire.
  REQUIRE_FALSE(subset_if(inst.sets[0], inst.sets[1]));

  PropertySuite suite({&rif::find_property("5.4.7")});
  suite.feed(inst);
  auto reports = suite.reports();
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].checked == 1);
  CHECK(reports[0].vacuous == 1);
  CHECK(reports[0].status == PropertyStatus::Holds);
}

TEST_CASE("laws above the instance arity are skipped") {
  Instance inst = fixture_instance("ex_5_3_counter.json", cp("0.25", "0.65"));
  REQUIRE(inst.sets.size() == 2);

  PropertySuite suite({&rif::find_property("5.4.3.ii-sufficiency")});
  suite.feed(inst);
  auto reports = suite.reports();
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].checked == 0);
  CHECK(reports[0].vacuous == 0);
}

TEST_CASE("searches find the documented witnesses") {
  InstanceSpec spec;
  spec.universe_size = 5;
  spec.step = Degree::parse("0.1");
  SearchOptions opts;
  opts.budget = 20'000;
  opts.seed = 1;

  for (const auto* id : {"5.3.2-strict", "5.3.3-strict", "5.4.1.ii-converse",
                         "5.4.5.i", "5.4.6.i", "5.5.2.ii", "5.5.5"}) {
    CAPTURE(id);
    spec.set_count = rif::find_property(id).arity;
    auto report = rif::search_counterexample(id, spec, opts);
    CHECK(report.status == PropertyStatus::WitnessFound);
    REQUIRE(report.witness.has_value());
    CHECK_FALSE(report.note.empty());

    auto replay = rif::replay_witness(id, *report.witness);
    CHECK(replay.status == PropertyStatus::WitnessFound);
  }
}

TEST_CASE("theorem shaped searches exhaust their budget") {
  InstanceSpec spec;
  spec.universe_size = 3;
  spec.step = Degree::parse("0.1");
  SearchOptions opts;
  opts.budget = 3'000;
  opts.seed = 5;

  for (const auto* id : {"5.5.1.ii", "5.5.4.ii"}) {
    CAPTURE(id);
    spec.set_count = rif::find_property(id).arity;
    auto report = rif::search_counterexample(id, spec, opts);
    CHECK(report.status == PropertyStatus::NoWitnessInSpace);
    CHECK(report.checked == opts.budget);
    CHECK_FALSE(report.witness.has_value());
  }
}

TEST_CASE("search is deterministic for a fixed seed") {
  InstanceSpec spec;
  spec.universe_size = 5;
  spec.step = Degree::parse("0.1");
  spec.set_count = 2;
  SearchOptions opts;
  opts.budget = 10'000;
  opts.seed = 77;

  auto a = rif::search_counterexample("5.4.2.ii-converse", spec, opts);
  auto b = rif::search_counterexample("5.4.2.ii-converse", spec, opts);
  CHECK(a.status == b.status);
  CHECK(a.checked == b.checked);
  CHECK(a.vacuous == b.vacuous);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.witness->partition == b.witness->partition);
  CHECK(a.witness->sets == b.witness->sets);
  CHECK(a.witness->params == b.witness->params);

  opts.seed = 78;
  auto c = rif::search_counterexample("5.4.2.ii-converse", spec, opts);
  bool same = a.witness->partition == c.witness->partition &&
              a.witness->sets == c.witness->sets &&
              a.witness->params == c.witness->params;
  CHECK_FALSE(same);
}

TEST_CASE("exhaustive search order is stable and exhaustible") {
  InstanceSpec spec;
  spec.universe_size = 1;
  spec.step = Degree::parse("0.25");
  spec.set_count = 2;
  SearchOptions opts;
  opts.budget = 5'000;
  opts.seed = 1;

  // 15^2 tuples * 15 thresholds on the one-element universe.
  auto report = rif::search_counterexample("5.3.1", spec, opts);
  CHECK(report.status == PropertyStatus::NoWitnessInSpace);
  CHECK(report.checked == 3'375);

  auto again = rif::search_counterexample("5.3.1", spec, opts);
  CHECK(again.checked == report.checked);
}

TEST_CASE("replay rejects undersized instances and honest non-witnesses") {
  Instance inst = fixture_instance("ex_5_2_1.json", cp("0.1", "0.8"));

  auto ok = rif::replay_witness("5.3.1", inst);
  CHECK(ok.status == PropertyStatus::NoWitnessInSpace);
  CHECK(ok.note == "instance satisfies the law");

  CHECK_THROWS_AS(rif::replay_witness("5.4.3.ii-sufficiency",
                                      Instance{inst.partition,
                                               {inst.sets[0], inst.sets[1]},
                                               inst.params}),
                  rif::ValidationError);

  // Upper cuts differ and only one is the whole universe, so upper
  // relatedness fails and the conditional never fires.
  auto u = rif::make_universe({"a", "b"});
  Instance tiny{Partition(u, {{"a"}, {"b"}}),
                {IFSet::constant(u, {Degree::parse("1"), Degree::parse("0")}),
                 IFSet::constant(u, {Degree::parse("0"), Degree::parse("1")})},
                cp("0", "0.9999")};
  auto miss = rif::replay_witness("5.4.5.i", tiny);
  CHECK(miss.status == PropertyStatus::NoWitnessInSpace);
  CHECK(miss.note == "hypothesis does not fire on the instance");
}
