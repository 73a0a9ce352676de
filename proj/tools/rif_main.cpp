#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rif/approx.hpp"
#include "rif/equality.hpp"
#include "rif/errors.hpp"
#include "rif/generate.hpp"
#include "rif/ifset.hpp"
#include "rif/instance_io.hpp"
#include "rif/properties.hpp"
#include "rif/universe.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kDefaultAlpha = "0";
constexpr const char* kDefaultBeta = "0.9999";

std::string brace_list(const std::vector<std::string>& ids) {
  std::string out = "{";
  bool first = true;
  for (const auto& id : ids) {
    if (!first) out += ",";
    out += id;
    first = false;
  }
  return out + "}";
}

json ids_json(const std::vector<std::string>& ids) {
  json arr = json::array();
  for (const auto& id : ids) arr.push_back(id);
  return arr;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

// Instance files may carry their partition inline or derive it from an
// information table; exactly one source must be present.
rif::Partition resolve_partition(const rif::InstanceData& data,
                                 const std::string& table_path,
                                 const std::vector<std::string>& attrs) {
  if (data.partition && !table_path.empty()) {
    throw rif::ValidationError(
        "instance already has a partition; --table would define a second "
        "one");
  }
  if (data.partition) return *data.partition;
  if (table_path.empty()) {
    throw rif::ValidationError(
        "instance has no partition; pass --table (and --attrs) to derive "
        "one");
  }
  rif::InfoTable table = rif::load_info_table(table_path);
  rif::Partition derived = rif::partition_from_attributes(table, attrs);
  return rif::Partition(data.universe, derived.blocks_as_ids());
}

struct ApproxArgs {
  std::string instance_path;
  std::string set_name;
  std::string side = "both";
  std::string kind = "if";
  std::string table_path;
  std::vector<std::string> attrs;
  bool as_json = false;
};

int run_approx(const ApproxArgs& a) {
  rif::InstanceData data = rif::load_instance_file(a.instance_path);
  rif::Partition r = resolve_partition(data, a.table_path, a.attrs);
  const rif::IFSet& x = data.set_named(a.set_name);
  const rif::Universe& u = *data.universe;

  bool want_lower = a.side != "upper";
  bool want_upper = a.side != "lower";

  json out = json::object();
  out["set"] = a.set_name;
  out["kind"] = a.kind;
  std::string text;

  auto if_side = [&](const rif::IFSet& s) {
    json body = json::object();
    for (std::size_t i = 0; i < u.size(); ++i) {
      body[u.element(i)] = json::array({s.mu(i).str(), s.nu(i).str()});
    }
    return body;
  };
  auto if_text = [&](const char* label, const rif::IFSet& s) {
    text += std::string(a.set_name) + " " + label + " mu/nu:\n";
    for (std::size_t i = 0; i < u.size(); ++i) {
      text += "  " + u.element(i) + " " + s.mu(i).str() + " " +
              s.nu(i).str() + "\n";
    }
  };

  if (a.kind == "if") {
    if (want_lower) {
      rif::IFSet s = rif::lower_if(r, x);
      out["lower"] = if_side(s);
      if_text("lower", s);
    }
    if (want_upper) {
      rif::IFSet s = rif::upper_if(r, x);
      out["upper"] = if_side(s);
      if_text("upper", s);
    }
  } else if (a.kind == "fuzzy") {
    rif::FuzzySet f = rif::to_fuzzy(x);
    auto fuzzy_side = [&](const rif::FuzzySet& s) {
      json body = json::object();
      for (std::size_t i = 0; i < u.size(); ++i) {
        body[u.element(i)] = s.mu(i).str();
      }
      return body;
    };
    auto fuzzy_text = [&](const char* label, const rif::FuzzySet& s) {
      text += std::string(a.set_name) + " " + label + " mu:\n";
      for (std::size_t i = 0; i < u.size(); ++i) {
        text += "  " + u.element(i) + " " + s.mu(i).str() + "\n";
      }
    };
    if (want_lower) {
      rif::FuzzySet s = rif::lower_fuzzy(r, f);
      out["lower"] = fuzzy_side(s);
      fuzzy_text("lower", s);
    }
    if (want_upper) {
      rif::FuzzySet s = rif::upper_fuzzy(r, f);
      out["upper"] = fuzzy_side(s);
      fuzzy_text("upper", s);
    }
  } else {
    rif::CrispSet c = rif::to_crisp(x);
    if (want_lower) {
      rif::CrispSet s = rif::lower_crisp(r, c);
      out["lower"] = ids_json(s.ids());
      text += a.set_name + " lower: " + brace_list(s.ids()) + "\n";
    }
    if (want_upper) {
      rif::CrispSet s = rif::upper_crisp(r, c);
      out["upper"] = ids_json(s.ids());
      text += a.set_name + " upper: " + brace_list(s.ids()) + "\n";
    }
  }

  if (a.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return 0;
}

struct CompareArgs {
  std::string instance_path;
  std::string left;
  std::string right;
  std::string alpha = kDefaultAlpha;
  std::string beta = kDefaultBeta;
  std::string table_path;
  std::vector<std::string> attrs;
  bool as_json = false;
};

int run_compare(const CompareArgs& a) {
  rif::InstanceData data = rif::load_instance_file(a.instance_path);
  rif::Partition r = resolve_partition(data, a.table_path, a.attrs);
  const rif::IFSet& x = data.set_named(a.left);
  const rif::IFSet& y = data.set_named(a.right);
  rif::CutParams p(rif::Degree::parse(a.alpha), rif::Degree::parse(a.beta));

  rif::EqualityVerdict v = rif::classify(x, y, r, p);

  if (a.as_json) {
    json out = json::object();
    out["alpha"] = p.alpha().str();
    out["beta"] = p.beta().str();
    out["left"] = a.left;
    out["right"] = a.right;
    auto side = [&](const rif::SideVerdict& sv) {
      json s = json::object();
      s["left_cut"] = ids_json(sv.left_cut.ids());
      s["right_cut"] = ids_json(sv.right_cut.ids());
      s["equal"] = sv.equal;
      s["equivalent"] = sv.equivalent;
      return s;
    };
    out["bottom"] = side(v.bottom);
    out["top"] = side(v.top);
    json kinds = json::object();
    kinds["rough_equality"] = v.rough_equality();
    kinds["approximate_rough_equality"] = v.approximate_rough_equality();
    kinds["approximate_rough_equivalence"] = v.approximate_rough_equivalence();
    kinds["rough_equivalence"] = v.rough_equivalence();
    out["kinds"] = kinds;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "alpha " << p.alpha().str() << "  beta " << p.beta().str()
            << "\n";
  std::cout << "bottom cuts: " << a.left << " "
            << brace_list(v.bottom.left_cut.ids()) << " | " << a.right << " "
            << brace_list(v.bottom.right_cut.ids()) << "  equal "
            << yn(v.bottom.equal) << "  equivalent "
            << yn(v.bottom.equivalent) << "\n";
  std::cout << "top cuts: " << a.left << " "
            << brace_list(v.top.left_cut.ids()) << " | " << a.right << " "
            << brace_list(v.top.right_cut.ids()) << "  equal "
            << yn(v.top.equal) << "  equivalent " << yn(v.top.equivalent)
            << "\n";
  std::cout << "rough equality: " << yn(v.rough_equality()) << "\n";
  std::cout << "approximate rough equality: "
            << yn(v.approximate_rough_equality()) << "\n";
  std::cout << "approximate rough equivalence: "
            << yn(v.approximate_rough_equivalence()) << "\n";
  std::cout << "rough equivalence: " << yn(v.rough_equivalence()) << "\n";
  return 0;
}

struct PropsArgs {
  std::string instance_path;
  std::string properties = "all";
  std::string alpha;
  std::string beta;
  std::string table_path;
  std::vector<std::string> attrs;
  bool as_json = false;
};

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int run_props(const PropsArgs& a) {
  rif::InstanceData data = rif::load_instance_file(a.instance_path);
  rif::Partition r = resolve_partition(data, a.table_path, a.attrs);

  std::vector<const rif::PropertyDef*> defs;
  if (a.properties == "all") {
    for (const auto& def : rif::property_registry()) defs.push_back(&def);
  } else {
    for (const auto& id : split_ids(a.properties)) {
      defs.push_back(&rif::find_property(id));
    }
  }
  rif::PropertySuite suite(defs);

  std::vector<rif::CutParams> params;
  if (!a.alpha.empty() || !a.beta.empty()) {
    params.emplace_back(
        rif::Degree::parse(a.alpha.empty() ? kDefaultAlpha : a.alpha),
        rif::Degree::parse(a.beta.empty() ? kDefaultBeta : a.beta));
  } else {
    params = rif::param_grid(rif::Degree::parse("0.1"));
  }

  // Role tuples drawn from the file's sets: each set alone, every ordered
  // pair, and the first four sets when the file carries that many.
  std::vector<std::vector<rif::IFSet>> tuples;
  for (const auto& [name, s] : data.sets) {
    (void)name;
    tuples.push_back({s});
  }
  for (std::size_t i = 0; i < data.sets.size(); ++i) {
    for (std::size_t j = 0; j < data.sets.size(); ++j) {
      if (i != j) tuples.push_back({data.sets[i].second, data.sets[j].second});
    }
  }
  if (data.sets.size() >= 4) {
    tuples.push_back({data.sets[0].second, data.sets[1].second,
                      data.sets[2].second, data.sets[3].second});
  }

  for (const auto& p : params) {
    for (const auto& tuple : tuples) {
      suite.feed(rif::Instance{r, tuple, p});
    }
  }

  bool any_fails = false;
  json laws = json::array();
  std::string text;
  for (const auto& rep : suite.reports()) {
    const rif::PropertyDef& def = rif::find_property(rep.property_id);
    any_fails = any_fails || rep.status == rif::PropertyStatus::Fails;
    if (a.as_json) {
      json l = json::object();
      l["property"] = rep.property_id;
      l["status"] = rif::to_string(rep.status);
      l["checked"] = rep.checked;
      l["vacuous"] = rep.vacuous;
      l["reading_dependent"] = def.reading_dependent;
      l["note"] = rep.note;
      laws.push_back(std::move(l));
    } else {
      text += rep.property_id + " " + rif::to_string(rep.status) +
              " checked " + std::to_string(rep.checked) + " vacuous " +
              std::to_string(rep.vacuous);
      if (def.reading_dependent) text += " (reading-dependent)";
      if (!rep.note.empty()) text += "  [" + rep.note + "]";
      text += "\n";
    }
  }

  if (a.as_json) {
    json out = json::object();
    if (params.size() == 1) {
      out["alpha"] = params[0].alpha().str();
      out["beta"] = params[0].beta().str();
    } else {
      out["sweep_step"] = "0.1";
    }
    out["laws"] = std::move(laws);
    std::cout << out.dump(2) << "\n";
  } else {
    if (params.size() == 1) {
      std::cout << "alpha " << params[0].alpha().str() << "  beta "
                << params[0].beta().str() << "\n";
    } else {
      std::cout << "sweep step 0.1 (" << params.size()
                << " threshold pairs)\n";
    }
    std::cout << text;
  }
  return any_fails ? 2 : 0;
}

struct SearchArgs {
  std::string property_id;
  std::size_t universe_size = 4;
  std::string step = "0.1";
  std::uint64_t seed = 1;
  std::uint64_t budget = 100'000;
  std::string witness_out;
  std::string replay_path;
  bool as_json = false;
};

int run_replay(const SearchArgs& a) {
  rif::WitnessData wd = rif::load_witness_file(a.replay_path);
  std::string id = a.property_id.empty() ? wd.property_id : a.property_id;
  if (!a.property_id.empty() && a.property_id != wd.property_id) {
    throw rif::ValidationError("witness file is for property '" +
                               wd.property_id + "', not '" + a.property_id +
                               "'");
  }
  rif::PropertyReport rep = rif::replay_witness(id, wd.instance);
  bool reproduced = rep.status == rif::PropertyStatus::WitnessFound;

  if (a.as_json) {
    json out = json::object();
    out["property"] = id;
    out["status"] = rif::to_string(rep.status);
    out["reproduced"] = reproduced;
    out["note"] = rep.note;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "replay " << id << ": " << rif::to_string(rep.status)
              << (reproduced ? " (reproduced)" : " (not reproduced)") << "\n";
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
  }
  return reproduced ? 0 : 2;
}

int run_search(const SearchArgs& a) {
  if (!a.replay_path.empty()) return run_replay(a);

  const rif::PropertyDef& def = rif::find_property(a.property_id);
  rif::InstanceSpec spec;
  spec.universe_size = a.universe_size;
  spec.step = rif::Degree::parse(a.step);
  rif::SearchOptions options{a.budget, a.seed};

  rif::PropertyReport rep =
      rif::search_counterexample(a.property_id, spec, options);

  std::string path;
  if (rep.witness) {
    path = a.witness_out.empty() ? "witness-" + a.property_id + ".json"
                                 : a.witness_out;
    rif::write_text_file(path,
                         rif::serialize_witness(a.property_id, *rep.witness));
  }

  if (a.as_json) {
    json out = json::object();
    out["property"] = a.property_id;
    out["status"] = rif::to_string(rep.status);
    out["checked"] = rep.checked;
    out["vacuous"] = rep.vacuous;
    out["reading_dependent"] = def.reading_dependent;
    out["note"] = rep.note;
    if (!path.empty()) out["witness_path"] = path;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << a.property_id << " " << rif::to_string(rep.status)
              << " checked " << rep.checked << " vacuous " << rep.vacuous;
    if (def.reading_dependent) std::cout << " (reading-dependent)";
    std::cout << "\n";
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    if (!path.empty()) std::cout << "witness: " << path << "\n";
  }
  return def.theorem && rep.status == rif::PropertyStatus::WitnessFound ? 2
                                                                        : 0;
}

struct PartitionArgs {
  std::string table_path;
  std::vector<std::string> attrs;
  bool as_json = false;
};

int run_partition(const PartitionArgs& a) {
  rif::InfoTable table = rif::load_info_table(a.table_path);
  rif::Partition r = rif::partition_from_attributes(table, a.attrs);

  if (a.as_json) {
    json out = json::object();
    json universe = json::array();
    for (const auto& id : r.universe()->elements()) universe.push_back(id);
    out["universe"] = std::move(universe);
    json blocks = json::array();
    for (const auto& block : r.blocks_as_ids()) blocks.push_back(ids_json(block));
    out["partition"] = std::move(blocks);
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t b = 1;
    for (const auto& block : r.blocks_as_ids()) {
      std::cout << "block " << b++ << ": " << brace_list(block) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rough approximations and leveled approximate equality for graded "
      "sets"};
  app.require_subcommand(1);
  int rc = 0;

  ApproxArgs approx_args;
  auto* approx_cmd = app.add_subcommand(
      "approx", "lower/upper approximations of one named set");
  approx_cmd->add_option("instance", approx_args.instance_path,
                         "instance JSON file")
      ->required();
  approx_cmd->add_option("set", approx_args.set_name, "set name")->required();
  approx_cmd->add_option("--side", approx_args.side, "lower, upper or both")
      ->check(CLI::IsMember({"lower", "upper", "both"}))
      ->capture_default_str();
  approx_cmd->add_option("--kind", approx_args.kind, "crisp, fuzzy or if")
      ->check(CLI::IsMember({"crisp", "fuzzy", "if"}))
      ->capture_default_str();
  approx_cmd->add_option("--table", approx_args.table_path,
                         "information table CSV to derive the partition");
  approx_cmd->add_option("--attrs", approx_args.attrs,
                         "attributes for --table")
      ->delimiter(',');
  approx_cmd->add_flag("--json", approx_args.as_json, "machine-readable");
  approx_cmd->callback([&] { rc = run_approx(approx_args); });

  CompareArgs compare_args;
  auto* compare_cmd = app.add_subcommand(
      "compare", "four-way leveled equality verdict for two named sets");
  compare_cmd->add_option("instance", compare_args.instance_path,
                          "instance JSON file")
      ->required();
  compare_cmd->add_option("left", compare_args.left, "first set name")
      ->required();
  compare_cmd->add_option("right", compare_args.right, "second set name")
      ->required();
  compare_cmd->add_option("--alpha", compare_args.alpha,
                          "membership threshold")
      ->capture_default_str();
  compare_cmd->add_option("--beta", compare_args.beta,
                          "nonmembership threshold")
      ->capture_default_str();
  compare_cmd->add_option("--table", compare_args.table_path,
                          "information table CSV to derive the partition");
  compare_cmd->add_option("--attrs", compare_args.attrs,
                          "attributes for --table")
      ->delimiter(',');
  compare_cmd->add_flag("--json", compare_args.as_json, "machine-readable");
  compare_cmd->callback([&] { rc = run_compare(compare_args); });

  PropsArgs props_args;
  auto* props_cmd = app.add_subcommand(
      "props", "evaluate registered laws on the file's sets");
  props_cmd->add_option("instance", props_args.instance_path,
                        "instance JSON file")
      ->required();
  props_cmd->add_option("--properties", props_args.properties,
                        "'all' or comma-separated law ids")
      ->capture_default_str();
  props_cmd->add_option("--alpha", props_args.alpha,
                        "fixed membership threshold (default: sweep)");
  props_cmd->add_option("--beta", props_args.beta,
                        "fixed nonmembership threshold (default: sweep)");
  props_cmd->add_option("--table", props_args.table_path,
                        "information table CSV to derive the partition");
  props_cmd->add_option("--attrs", props_args.attrs, "attributes for --table")
      ->delimiter(',');
  props_cmd->add_flag("--json", props_args.as_json, "machine-readable");
  props_cmd->callback([&] { rc = run_props(props_args); });

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand(
      "search", "hunt for a counterexample witness, or replay one");
  search_cmd->add_option("property", search_args.property_id, "law id");
  search_cmd
      ->add_option("--universe-size", search_args.universe_size,
                   "max universe size")
      ->check(CLI::Range(std::size_t{1}, std::size_t{8}))
      ->capture_default_str();
  search_cmd->add_option("--step", search_args.step, "degree grid step")
      ->capture_default_str();
  search_cmd->add_option("--seed", search_args.seed, "sampling seed")
      ->envname("RIF_SEED")
      ->capture_default_str();
  search_cmd->add_option("--budget", search_args.budget,
                         "max instances to examine")
      ->capture_default_str();
  search_cmd->add_option("--witness-out", search_args.witness_out,
                         "where to write a found witness");
  search_cmd->add_option("--replay", search_args.replay_path,
                         "re-evaluate a saved witness file");
  search_cmd->add_flag("--json", search_args.as_json, "machine-readable");
  search_cmd->callback([&] {
    if (search_args.property_id.empty() && search_args.replay_path.empty()) {
      throw CLI::RequiredError("property");
    }
    rc = run_search(search_args);
  });

  PartitionArgs partition_args;
  auto* partition_cmd = app.add_subcommand(
      "partition", "derive the indiscernibility partition from a table");
  partition_cmd->add_option("table", partition_args.table_path,
                            "information table CSV")
      ->required();
  partition_cmd->add_option("--attrs", partition_args.attrs,
                            "attributes to group on (none: one block)")
      ->delimiter(',');
  partition_cmd->add_flag("--json", partition_args.as_json,
                          "machine-readable");
  partition_cmd->callback([&] { rc = run_partition(partition_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const rif::UnknownPropertyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const rif::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
