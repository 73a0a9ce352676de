#include "rif/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "rif/errors.hpp"

namespace rif {

using json = nlohmann::ordered_json;

namespace {

json parse_json_or_throw(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string(what) + " is not valid JSON: " +
                          e.what());
  }
}

DegreePair parse_grade(const json& g, const std::string& where) {
  if (!g.is_array() || g.size() != 2 || !g[0].is_string() ||
      !g[1].is_string()) {
    throw ValidationError(where +
                          ": grade must be a [mu, nu] pair of decimal "
                          "strings");
  }
  return {Degree::parse(g[0].get<std::string>()),
          Degree::parse(g[1].get<std::string>())};
}

InstanceData instance_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("instance must be a JSON object");
  if (!j.contains("universe") || !j["universe"].is_array()) {
    throw ValidationError("instance needs a \"universe\" array");
  }
  std::vector<std::string> ids;
  for (const auto& el : j["universe"]) {
    if (!el.is_string()) {
      throw ValidationError("universe elements must be strings");
    }
    ids.push_back(el.get<std::string>());
  }

  InstanceData data;
  data.universe = make_universe(std::move(ids));

  if (j.contains("partition")) {
    if (!j["partition"].is_array()) {
      throw ValidationError("\"partition\" must be an array of blocks");
    }
    std::vector<std::vector<std::string>> blocks;
    for (const auto& b : j["partition"]) {
      if (!b.is_array()) {
        throw ValidationError("partition blocks must be arrays of ids");
      }
      std::vector<std::string> block;
      for (const auto& el : b) {
        if (!el.is_string()) {
          throw ValidationError("partition entries must be strings");
        }
        block.push_back(el.get<std::string>());
      }
      blocks.push_back(std::move(block));
    }
    data.partition = Partition(data.universe, std::move(blocks));
  }

  if (!j.contains("sets") || !j["sets"].is_object()) {
    throw ValidationError("instance needs a \"sets\" object");
  }
  for (const auto& [name, body] : j["sets"].items()) {
    if (!body.is_object()) {
      throw ValidationError("set \"" + name +
                            "\" must map element ids to grades");
    }
    std::map<std::string, DegreePair> grades;
    for (const auto& [id, g] : body.items()) {
      grades.emplace(id,
                     parse_grade(g, "set \"" + name + "\", element \"" + id +
                                        "\""));
    }
    data.sets.emplace_back(name, IFSet::from_map(data.universe, grades));
  }
  if (data.sets.empty()) {
    throw ValidationError("instance needs at least one set");
  }
  return data;
}

json universe_to_json(const Universe& u) {
  json arr = json::array();
  for (const auto& id : u.elements()) arr.push_back(id);
  return arr;
}

json partition_to_json(const Partition& r) {
  json blocks = json::array();
  for (const auto& block : r.blocks_as_ids()) {
    json b = json::array();
    for (const auto& id : block) b.push_back(id);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

json set_to_json(const Universe& u, const IFSet& s) {
  json body = json::object();
  for (std::size_t i = 0; i < u.size(); ++i) {
    body[u.element(i)] = json::array({s.mu(i).str(), s.nu(i).str()});
  }
  return body;
}

const std::vector<std::string>& role_names() {
  static const std::vector<std::string> roles = {"X", "Y", "Xp", "Yp"};
  return roles;
}

}  // namespace

const IFSet& InstanceData::set_named(const std::string& name) const {
  for (const auto& [n, s] : sets) {
    if (n == name) return s;
  }
  std::string known;
  for (const auto& [n, s] : sets) {
    (void)s;
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw UnknownSetError("no set named \"" + name + "\"; file has: " + known);
}

bool InstanceData::has_set(const std::string& name) const {
  for (const auto& [n, s] : sets) {
    (void)s;
    if (n == name) return true;
  }
  return false;
}

InstanceData parse_instance_text(const std::string& text) {
  return instance_from_json(parse_json_or_throw(text, "instance"));
}

InstanceData load_instance_file(const std::string& path) {
  return parse_instance_text(read_text_file(path));
}

std::string serialize_instance(const InstanceData& data) {
  json j = json::object();
  j["universe"] = universe_to_json(*data.universe);
  if (data.partition) j["partition"] = partition_to_json(*data.partition);
  json sets = json::object();
  for (const auto& [name, s] : data.sets) {
    sets[name] = set_to_json(*data.universe, s);
  }
  j["sets"] = std::move(sets);
  return j.dump(2) + "\n";
}

std::string serialize_witness(const std::string& property_id,
                              const Instance& inst) {
  if (inst.sets.size() > role_names().size()) {
    throw ValidationError("witness carries more than four sets");
  }
  json j = json::object();
  j["property"] = property_id;
  j["alpha"] = inst.params.alpha().str();
  j["beta"] = inst.params.beta().str();
  const Universe& u = *inst.partition.universe();
  j["universe"] = universe_to_json(u);
  j["partition"] = partition_to_json(inst.partition);
  json sets = json::object();
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    sets[role_names()[i]] = set_to_json(u, inst.sets[i]);
  }
  j["sets"] = std::move(sets);
  return j.dump(2) + "\n";
}

WitnessData parse_witness_text(const std::string& text) {
  json j = parse_json_or_throw(text, "witness");
  if (!j.is_object() || !j.contains("property") || !j["property"].is_string()) {
    throw ValidationError("witness needs a \"property\" id string");
  }
  for (const char* key : {"alpha", "beta"}) {
    if (!j.contains(key) || !j[key].is_string()) {
      throw ValidationError(std::string("witness needs \"") + key +
                            "\" as a decimal string");
    }
  }
  CutParams params(Degree::parse(j["alpha"].get<std::string>()),
                   Degree::parse(j["beta"].get<std::string>()));

  InstanceData data = instance_from_json(j);
  if (!data.partition) {
    throw ValidationError("witness needs a \"partition\"");
  }
  if (data.sets.size() == 3 || data.sets.size() > 4) {
    throw ValidationError("witness must carry 1, 2 or 4 sets named X, Y, "
                          "Xp, Yp");
  }
  std::vector<IFSet> sets;
  sets.reserve(data.sets.size());
  for (std::size_t i = 0; i < data.sets.size(); ++i) {
    sets.push_back(data.set_named(role_names()[i]));
  }
  return {j["property"].get<std::string>(),
          Instance{*data.partition, std::move(sets), params}};
}

WitnessData load_witness_file(const std::string& path) {
  return parse_witness_text(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
  out.flush();
  if (!out) throw ValidationError("failed while writing " + path);
}

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto end_field = [&] {
    row.push_back(field);
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(row);
    row.clear();
  };

  while (i < n) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < n && text[i + 1] == '"') {
          field += '"';
          i += 2;
        } else {
          in_quotes = false;
          ++i;
        }
      } else {
        field += c;
        ++i;
      }
    } else if (c == '"' && field.empty()) {
      in_quotes = true;
      ++i;
    } else if (c == ',') {
      end_field();
      ++i;
    } else if (c == '\r' && i + 1 < n && text[i + 1] == '\n') {
      end_row();
      i += 2;
    } else if (c == '\n') {
      end_row();
      ++i;
    } else {
      field += c;
      ++i;
    }
  }
  if (in_quotes) throw ValidationError("unterminated quoted CSV field");
  if (!field.empty() || !row.empty()) end_row();

  std::erase_if(rows, [](const std::vector<std::string>& r) {
    return r.size() == 1 && r.front().empty();
  });
  return rows;
}

}  // namespace

InfoTable parse_info_table(const std::string& text) {
  auto rows = parse_csv(text);
  if (rows.empty()) throw ValidationError("table needs a header row");

  const auto& header = rows.front();
  if (header.front() != "id") {
    throw ValidationError("first header column must be \"id\", got \"" +
                          header.front() + "\"");
  }

  InfoTable t;
  t.attributes.assign(header.begin() + 1, header.end());
  std::unordered_set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != header.size()) {
      throw ValidationError("row " + std::to_string(r + 1) + " has " +
                            std::to_string(rows[r].size()) +
                            " cells, header has " +
                            std::to_string(header.size()));
    }
    const std::string& id = rows[r].front();
    if (id.empty()) {
      throw ValidationError("row " + std::to_string(r + 1) +
                            " has an empty object id");
    }
    if (!seen.insert(id).second) {
      throw DuplicateObjectIdError("duplicate object id \"" + id + "\"");
    }
    t.ids.push_back(id);
    t.rows.emplace_back(rows[r].begin() + 1, rows[r].end());
  }
  if (t.ids.empty()) throw ValidationError("table needs at least one object");
  return t;
}

InfoTable load_info_table(const std::string& path) {
  return parse_info_table(read_text_file(path));
}

Partition partition_from_attributes(const InfoTable& table,
                                    const std::vector<std::string>& attrs) {
  std::vector<std::size_t> cols;
  cols.reserve(attrs.size());
  for (const auto& a : attrs) {
    auto it = std::find(table.attributes.begin(), table.attributes.end(), a);
    if (it == table.attributes.end()) {
      throw UnknownAttributeError("unknown attribute \"" + a + "\"");
    }
    cols.push_back(static_cast<std::size_t>(it - table.attributes.begin()));
  }

  auto universe = make_universe(table.ids);
  std::vector<std::vector<std::string>> blocks;
  std::map<std::vector<std::string>, std::size_t> block_of;
  for (std::size_t r = 0; r < table.ids.size(); ++r) {
    std::vector<std::string> key;
    key.reserve(cols.size());
    for (auto c : cols) key.push_back(table.rows[r][c]);
    auto [it, inserted] = block_of.emplace(std::move(key), blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(table.ids[r]);
  }
  return Partition(std::move(universe), std::move(blocks));
}

}  // namespace rif
