#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rif/generate.hpp"
#include "rif/ifset.hpp"
#include "rif/universe.hpp"

namespace rif {

// In-memory form of an instance file. Sets keep file order so commands can
// default to "first two sets" deterministically.
struct InstanceData {
  UniversePtr universe;
  std::optional<Partition> partition;
  std::vector<std::pair<std::string, IFSet>> sets;

  const IFSet& set_named(const std::string& name) const;
  bool has_set(const std::string& name) const;
};

InstanceData parse_instance_text(const std::string& text);
InstanceData load_instance_file(const std::string& path);
std::string serialize_instance(const InstanceData& data);

// Witness files reuse the instance schema plus the property id and the cut
// thresholds it fired at. Sets are named by role: X, Y, Xp, Yp.
struct WitnessData {
  std::string property_id;
  Instance instance;
};

std::string serialize_witness(const std::string& property_id,
                              const Instance& inst);
WitnessData parse_witness_text(const std::string& text);
WitnessData load_witness_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Information table: CSV with header "id,<attr>,..." and one row per object.
struct InfoTable {
  std::vector<std::string> attributes;
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> rows;
};

InfoTable parse_info_table(const std::string& text);
InfoTable load_info_table(const std::string& path);

Partition partition_from_attributes(const InfoTable& table,
                                    const std::vector<std::string>& attrs);

}  // namespace rif
