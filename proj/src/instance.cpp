#include "gapcover/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gapcover {

std::string fnv1a_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return std::string(buf);
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.field;
    if (v.index >= 0) os << "[" << v.index << "]";
    os << ": " << v.message << "\n";
  }
  return os.str();
}

namespace {

// Ids must survive embedding in "hc:<group>:(id,...,id)" element names, so
// whitespace is out, parentheses must balance, and commas may only appear
// inside parentheses. Hypercube element ids themselves then nest cleanly.
bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  int depth = 0;
  for (char c : id) {
    if (c <= ' ' || c > '~') return false;
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) return false;
    if (c == ',' && depth == 0) return false;
  }
  return depth == 0;
}

}  // namespace

ValidationReport validate_instance(const SetCoverInstance& inst) {
  ValidationReport report;
  auto flag = [&](const std::string& field, int index, const std::string& msg) {
    report.violations.push_back({field, index, msg});
  };

  std::unordered_map<std::string, int> uindex;
  for (int i = 0; i < static_cast<int>(inst.universe_ids.size()); ++i) {
    const auto& id = inst.universe_ids[i];
    if (!valid_id(id)) flag("universe_ids", i, "invalid id '" + id + "'");
    if (!uindex.emplace(id, i).second) flag("universe_ids", i, "duplicate universe id '" + id + "'");
  }
  std::unordered_map<std::string, int> sindex;
  for (int i = 0; i < static_cast<int>(inst.set_ids.size()); ++i) {
    const auto& id = inst.set_ids[i];
    if (!valid_id(id)) flag("set_ids", i, "invalid id '" + id + "'");
    if (!sindex.emplace(id, i).second) flag("set_ids", i, "duplicate set id '" + id + "'");
  }

  if (inst.incidence.size() != inst.set_ids.size())
    flag("incidence", -1, "incidence has " + std::to_string(inst.incidence.size()) + " entries for " +
                              std::to_string(inst.set_ids.size()) + " sets");
  for (int s = 0; s < static_cast<int>(inst.incidence.size()); ++s) {
    int prev = -1;
    for (const auto& uid : inst.incidence[s]) {
      auto it = uindex.find(uid);
      if (it == uindex.end()) {
        flag("incidence", s, "unknown universe id '" + uid + "'");
        continue;
      }
      if (it->second <= prev)
        flag("incidence", s, "not sorted by universe order at '" + uid + "'");
      prev = it->second;
    }
  }

  if (inst.partition) {
    const auto& parts = *inst.partition;
    int expected_start = 0;
    int width0 = parts.empty() ? 0 : parts[0].width;
    bool unequal = false;
    for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
      if (parts[p].width < 0) flag("partition", p, "negative width");
      if (parts[p].start != expected_start)
        flag("partition", p, "ranges not contiguous: start " + std::to_string(parts[p].start) + ", expected " +
                                 std::to_string(expected_start));
      expected_start = parts[p].start + parts[p].width;
      if (parts[p].width != width0) unequal = true;
    }
    if (expected_start != static_cast<int>(inst.set_ids.size()))
      flag("partition", -1, "ranges do not cover all set_ids");
    if (unequal) flag("partition", -1, "unequal part widths");
  }
  return report;
}

SetCoverInstance pad_partition(const SetCoverInstance& inst) {
  if (!inst.partition) throw Error("pad_partition: no partition");
  const auto& parts = *inst.partition;
  int max_width = 0;
  for (const auto& p : parts) max_width = std::max(max_width, p.width);

  bool already_equal = true;
  for (const auto& p : parts)
    if (p.width != max_width) already_equal = false;
  if (already_equal) return inst;

  SetCoverInstance out;
  out.universe_ids = inst.universe_ids;
  std::vector<PartRange> new_parts;
  for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
    new_parts.push_back({static_cast<int>(out.set_ids.size()), max_width});
    for (int i = 0; i < parts[p].width; ++i) {
      out.set_ids.push_back(inst.set_ids[parts[p].start + i]);
      out.incidence.push_back(inst.incidence[parts[p].start + i]);
    }
    for (int i = parts[p].width; i < max_width; ++i) {
      out.set_ids.push_back("pad:" + std::to_string(p + 1) + ":" + std::to_string(i - parts[p].width + 1));
      out.incidence.emplace_back();
    }
  }
  out.partition = std::move(new_parts);
  return out;
}

CompiledInstance compile_instance(const SetCoverInstance& inst) {
  auto report = validate_instance(inst);
  // Unequal part widths only matter to consumers that require a padded
  // partition (they check part_width themselves); everything else blocks.
  ValidationReport blocking;
  for (const auto& v : report.violations)
    if (v.message != "unequal part widths") blocking.violations.push_back(v);
  if (!blocking.ok()) throw ValidationError("invalid instance:\n" + blocking.summary());

  CompiledInstance c;
  c.num_sets = static_cast<int>(inst.set_ids.size());
  c.num_universe = static_cast<int>(inst.universe_ids.size());
  for (int i = 0; i < c.num_sets; ++i) c.set_index.emplace(inst.set_ids[i], i);
  for (int i = 0; i < c.num_universe; ++i) c.universe_index.emplace(inst.universe_ids[i], i);
  c.cover.resize(c.num_sets);
  for (int s = 0; s < c.num_sets; ++s)
    for (const auto& uid : inst.incidence[s]) c.cover[s].push_back(c.universe_index.at(uid));

  if (inst.partition) {
    const auto& parts = *inst.partition;
    c.num_parts = static_cast<int>(parts.size());
    c.part_of_set.assign(c.num_sets, -1);
    c.slot_in_part.assign(c.num_sets, -1);
    c.part_width = parts.empty() ? 0 : parts[0].width;
    for (int p = 0; p < c.num_parts; ++p) {
      if (parts[p].width != c.part_width) c.part_width = -1;
      for (int i = 0; i < parts[p].width; ++i) {
        c.part_of_set[parts[p].start + i] = p;
        c.slot_in_part[parts[p].start + i] = i;
      }
    }
  }
  return c;
}

std::string serialize_instance(const SetCoverInstance& inst) {
  nlohmann::ordered_json j;
  j["format"] = "setcover-instance-v1";
  j["set_ids"] = inst.set_ids;
  j["universe_ids"] = inst.universe_ids;
  j["incidence"] = inst.incidence;
  if (inst.partition) {
    auto parts = nlohmann::ordered_json::array();
    for (const auto& p : *inst.partition) parts.push_back({p.start, p.width});
    j["partition"] = parts;
  }
  return j.dump(2) + "\n";
}

SetCoverInstance deserialize_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("instance: ") + e.what(), 0);
  }
  try {
    if (j.at("format") != "setcover-instance-v1") throw ParseError("instance: unknown format tag", 0);
    SetCoverInstance inst;
    inst.set_ids = j.at("set_ids").get<std::vector<std::string>>();
    inst.universe_ids = j.at("universe_ids").get<std::vector<std::string>>();
    inst.incidence = j.at("incidence").get<std::vector<std::vector<std::string>>>();
    if (j.contains("partition")) {
      std::vector<PartRange> parts;
      for (const auto& p : j.at("partition")) parts.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
      inst.partition = std::move(parts);
    }
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance: ") + e.what(), 0);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

SetCoverInstance load_instance_file(const std::string& path) { return deserialize_instance(read_file(path)); }

void save_instance_file(const SetCoverInstance& inst, const std::string& path) {
  write_file(path, serialize_instance(inst));
}

}  // namespace gapcover
