#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gapcover/common.hpp"

namespace gapcover {

// Contiguous range of set_ids forming one part of a partitioned instance.
struct PartRange {
  int start = 0;  // index into set_ids
  int width = 0;

  bool operator==(const PartRange&) const = default;
};

// Bipartite incidence structure (S, U, E). The id lists fix the canonical
// order used by every reduction and solver; incidence lists are kept sorted
// by position in universe_ids. The optional partition splits set_ids into
// contiguous parts; reductions that consume a partition require equal widths
// (see pad_partition).
struct SetCoverInstance {
  std::vector<std::string> set_ids;
  std::vector<std::string> universe_ids;
  std::vector<std::vector<std::string>> incidence;  // aligned with set_ids
  std::optional<std::vector<PartRange>> partition;

  bool operator==(const SetCoverInstance&) const = default;
};

struct Violation {
  std::string field;
  int index = -1;  // position within the field, -1 when not applicable
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Checks every SetCoverInstance invariant. Violations are data, not faults.
ValidationReport validate_instance(const SetCoverInstance& inst);

// Pads every part with fresh "pad:<part>:<index>" sets covering nothing until
// all parts have the width of the largest one. Covering power of any subset
// of original sets is unchanged. Throws Error when no partition is present.
SetCoverInstance pad_partition(const SetCoverInstance& inst);

// Index-based view of a valid instance, built once and shared by solvers and
// reductions. Construction throws ValidationError if the instance is invalid.
struct CompiledInstance {
  int num_sets = 0;
  int num_universe = 0;
  std::vector<std::vector<int>> cover;  // set -> sorted universe indices
  std::unordered_map<std::string, int> set_index;
  std::unordered_map<std::string, int> universe_index;
  // Present iff the instance is partitioned; part/slot are 0-based.
  std::vector<int> part_of_set;
  std::vector<int> slot_in_part;
  int num_parts = 0;
  int part_width = -1;  // -1 when widths differ

  bool equal_partition() const { return num_parts > 0 && part_width >= 0; }
};

CompiledInstance compile_instance(const SetCoverInstance& inst);

// JSON-shaped structured text, byte-deterministic.
std::string serialize_instance(const SetCoverInstance& inst);
SetCoverInstance deserialize_instance(const std::string& text);

SetCoverInstance load_instance_file(const std::string& path);
void save_instance_file(const SetCoverInstance& inst, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gapcover
