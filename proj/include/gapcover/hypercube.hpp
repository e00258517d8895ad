#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapcover/bignum.hpp"
#include "gapcover/gadget.hpp"
#include "gapcover/instance.hpp"

namespace gapcover {

// One universe element of the reduced instance: a function from the ell
// A-vertices of one gadget group (in canonical label order) to source
// universe ids.
struct HypercubeElement {
  int group = 0;                        // 1..m
  std::vector<std::string> assignment;  // length ell

  bool operator==(const HypercubeElement&) const = default;
};

// "hc:<group>:(id,...,id)"; bijective on well-formed elements.
std::string encode_element(const HypercubeElement& e);
HypercubeElement decode_element(const std::string& id);

struct CoveringGroupWitness {
  int group = 0;
  std::vector<int> a_labels;
  std::vector<int> cover_sets;  // indices into the source set_ids, N(a) cap X
  bool claim1 = false;          // at least k+1 neighbors in X
  bool rainbow = false;         // one set per part, covering the source universe
};

struct CoveringWitnessResult {
  bool covers = false;
  std::string uncovered_element;  // populated when !covers
  std::vector<CoveringGroupWitness> groups;
};

// The reduced instance I' = (S', U', E') with S' = S and |U'| = m*|U|^ell,
// kept implicit: elements are never materialized unless asked. Whether a set
// family covers U' is decided exactly through the per-group dichotomy (a
// group's elements are all covered iff some A-vertex of the group sees, via
// its X-neighbors, the whole source universe).
class HypercubeReduction {
 public:
  // src must carry a k-way partition of equal width n matching the gadget.
  // rainbow_certified records whether the caller guarantees that a yes-case
  // solution takes one set per part; without it the small-opt direction
  // carries no guarantee and a warning is recorded.
  HypercubeReduction(SetCoverInstance src, GapGadget gadget, bool rainbow_certified = true);

  const SetCoverInstance& source() const { return src_; }
  const CompiledInstance& compiled_source() const { return csrc_; }
  const GapGadget& gadget() const { return gadget_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  int num_sets() const { return csrc_.num_sets; }
  const BigNat& universe_size() const { return universe_size_; }  // m * |U|^ell

  // Exact: does this family of source sets cover U'?
  bool covers(const std::vector<int>& set_indices) const;

  // Explicit instance; refuses when m*|U|^ell exceeds budget.size.
  SetCoverInstance materialize(const Budget& budget = {}) const;

  // Diagnostic materializing the soundness proof's dichotomy. When X fails
  // to cover U', the uncovered element is built exactly as in the proof:
  // each A-vertex is mapped to a source element its X-neighbors miss.
  CoveringWitnessResult covering_witness(const std::vector<int>& set_indices) const;

 private:
  SetCoverInstance src_;
  CompiledInstance csrc_;
  GapGadget gadget_;
  BigNat universe_size_;
  std::vector<std::string> warnings_;
  std::vector<std::vector<std::uint64_t>> set_bits_;  // per set, bitset over source universe
  int words_ = 0;
};

// One-shot reduction: build and materialize.
SetCoverInstance apply_reduction(const SetCoverInstance& src, const GapGadget& gadget, const Budget& budget = {});

}  // namespace gapcover
