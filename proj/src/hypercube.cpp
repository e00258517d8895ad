#include "gapcover/hypercube.hpp"

#include <algorithm>
#include <sstream>

namespace gapcover {

std::string encode_element(const HypercubeElement& e) {
  std::string s = "hc:" + std::to_string(e.group) + ":(";
  for (std::size_t i = 0; i < e.assignment.size(); ++i) {
    if (i > 0) s += ",";
    s += e.assignment[i];
  }
  return s + ")";
}

HypercubeElement decode_element(const std::string& id) {
  if (id.rfind("hc:", 0) != 0) throw Error("decode_element: malformed id '" + id + "'");
  std::size_t colon = id.find(':', 3);
  if (colon == std::string::npos || colon + 1 >= id.size() || id[colon + 1] != '(' || id.back() != ')')
    throw Error("decode_element: malformed id '" + id + "'");
  HypercubeElement e;
  try {
    std::size_t used = 0;
    e.group = std::stoi(id.substr(3, colon - 3), &used);
    if (used != colon - 3) throw Error("");
  } catch (...) {
    throw Error("decode_element: malformed group in '" + id + "'");
  }
  std::string body = id.substr(colon + 2, id.size() - colon - 3);
  if (body.empty()) throw Error("decode_element: empty assignment in '" + id + "'");
  // Split at depth-0 commas so nested element ids survive.
  std::string part;
  int depth = 0;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (part.empty()) throw Error("decode_element: empty assignment entry in '" + id + "'");
      e.assignment.push_back(std::move(part));
      part.clear();
    } else {
      part += c;
    }
  }
  if (part.empty()) throw Error("decode_element: empty assignment entry in '" + id + "'");
  e.assignment.push_back(std::move(part));
  return e;
}

HypercubeReduction::HypercubeReduction(SetCoverInstance src, GapGadget gadget, bool rainbow_certified)
    : src_(std::move(src)), gadget_(std::move(gadget)) {
  csrc_ = compile_instance(src_);
  if (!csrc_.equal_partition())
    throw Error("hypercube reduction: source needs a partition with equal part widths (run pad_partition)");
  if (csrc_.num_parts != gadget_.k)
    throw Error("hypercube reduction: dimension mismatch: source has " + std::to_string(csrc_.num_parts) +
                " parts, gadget expects k=" + std::to_string(gadget_.k));
  if (csrc_.part_width != gadget_.n)
    throw Error("hypercube reduction: dimension mismatch: source part width " + std::to_string(csrc_.part_width) +
                ", gadget expects n=" + std::to_string(gadget_.n));
  universe_size_ = BigNat::product_power(static_cast<std::uint64_t>(gadget_.m),
                                         static_cast<std::uint64_t>(csrc_.num_universe),
                                         static_cast<std::uint64_t>(gadget_.ell));
  if (!rainbow_certified)
    warnings_.push_back(
        "source not certified rainbow: a k-sized source cover without one set per part carries no guarantee");
  words_ = (csrc_.num_universe + 63) / 64;
  set_bits_.assign(csrc_.num_sets, std::vector<std::uint64_t>(words_, 0));
  for (int s = 0; s < csrc_.num_sets; ++s)
    for (int u : csrc_.cover[s]) set_bits_[s][u >> 6] |= std::uint64_t{1} << (u & 63);
}

namespace {

bool all_ones(const std::vector<std::uint64_t>& bits, int universe) {
  int full = universe / 64;
  for (int w = 0; w < full; ++w)
    if (bits[w] != ~std::uint64_t{0}) return false;
  int tail = universe % 64;
  if (tail && bits[full] != (std::uint64_t{1} << tail) - 1) return false;
  return true;
}

}  // namespace

bool HypercubeReduction::covers(const std::vector<int>& set_indices) const {
  if (csrc_.num_universe == 0) return true;  // U' is empty
  std::vector<std::uint64_t> acc(words_);
  std::vector<int> labels(gadget_.k);
  for (int i = 0; i < gadget_.m; ++i) {
    bool group_ok = false;
    for (long long rank = 0; rank < gadget_.ell && !group_ok; ++rank) {
      long long r = rank;
      for (int j = gadget_.k - 1; j >= 0; --j) {
        labels[j] = 1 + static_cast<int>(r % gadget_.h);
        r /= gadget_.h;
      }
      std::fill(acc.begin(), acc.end(), 0);
      for (int s : set_indices) {
        if (gadget_.matrix[i][csrc_.slot_in_part[s]] != labels[csrc_.part_of_set[s]]) continue;
        const auto& bits = set_bits_[s];
        for (int w = 0; w < words_; ++w) acc[w] |= bits[w];
      }
      group_ok = all_ones(acc, csrc_.num_universe);
    }
    if (!group_ok) return false;
  }
  return true;
}

CoveringWitnessResult HypercubeReduction::covering_witness(const std::vector<int>& set_indices) const {
  CoveringWitnessResult res;
  if (csrc_.num_universe == 0) {
    res.covers = true;
    return res;
  }
  std::vector<std::uint64_t> acc(words_);
  for (int i = 0; i < gadget_.m; ++i) {
    CoveringGroupWitness small, claim1;
    bool have_small = false, have_claim1 = false;
    // One source element missed per A-vertex, in case the group is uncovered.
    std::vector<std::string> missed;
    missed.reserve(gadget_.ell);
    bool group_covered = false;
    for (long long rank = 0; rank < gadget_.ell; ++rank) {
      auto labels = labels_from_rank(gadget_, rank);
      std::fill(acc.begin(), acc.end(), 0);
      std::vector<int> neighbors;
      for (int s : set_indices) {
        if (gadget_.matrix[i][csrc_.slot_in_part[s]] != labels[csrc_.part_of_set[s]]) continue;
        neighbors.push_back(s);
        for (int w = 0; w < words_; ++w) acc[w] |= set_bits_[s][w];
      }
      bool full = all_ones(acc, csrc_.num_universe);
      group_covered = group_covered || full;
      if (full && static_cast<int>(neighbors.size()) <= gadget_.k && !have_small) {
        small.group = i + 1;
        small.a_labels = labels;
        small.cover_sets = neighbors;
        small.claim1 = false;
        std::vector<bool> part_seen(gadget_.k, false);
        small.rainbow = true;
        for (int s : neighbors) {
          if (part_seen[csrc_.part_of_set[s]]) small.rainbow = false;
          part_seen[csrc_.part_of_set[s]] = true;
        }
        have_small = true;
      }
      if (static_cast<int>(neighbors.size()) >= gadget_.k + 1 && !have_claim1) {
        claim1.group = i + 1;
        claim1.a_labels = labels;
        claim1.cover_sets = neighbors;
        claim1.claim1 = true;
        have_claim1 = true;
      }
      if (!group_covered) {
        int u = 0;
        while ((acc[u >> 6] >> (u & 63)) & 1) ++u;
        missed.push_back(src_.universe_ids[u]);
      }
    }
    if (!group_covered) {
      // Exactly the proof's construction: map every A-vertex of the group to
      // an element its X-neighbors miss; no set can cover that function.
      HypercubeElement e;
      e.group = i + 1;
      e.assignment = std::move(missed);
      res.covers = false;
      res.uncovered_element = encode_element(e);
      res.groups.clear();
      return res;
    }
    res.groups.push_back(have_small ? std::move(small) : std::move(claim1));
  }
  res.covers = true;
  return res;
}

SetCoverInstance HypercubeReduction::materialize(const Budget& budget) const {
  if (!(universe_size_ <= budget.size))
    throw BudgetError("hypercube reduction: m*|U|^ell = " + universe_size_.to_string() + " exceeds size budget " +
                      std::to_string(budget.size));
  // Every element id spells out its ell-slot assignment, so ell itself is
  // part of the materialization cost.
  if (static_cast<std::uint64_t>(gadget_.ell) > budget.size)
    throw BudgetError("hypercube reduction: ell = " + std::to_string(gadget_.ell) + " exceeds size budget " +
                      std::to_string(budget.size));
  SetCoverInstance out;
  out.set_ids = src_.set_ids;
  out.partition = src_.partition;
  out.incidence.resize(csrc_.num_sets);

  if (csrc_.num_universe == 0) return out;

  // (group, part, label) -> slots, to walk only gadget-adjacent sets.
  std::vector<int> covering;  // scratch: sets covering the current element
  std::vector<int> stamp(csrc_.num_sets, -1);
  int element_index = 0;
  std::vector<int> assignment(gadget_.ell, 0);  // universe indices, slot 0 most significant
  for (int i = 0; i < gadget_.m; ++i) {
    std::vector<std::vector<std::vector<int>>> bucket(
        gadget_.k, std::vector<std::vector<int>>(gadget_.h + 1));
    for (int s = 0; s < csrc_.num_sets; ++s)
      bucket[csrc_.part_of_set[s]][gadget_.matrix[i][csrc_.slot_in_part[s]]].push_back(s);

    std::fill(assignment.begin(), assignment.end(), 0);
    while (true) {
      HypercubeElement e;
      e.group = i + 1;
      for (int slot = 0; slot < gadget_.ell; ++slot) e.assignment.push_back(src_.universe_ids[assignment[slot]]);
      out.universe_ids.push_back(encode_element(e));

      covering.clear();
      for (long long rank = 0; rank < gadget_.ell; ++rank) {
        auto labels = labels_from_rank(gadget_, rank);
        int u = assignment[rank];
        for (int j = 0; j < gadget_.k; ++j)
          for (int s : bucket[j][labels[j]])
            if ((set_bits_[s][u >> 6] >> (u & 63)) & 1 && stamp[s] != element_index) {
              stamp[s] = element_index;
              covering.push_back(s);
            }
      }
      std::sort(covering.begin(), covering.end());
      for (int s : covering) out.incidence[s].push_back(out.universe_ids.back());

      ++element_index;
      int slot = gadget_.ell - 1;
      while (slot >= 0 && assignment[slot] == csrc_.num_universe - 1) assignment[slot--] = 0;
      if (slot < 0) break;
      ++assignment[slot];
    }
  }
  return out;
}

SetCoverInstance apply_reduction(const SetCoverInstance& src, const GapGadget& gadget, const Budget& budget) {
  return HypercubeReduction(src, gadget).materialize(budget);
}

}  // namespace gapcover
