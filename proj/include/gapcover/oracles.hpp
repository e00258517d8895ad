#pragma once

#include <string>
#include <vector>

#include "gapcover/cnf.hpp"
#include "gapcover/graph.hpp"
#include "gapcover/hypercube.hpp"
#include "gapcover/instance.hpp"
#include "gapcover/vector_sum.hpp"

namespace gapcover {

enum class OptStatus {
  kFound,         // minimum cover of size <= bound, witness attached
  kExceedsBound,  // every cover needs more than `bound` sets
  kInfeasible,    // some universe element is covered by no set at all
};

struct OptResult {
  OptStatus status = OptStatus::kExceedsBound;
  int opt = -1;
  std::vector<int> witness;  // set indices, ascending; empty unless kFound

  bool within(int k) const { return status == OptStatus::kFound && opt <= k; }
};

// Branch and bound over sets covering the lowest-index uncovered element,
// with a greedy upper bound and a ceil(uncovered/max-set-size) lower bound.
// The witness is the lexicographically least among minimum covers. Node
// count is charged against budget.work.
OptResult exact_opt(const SetCoverInstance& inst, int bound, const Budget& budget = {});

// Reference enumerator over subsets by increasing size; kept as the oracle's
// oracle for exact_opt.
OptResult exhaustive_opt(const SetCoverInstance& inst, int bound, const Budget& budget = {});

// Same contract over an implicit reduced instance, enumerating subsets of S'
// and deciding coverage through the group dichotomy.
OptResult exact_opt_implicit(const HypercubeReduction& red, int bound, const Budget& budget = {});

struct GreedyResult {
  std::vector<int> witness;
  int size = 0;
};

// Largest-uncovered-coverage-first, lowest set index on ties. Throws when
// some element is uncoverable, naming it.
GreedyResult greedy_cover(const SetCoverInstance& inst);

struct SatWitness {
  bool satisfiable = false;
  std::vector<bool> assignment;  // per variable, when satisfiable
};
SatWitness brute_sat(const CnfFormula& cnf, const Budget& budget = {});

struct CliqueWitness {
  bool exists = false;
  std::vector<std::string> vertices;  // one per part, when a clique exists
};
// k must equal g.k: a k-clique in a k-partite graph takes one vertex per part.
CliqueWitness brute_clique(const MultipartiteGraph& g, int k, const Budget& budget = {});

struct VectorSumWitness {
  bool exists = false;
  std::vector<int> indices;  // chosen vector index per list
};
VectorSumWitness brute_vector_sum(const VectorSumInstance& vs, const Budget& budget = {});

struct KsumWitness {
  bool exists = false;
  std::vector<int> indices;  // chosen integer index per list
};
KsumWitness brute_ksum(const std::vector<std::vector<long long>>& lists, const Budget& budget = {});

}  // namespace gapcover
