#pragma once

#include <string>
#include <vector>

#include "gapcover/cnf.hpp"
#include "gapcover/graph.hpp"
#include "gapcover/instance.hpp"
#include "gapcover/vector_sum.hpp"

namespace gapcover {

// Variables are split into k contiguous chunks of at most ceil(n/k); part i
// holds one set per assignment of chunk i, adjacent to the guard "guard:i"
// and to every clause the partial assignment satisfies. Satisfiable formulas
// get a rainbow k-cover, unsatisfiable ones have opt > k.
SetCoverInstance sat_to_setcover(const CnfFormula& cnf, int k, const Budget& budget = {});

// Sets are the edges of G grouped by part pair; the universe is
// [k] x [k-1]^{0,1} x [L] with L = max(1, ceil(log2 |V|)). A k-clique yields
// a one-edge-per-pair cover of size C(k,2); without one, opt > C(k,2).
// Requires k == g.k >= 2.
SetCoverInstance clique_to_setcover(const MultipartiteGraph& g, int k);

// Sets are the vectors tagged by list; universe elements are (coordinate j,
// word over [k] indexed by the zero-sum difference tuples D). A rainbow
// zero-sum tuple covers everything; otherwise opt > k.
SetCoverInstance vectorsum_to_setcover(const VectorSumInstance& vs, const Budget& budget = {});

struct KsumReductionResult {
  std::vector<VectorSumInstance> instances;  // s = (k+1)^(d-1) of them
  int k = 0;
  int p = 0;
  int d = 0;
  long long shift = 0;   // inputs move to [0, 2R] via x -> x + R
  long long target = 0;  // k * R
};

// Base-p digit decomposition with one output instance per carry vector in
// [0,k]^(d-1). Some original selection sums to zero iff some output instance
// has a rainbow zero-sum tuple. Requires k < p and p^d >= k*(2R) + 1 where R
// is the largest input magnitude.
KsumReductionResult ksum_to_vectorsum(const std::vector<std::vector<long long>>& lists, int p, int d,
                                      const Budget& budget = {});

// k-SUM lists file: first line "k", then one line per list: "<n> v1 .. vn".
std::vector<std::vector<long long>> parse_ksum_lists(const std::string& text);
std::string write_ksum_lists(const std::vector<std::vector<long long>>& lists);

}  // namespace gapcover
