#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gapcover/common.hpp"

namespace gapcover {

// Implicit bipartite graph (A, B, E_T). The A side has m groups, each the
// full label cube [h]^k (so ell = h^k); the B side has k parts of size n.
// Adjacency is computed from the m x n matrix, never stored.
struct GapGadget {
  int k = 0;
  int n = 0;
  int m = 0;
  int h = 0;
  long long ell = 0;  // h^k
  std::vector<std::vector<int>> matrix;  // m rows, n columns, entries in 1..h
};

struct AVertex {
  int group = 0;            // 1..m
  std::vector<int> labels;  // size k, values in 1..h
};

struct BVertex {
  int part = 0;   // 1..k
  int index = 0;  // 1..n
};

// Canonical lexicographic enumeration of a group's label cube; rank 0 is
// (1,1,...,1) and labels[0] is the most significant digit.
std::vector<int> labels_from_rank(const GapGadget& g, long long rank);
long long rank_from_labels(const GapGadget& g, const std::vector<int>& labels);

// True iff matrix[a.group][b.index] == a.labels[b.part]. Out-of-range
// vertices throw.
bool adjacent(const GapGadget& g, const AVertex& a, const BVertex& b);

struct MatrixBuildResult {
  std::vector<std::vector<int>> matrix;
  int rows = 0;
  int target_rows = 0;        // n * t
  std::string route;          // "universal" or "direct-m2"
  std::size_t universal_size = 0;  // strings behind the universal route
};

// Slices an (n*t, h*t)-universal set into t-bit blocks, giving n*t rows
// when the universal route is feasible. When a genuine
// universal set cannot fit in n*t rows (2^(h*t) > n*t), fall back to a
// seeded greedy that targets the rainbow condition M2 directly and may use
// more rows. Requires h == 2^t.
MatrixBuildResult build_matrix(int n, int h, int t, std::uint64_t seed = 1, const Budget& budget = {});

struct M2VerifyResult {
  bool ok = false;
  std::vector<int> counterexample_columns;  // 1-based, empty when ok
};

// Exhaustive: every column set C with |C| <= h is rainbow in some row.
M2VerifyResult verify_m2(const std::vector<std::vector<int>>& matrix, int h, const Budget& budget = {});

struct BuildGadgetResult {
  GapGadget gadget;
  int requested_h = 0;  // before rounding down to a power of two
  std::string matrix_route;
  std::size_t universal_size = 0;
  std::vector<std::string> warnings;
};

// Builds the (k, n, m, h^k, h)-gadget. A requested h that is not a power of
// two is rounded down (weakens the gap, never soundness). The asymptotic
// preconditions of the construction are reported as warnings, not enforced;
// desk-scale soundness rests on the exhaustive verifiers.
BuildGadgetResult build_gadget(int k, int n, int requested_h, std::uint64_t seed = 1, const Budget& budget = {},
                               double epsilon = 0.1);

struct G3VerifyResult {
  bool ok = false;
  std::vector<int> counterexample_b;  // one index per part, 1-based
  int counterexample_group = 0;
};

// Exhaustive: every rainbow B-choice has a common neighbor in every group.
G3VerifyResult verify_g3(const GapGadget& g, const Budget& budget = {});

struct G4VerifyResult {
  bool ok = false;
  std::vector<BVertex> counterexample_x;
  std::vector<AVertex> counterexample_a;  // one per group
};

// Exhaustive: no X with |X| <= h admits per-group vertices that each have at
// least k+1 neighbors in X.
G4VerifyResult verify_g4(const GapGadget& g, const Budget& budget = {});

// True iff k*(1 + ell*ln(universe_size) + ln m) < h: parameters for which a
// greedy solve of the reduced instance would already decide the source
// problem, so such gadgets cannot be cheap to build.
bool check_greedy_infeasibility(int k, double ell, double universe_size, double m, double h);

// File format: "k n m ell h" then the matrix row-major, decimal entries.
std::string serialize_gadget(const GapGadget& g);
GapGadget deserialize_gadget(const std::string& text);

GapGadget load_gadget_file(const std::string& path);

}  // namespace gapcover
