#include "gapcover/gadget.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gapcover/instance.hpp"
#include "gapcover/universal.hpp"

namespace gapcover {

namespace {

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

bool rainbow_on(const std::vector<int>& row, const std::vector<int>& columns0, std::vector<int>& stamp, int& gen) {
  ++gen;
  for (int c : columns0) {
    if (stamp[row[c]] == gen) return false;
    stamp[row[c]] = gen;
  }
  return true;
}

// Greedy row family targeting M2 directly: every column set of size <= h
// must be rainbow in some row. Used when a genuine universal set cannot be
// squeezed into n*t rows.
std::vector<std::vector<int>> direct_m2_rows(int n, int h, std::uint64_t seed, const Budget& budget) {
  int max_c = std::min(h, n);
  // One constraint per column subset of size 2..max_c (singletons are
  // trivially rainbow).
  std::vector<std::vector<int>> subsets;
  std::uint64_t estimated = 0;
  for (int c = 2; c <= max_c; ++c) estimated = saturating_add(estimated, binomial(n, c));
  if (estimated > budget.work)
    throw BudgetError("build_matrix: M2 constraint count " + std::to_string(estimated) + " exceeds work budget");
  for (int c = 2; c <= max_c; ++c) {
    auto combo = first_combination(c);
    do {
      subsets.push_back(combo);
    } while (next_combination(combo, n));
  }

  std::vector<int> witness_count(subsets.size(), 0);
  std::size_t uncovered = subsets.size();
  std::vector<std::vector<int>> rows;
  std::vector<int> stamp(h + 1, 0);
  int gen = 0;

  SplitMix64 rng(seed);
  constexpr int kBatch = 64;
  auto gains = [&](const std::vector<int>& row) {
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (witness_count[i] == 0 && rainbow_on(row, subsets[i], stamp, gen)) ++g;
    return g;
  };
  auto add_row = [&](std::vector<int> row) {
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (rainbow_on(row, subsets[i], stamp, gen))
        if (witness_count[i]++ == 0) --uncovered;
    rows.push_back(std::move(row));
  };

  while (uncovered > 0) {
    std::vector<int> best;
    std::uint64_t best_gain = 0;
    for (int c = 0; c < kBatch; ++c) {
      std::vector<int> candidate(n);
      for (int j = 0; j < n; ++j) candidate[j] = 1 + static_cast<int>(rng.below(h));
      std::uint64_t g = gains(candidate);
      if (g > best_gain) {
        best_gain = g;
        best = std::move(candidate);
      }
    }
    if (best_gain == 0) {
      // Stamp the first uncovered subset with distinct values outright.
      std::size_t i = 0;
      while (witness_count[i] != 0) ++i;
      best.assign(n, 1);
      int v = 1;
      for (int c : subsets[i]) best[c] = v++;
    }
    add_row(std::move(best));
  }
  return rows;
}

}  // namespace

std::vector<int> labels_from_rank(const GapGadget& g, long long rank) {
  std::vector<int> labels(g.k);
  for (int j = g.k - 1; j >= 0; --j) {
    labels[j] = 1 + static_cast<int>(rank % g.h);
    rank /= g.h;
  }
  return labels;
}

long long rank_from_labels(const GapGadget& g, const std::vector<int>& labels) {
  long long rank = 0;
  for (int j = 0; j < g.k; ++j) rank = rank * g.h + (labels[j] - 1);
  return rank;
}

bool adjacent(const GapGadget& g, const AVertex& a, const BVertex& b) {
  if (a.group < 1 || a.group > g.m) throw Error("adjacent: group " + std::to_string(a.group) + " out of range");
  if (static_cast<int>(a.labels.size()) != g.k) throw Error("adjacent: label vector has wrong length");
  for (int v : a.labels)
    if (v < 1 || v > g.h) throw Error("adjacent: label " + std::to_string(v) + " out of range");
  if (b.part < 1 || b.part > g.k) throw Error("adjacent: part " + std::to_string(b.part) + " out of range");
  if (b.index < 1 || b.index > g.n) throw Error("adjacent: index " + std::to_string(b.index) + " out of range");
  return g.matrix[a.group - 1][b.index - 1] == a.labels[b.part - 1];
}

MatrixBuildResult build_matrix(int n, int h, int t, std::uint64_t seed, const Budget& budget) {
  if (n < 1) throw Error("build_matrix: n must be >= 1");
  if (t < 1 || h != (1 << t)) throw Error("build_matrix: h must be 2^t");
  MatrixBuildResult res;
  res.target_rows = n * t;
  int m = res.target_rows;
  int K = h * t;

  // A genuine (m,K)-universal set needs at least 2^K strings; only try that
  // route when it can fit in m rows and the builder's bookkeeping fits the
  // budget.
  bool universal_feasible = K <= m && (std::uint64_t{1} << K) <= static_cast<std::uint64_t>(m) &&
                            saturating_mul(binomial(m, K), std::uint64_t{1} << K) <= budget.work;
  if (universal_feasible) {
    UniversalSet us;
    try {
      us = build_universal(m, K, seed, budget);
    } catch (const BudgetError&) {
      universal_feasible = false;
    }
    if (universal_feasible && us.strings.size() <= static_cast<std::size_t>(m)) {
      res.route = "universal";
      res.universal_size = us.strings.size();
      for (int r = 0; r < m; ++r) {
        const BitString& s = us.strings[r % us.strings.size()];
        std::vector<int> row(n);
        for (int c = 0; c < n; ++c) {
          int value = 0;
          for (int b = 0; b < t; ++b) value |= static_cast<int>(s.bit(c * t + b + 1)) << b;
          row[c] = 1 + value;
        }
        res.matrix.push_back(std::move(row));
      }
      res.rows = m;
      return res;
    }
  }

  res.route = "direct-m2";
  res.matrix = direct_m2_rows(n, h, seed, budget);
  if (res.matrix.empty()) {
    // No nontrivial constraints (n == 1); emit one seeded row.
    SplitMix64 rng(seed);
    std::vector<int> row(n);
    for (int j = 0; j < n; ++j) row[j] = 1 + static_cast<int>(rng.below(h));
    res.matrix.push_back(std::move(row));
  }
  // Cycle-repeat up to the n*t row count of the universal-set recipe;
  // duplicate rows change none of M1/M2/G3/G4.
  std::size_t base = res.matrix.size();
  while (static_cast<int>(res.matrix.size()) < m) res.matrix.push_back(res.matrix[res.matrix.size() % base]);
  res.rows = static_cast<int>(res.matrix.size());
  return res;
}

M2VerifyResult verify_m2(const std::vector<std::vector<int>>& matrix, int h, const Budget& budget) {
  if (matrix.empty()) throw Error("verify_m2: empty matrix");
  int m = static_cast<int>(matrix.size());
  int n = static_cast<int>(matrix[0].size());
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n) throw Error("verify_m2: ragged matrix");

  int max_c = std::min(h, n);
  std::uint64_t work = 0;
  for (int c = 1; c <= max_c; ++c)
    work = saturating_add(work, saturating_mul(binomial(n, c), static_cast<std::uint64_t>(m) * c));
  if (work > budget.work)
    throw BudgetError("verify_m2: estimated " + std::to_string(work) + " checks exceed work budget " +
                      std::to_string(budget.work));

  std::vector<int> stamp(h + 1, 0);
  int gen = 0;
  for (int c = 1; c <= max_c; ++c) {
    auto combo = first_combination(c);
    do {
      bool found = false;
      for (int r = 0; r < m && !found; ++r) found = rainbow_on(matrix[r], combo, stamp, gen);
      if (!found) {
        M2VerifyResult res;
        res.ok = false;
        for (int col : combo) res.counterexample_columns.push_back(col + 1);
        return res;
      }
    } while (next_combination(combo, n));
  }
  return {true, {}};
}

BuildGadgetResult build_gadget(int k, int n, int requested_h, std::uint64_t seed, const Budget& budget,
                               double epsilon) {
  if (k < 1) throw Error("build_gadget: k must be >= 1");
  if (n < 1) throw Error("build_gadget: n must be >= 1");
  if (requested_h < 2) throw Error("build_gadget: h must be at least 2");

  BuildGadgetResult res;
  res.requested_h = requested_h;
  int h = static_cast<int>(pow2_floor(static_cast<std::uint64_t>(requested_h)));
  int t = log2_floor(static_cast<std::uint64_t>(h));
  if (h != requested_h)
    res.warnings.push_back("requested h=" + std::to_string(requested_h) + " rounded down to " + std::to_string(h));

  if (n >= 4) {
    double log_n = std::log2(static_cast<double>(n));
    double loglog_n = std::log2(log_n);
    if (k * loglog_n > log_n)
      res.warnings.push_back("outside construction regime: k*loglog(n) > log(n)");
    if (loglog_n > 0 && h > log_n / ((2.0 + epsilon) * loglog_n))
      res.warnings.push_back("outside construction regime: h > log(n)/((2+eps)*loglog(n)) with eps=" +
                             std::to_string(epsilon));
  } else {
    res.warnings.push_back("n too small for the asymptotic regime checks");
  }

  std::uint64_t ell = saturating_pow(static_cast<std::uint64_t>(h), static_cast<std::uint64_t>(k));
  if (ell == UINT64_MAX || ell > (std::uint64_t{1} << 62)) throw Error("build_gadget: ell = h^k overflows");

  auto mat = build_matrix(n, h, t, seed, budget);
  res.matrix_route = mat.route;
  res.universal_size = mat.universal_size;

  GapGadget g;
  g.k = k;
  g.n = n;
  g.m = mat.rows;
  g.h = h;
  g.ell = static_cast<long long>(ell);
  g.matrix = std::move(mat.matrix);
  // M1 is asserted on every construction.
  for (const auto& row : g.matrix)
    for (int v : row)
      if (v < 1 || v > h) throw Error("build_gadget: matrix entry " + std::to_string(v) + " outside [h]");
  res.gadget = std::move(g);
  return res;
}

G3VerifyResult verify_g3(const GapGadget& g, const Budget& budget) {
  std::uint64_t choices = saturating_pow(static_cast<std::uint64_t>(g.n), static_cast<std::uint64_t>(g.k));
  std::uint64_t work = saturating_mul(choices, saturating_mul(static_cast<std::uint64_t>(g.m),
                                                              static_cast<std::uint64_t>(g.ell) * g.k));
  if (work > budget.work)
    throw BudgetError("verify_g3: estimated " + std::to_string(work) + " checks exceed work budget " +
                      std::to_string(budget.work));

  std::vector<int> b(g.k, 1);  // one index per part
  while (true) {
    for (int i = 0; i < g.m; ++i) {
      bool found = false;
      for (long long rank = 0; rank < g.ell && !found; ++rank) {
        auto labels = labels_from_rank(g, rank);
        bool all = true;
        for (int j = 0; j < g.k && all; ++j) all = g.matrix[i][b[j] - 1] == labels[j];
        found = all;
      }
      if (!found) {
        G3VerifyResult res;
        res.ok = false;
        res.counterexample_b = b;
        res.counterexample_group = i + 1;
        return res;
      }
    }
    int j = g.k - 1;
    while (j >= 0 && b[j] == g.n) b[j--] = 1;
    if (j < 0) break;
    ++b[j];
  }
  return {true, {}, 0};
}

G4VerifyResult verify_g4(const GapGadget& g, const Budget& budget) {
  int kn = g.k * g.n;
  int max_x = std::min(g.h, kn);
  std::uint64_t work = 0;
  for (int x = 1; x <= max_x; ++x)
    work = saturating_add(
        work, saturating_mul(binomial(kn, x), static_cast<std::uint64_t>(g.m) * (x + g.k * g.h)));
  if (work > budget.work)
    throw BudgetError("verify_g4: estimated " + std::to_string(work) + " checks exceed work budget " +
                      std::to_string(budget.work));

  // B-vertex with linear id v is (part v/n + 1, index v%n + 1).
  std::vector<std::vector<int>> count(g.k, std::vector<int>(g.h + 1, 0));
  for (int x = 1; x <= max_x; ++x) {
    auto combo = first_combination(x);
    do {
      bool violated = true;
      std::vector<AVertex> witnesses;
      for (int i = 0; i < g.m && violated; ++i) {
        for (auto& row : count) std::fill(row.begin(), row.end(), 0);
        for (int v : combo) ++count[v / g.n][g.matrix[i][v % g.n]];
        // Neighbor counts are separable per part, so the best a in this
        // group takes the per-part argmax label.
        int best_total = 0;
        AVertex a;
        a.group = i + 1;
        a.labels.assign(g.k, 1);
        for (int j = 0; j < g.k; ++j) {
          int best_v = 1;
          for (int v = 2; v <= g.h; ++v)
            if (count[j][v] > count[j][best_v]) best_v = v;
          a.labels[j] = best_v;
          best_total += count[j][best_v];
        }
        if (best_total >= g.k + 1)
          witnesses.push_back(std::move(a));
        else
          violated = false;
      }
      if (violated) {
        G4VerifyResult res;
        res.ok = false;
        for (int v : combo) res.counterexample_x.push_back({v / g.n + 1, v % g.n + 1});
        res.counterexample_a = std::move(witnesses);
        return res;
      }
    } while (next_combination(combo, kn));
  }
  return {true, {}, {}};
}

bool check_greedy_infeasibility(int k, double ell, double universe_size, double m, double h) {
  return k * (1.0 + ell * std::log(universe_size) + std::log(m)) < h;
}

std::string serialize_gadget(const GapGadget& g) {
  std::ostringstream os;
  os << g.k << " " << g.n << " " << g.m << " " << g.ell << " " << g.h << "\n";
  for (const auto& row : g.matrix) {
    for (int c = 0; c < g.n; ++c) os << row[c] << (c + 1 < g.n ? " " : "");
    os << "\n";
  }
  return os.str();
}

GapGadget deserialize_gadget(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) throw ParseError("gadget: empty file", lineno);
  std::istringstream header(line);
  GapGadget g;
  header >> g.k >> g.n >> g.m >> g.ell >> g.h;
  if (header.fail() || g.k < 1 || g.n < 1 || g.m < 1 || g.h < 1)
    throw ParseError("gadget: malformed header '" + line + "'", lineno);
  if (g.ell != static_cast<long long>(saturating_pow(g.h, g.k)))
    throw ParseError("gadget: ell != h^k is not supported", lineno);
  for (int r = 0; r < g.m; ++r) {
    ++lineno;
    if (!std::getline(in, line)) throw ParseError("gadget: truncated matrix", lineno);
    std::istringstream ls(line);
    std::vector<int> row(g.n);
    for (int c = 0; c < g.n; ++c) ls >> row[c];
    if (ls.fail()) throw ParseError("gadget: bad matrix row '" + line + "'", lineno);
    for (int v : row)
      if (v < 1 || v > g.h) throw ParseError("gadget: entry " + std::to_string(v) + " violates M1", lineno);
    g.matrix.push_back(std::move(row));
  }
  return g;
}

GapGadget load_gadget_file(const std::string& path) { return deserialize_gadget(read_file(path)); }

}  // namespace gapcover
