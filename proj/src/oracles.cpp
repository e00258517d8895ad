#include "gapcover/oracles.hpp"

#include <algorithm>
#include <set>

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

struct SearchState {
  const CompiledInstance* inst;
  int limit;                     // covers up to this size compete
  std::uint64_t nodes = 0;
  std::uint64_t node_budget = 0;
  int max_set_size = 0;
  std::vector<int> chosen;
  std::vector<int> cover_count;  // per universe element
  int uncovered = 0;
  bool found = false;
  int best_size = 0;
  std::vector<int> best;
};

void take(SearchState& st, int s, int delta) {
  for (int u : st.inst->cover[s]) {
    st.cover_count[u] += delta;
    if (delta > 0 && st.cover_count[u] == 1) --st.uncovered;
    if (delta < 0 && st.cover_count[u] == 0) ++st.uncovered;
  }
}

void search(SearchState& st) {
  if (++st.nodes > st.node_budget)
    throw BudgetError("exact_opt: node budget " + std::to_string(st.node_budget) + " exceeded");
  if (st.uncovered == 0) {
    int size = static_cast<int>(st.chosen.size());
    std::vector<int> sorted = st.chosen;
    std::sort(sorted.begin(), sorted.end());
    if (!st.found || size < st.best_size || (size == st.best_size && sorted < st.best)) {
      st.found = true;
      st.best_size = size;
      st.best = std::move(sorted);
    }
    return;
  }
  int cap = st.found ? std::min(st.limit, st.best_size) : st.limit;
  int lower = static_cast<int>(st.chosen.size()) + (st.uncovered + st.max_set_size - 1) / st.max_set_size;
  if (lower > cap) return;

  int u = 0;
  while (st.cover_count[u] > 0) ++u;
  for (int s = 0; s < st.inst->num_sets; ++s) {
    bool covers_u = std::binary_search(st.inst->cover[s].begin(), st.inst->cover[s].end(), u);
    if (!covers_u) continue;
    st.chosen.push_back(s);
    take(st, s, +1);
    search(st);
    take(st, s, -1);
    st.chosen.pop_back();
  }
}

OptResult exact_opt_compiled(const CompiledInstance& c, int bound, const Budget& budget) {
  OptResult res;
  bound = std::min(bound, c.num_sets);
  if (c.num_universe == 0) {
    res.status = OptStatus::kFound;
    res.opt = 0;
    return res;
  }

  std::vector<bool> coverable(c.num_universe, false);
  int max_set_size = 0;
  for (const auto& cov : c.cover) {
    max_set_size = std::max(max_set_size, static_cast<int>(cov.size()));
    for (int u : cov) coverable[u] = true;
  }
  for (bool b : coverable)
    if (!b) {
      res.status = OptStatus::kInfeasible;
      return res;
    }
  if (bound <= 0) {
    res.status = OptStatus::kExceedsBound;
    return res;
  }

  SearchState st;
  st.inst = &c;
  st.limit = bound;
  st.node_budget = budget.work;
  st.max_set_size = max_set_size;
  st.cover_count.assign(c.num_universe, 0);
  st.uncovered = c.num_universe;
  search(st);
  if (!st.found) {
    res.status = OptStatus::kExceedsBound;
    return res;
  }
  res.status = OptStatus::kFound;
  res.opt = st.best_size;
  res.witness = st.best;
  return res;
}

}  // namespace

OptResult exact_opt(const SetCoverInstance& inst, int bound, const Budget& budget) {
  return exact_opt_compiled(compile_instance(inst), bound, budget);
}

OptResult exhaustive_opt(const SetCoverInstance& inst, int bound, const Budget& budget) {
  auto c = compile_instance(inst);
  OptResult res;
  bound = std::min(bound, c.num_sets);
  if (c.num_universe == 0) {
    res.status = OptStatus::kFound;
    res.opt = 0;
    return res;
  }
  std::uint64_t work = 0;
  for (int size = 0; size <= bound; ++size)
    work = saturating_add(work, saturating_mul(binomial(c.num_sets, size), static_cast<std::uint64_t>(size) + 1));
  if (work > budget.work)
    throw BudgetError("exhaustive_opt: " + std::to_string(work) + " subset checks exceed work budget");

  std::vector<int> count(c.num_universe);
  for (int size = 1; size <= bound; ++size) {
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    do {
      std::fill(count.begin(), count.end(), 0);
      int covered = 0;
      for (int s : combo)
        for (int u : c.cover[s])
          if (count[u]++ == 0) ++covered;
      if (covered == c.num_universe) {
        res.status = OptStatus::kFound;
        res.opt = size;
        res.witness = combo;
        return res;
      }
    } while (next_combination(combo, c.num_sets));
  }
  bool feasible = true;
  {
    std::fill(count.begin(), count.end(), 0);
    for (const auto& cov : c.cover)
      for (int u : cov) count[u] = 1;
    for (int u = 0; u < c.num_universe; ++u) feasible = feasible && count[u] == 1;
  }
  res.status = feasible ? OptStatus::kExceedsBound : OptStatus::kInfeasible;
  return res;
}

OptResult exact_opt_implicit(const HypercubeReduction& red, int bound, const Budget& budget) {
  OptResult res;
  int num_sets = red.num_sets();
  bound = std::min(bound, num_sets);
  std::uint64_t cover_cost = saturating_mul(static_cast<std::uint64_t>(red.gadget().m),
                                            static_cast<std::uint64_t>(red.gadget().ell) *
                                                std::max(1, red.compiled_source().num_universe / 32));
  std::uint64_t work = 0;
  for (int size = 0; size <= bound; ++size)
    work = saturating_add(work, saturating_mul(binomial(num_sets, size), cover_cost));
  if (work > budget.work)
    throw BudgetError("exact_opt_implicit: about " + std::to_string(work) + " checks exceed work budget " +
                      std::to_string(budget.work));

  if (red.covers({})) {
    res.status = OptStatus::kFound;
    res.opt = 0;
    return res;
  }
  for (int size = 1; size <= bound; ++size) {
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    do {
      if (red.covers(combo)) {
        res.status = OptStatus::kFound;
        res.opt = size;
        res.witness = combo;
        return res;
      }
    } while (next_combination(combo, num_sets));
  }
  // Distinguish the infeasible case: even the full family fails to cover.
  std::vector<int> all(num_sets);
  for (int s = 0; s < num_sets; ++s) all[s] = s;
  res.status = red.covers(all) ? OptStatus::kExceedsBound : OptStatus::kInfeasible;
  return res;
}

GreedyResult greedy_cover(const SetCoverInstance& inst) {
  auto c = compile_instance(inst);
  GreedyResult res;
  std::vector<bool> covered(c.num_universe, false);
  int remaining = c.num_universe;
  while (remaining > 0) {
    int best = -1, best_gain = 0;
    for (int s = 0; s < c.num_sets; ++s) {
      int gain = 0;
      for (int u : c.cover[s]) gain += !covered[u];
      if (gain > best_gain) {  // lowest index wins ties
        best_gain = gain;
        best = s;
      }
    }
    if (best < 0) {
      int u = 0;
      while (covered[u]) ++u;
      throw Error("greedy_cover: element '" + inst.universe_ids[u] + "' is covered by no set");
    }
    res.witness.push_back(best);
    for (int u : c.cover[best])
      if (!covered[u]) {
        covered[u] = true;
        --remaining;
      }
  }
  res.size = static_cast<int>(res.witness.size());
  return res;
}

SatWitness brute_sat(const CnfFormula& cnf, const Budget& budget) {
  if (cnf.num_vars > 62) throw BudgetError("brute_sat: too many variables");
  std::uint64_t space = std::uint64_t{1} << cnf.num_vars;
  if (saturating_mul(space, std::max<std::uint64_t>(1, cnf.clauses.size())) > budget.work)
    throw BudgetError("brute_sat: 2^n * clauses exceeds work budget");
  for (std::uint64_t a = 0; a < space; ++a) {
    bool ok = true;
    for (const auto& clause : cnf.clauses) {
      bool sat = false;
      for (int lit : clause) {
        bool value = (a >> (std::abs(lit) - 1)) & 1;
        if ((lit > 0) == value) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) {
      SatWitness w;
      w.satisfiable = true;
      for (int v = 0; v < cnf.num_vars; ++v) w.assignment.push_back((a >> v) & 1);
      return w;
    }
  }
  return {};
}

CliqueWitness brute_clique(const MultipartiteGraph& g, int k, const Budget& budget) {
  check_graph(g);
  if (k != g.k) throw Error("brute_clique: k=" + std::to_string(k) + " must equal the part count " + std::to_string(g.k));
  for (const auto& part : g.parts)
    if (part.empty()) return {};
  std::uint64_t space = 1;
  for (const auto& part : g.parts) space = saturating_mul(space, part.size());
  if (saturating_mul(space, static_cast<std::uint64_t>(k) * k) > budget.work)
    throw BudgetError("brute_clique: search space exceeds work budget");

  std::set<std::pair<std::string, std::string>> adj;
  for (const auto& [u, v] : g.edges) adj.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
  auto connected = [&](const std::string& u, const std::string& v) {
    return adj.count(u < v ? std::make_pair(u, v) : std::make_pair(v, u)) > 0;
  };

  std::vector<int> pick(g.k, 0);
  while (true) {
    bool clique = true;
    for (int i = 0; i < g.k && clique; ++i)
      for (int j = i + 1; j < g.k && clique; ++j)
        clique = connected(g.parts[i][pick[i]], g.parts[j][pick[j]]);
    if (clique) {
      CliqueWitness w;
      w.exists = true;
      for (int i = 0; i < g.k; ++i) w.vertices.push_back(g.parts[i][pick[i]]);
      return w;
    }
    int i = g.k - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(g.parts[i].size())) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return {};
}

VectorSumWitness brute_vector_sum(const VectorSumInstance& vs, const Budget& budget) {
  check_vector_sum(vs);
  for (const auto& list : vs.lists)
    if (list.empty()) return {};
  std::uint64_t space = 1;
  for (const auto& list : vs.lists) space = saturating_mul(space, list.size());
  if (saturating_mul(space, static_cast<std::uint64_t>(vs.k) * vs.dim) > budget.work)
    throw BudgetError("brute_vector_sum: search space exceeds work budget");

  std::vector<int> pick(vs.k, 0);
  std::vector<long long> sum(vs.dim);
  while (true) {
    std::fill(sum.begin(), sum.end(), 0);
    for (int i = 0; i < vs.k; ++i)
      for (int j = 0; j < vs.dim; ++j) sum[j] += vs.lists[i][pick[i]][j];
    if (std::all_of(sum.begin(), sum.end(), [](long long v) { return v == 0; })) {
      VectorSumWitness w;
      w.exists = true;
      w.indices = pick;
      return w;
    }
    int i = vs.k - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(vs.lists[i].size())) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return {};
}

KsumWitness brute_ksum(const std::vector<std::vector<long long>>& lists, const Budget& budget) {
  for (const auto& list : lists)
    if (list.empty()) return {};
  std::uint64_t space = 1;
  for (const auto& list : lists) space = saturating_mul(space, list.size());
  if (saturating_mul(space, lists.size()) > budget.work)
    throw BudgetError("brute_ksum: search space exceeds work budget");

  std::vector<int> pick(lists.size(), 0);
  while (true) {
    long long sum = 0;
    for (std::size_t i = 0; i < lists.size(); ++i) sum += lists[i][pick[i]];
    if (sum == 0) {
      KsumWitness w;
      w.exists = true;
      w.indices = pick;
      return w;
    }
    int i = static_cast<int>(lists.size()) - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(lists[i].size())) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return {};
}

}  // namespace gapcover
