#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gapcover/cnf.hpp"
#include "gapcover/graph.hpp"
#include "gapcover/instance.hpp"
#include "gapcover/vector_sum.hpp"

namespace gapcover::testing {

// Random feasible instance: every universe element gets at least one set.
inline SetCoverInstance random_instance(SplitMix64& rng, int max_sets, int max_universe) {
  SetCoverInstance inst;
  int num_sets = 1 + static_cast<int>(rng.below(max_sets));
  int num_universe = 1 + static_cast<int>(rng.below(max_universe));
  for (int u = 0; u < num_universe; ++u) inst.universe_ids.push_back("u" + std::to_string(u + 1));
  for (int s = 0; s < num_sets; ++s) {
    inst.set_ids.push_back("s" + std::to_string(s + 1));
    std::vector<std::string> cov;
    for (int u = 0; u < num_universe; ++u)
      if (rng.below(2) == 0) cov.push_back(inst.universe_ids[u]);
    inst.incidence.push_back(std::move(cov));
  }
  for (int u = 0; u < num_universe; ++u) {
    int s = static_cast<int>(rng.below(num_sets));
    auto& cov = inst.incidence[s];
    bool present = false;
    for (const auto& id : cov) present = present || id == inst.universe_ids[u];
    if (!present) {
      cov.push_back(inst.universe_ids[u]);
      // keep incidence sorted by universe index
      std::sort(cov.begin(), cov.end(), [&](const std::string& a, const std::string& b) {
        auto pos = [&](const std::string& x) {
          for (std::size_t i = 0; i < inst.universe_ids.size(); ++i)
            if (inst.universe_ids[i] == x) return i;
          return inst.universe_ids.size();
        };
        return pos(a) < pos(b);
      });
    }
  }
  return inst;
}

// k equal parts of the given width; incidence random, optionally with a
// planted rainbow cover (one set per part jointly covering everything).
inline SetCoverInstance random_partitioned(SplitMix64& rng, int k, int width, int universe, bool plant_rainbow) {
  SetCoverInstance inst;
  for (int u = 0; u < universe; ++u) inst.universe_ids.push_back("u" + std::to_string(u + 1));
  std::vector<PartRange> parts;
  for (int p = 0; p < k; ++p) {
    parts.push_back({p * width, width});
    for (int i = 0; i < width; ++i) {
      inst.set_ids.push_back("s" + std::to_string(p + 1) + "_" + std::to_string(i + 1));
      std::vector<std::string> cov;
      for (int u = 0; u < universe; ++u)
        if (rng.below(3) == 0) cov.push_back(inst.universe_ids[u]);
      inst.incidence.push_back(std::move(cov));
    }
  }
  inst.partition = std::move(parts);
  if (plant_rainbow && universe > 0) {
    // Split the universe among one chosen set per part.
    std::vector<int> chosen;
    for (int p = 0; p < k; ++p) chosen.push_back(p * width + static_cast<int>(rng.below(width)));
    std::vector<std::vector<std::string>> planted(k);
    for (int u = 0; u < universe; ++u) planted[rng.below(k)].push_back(inst.universe_ids[u]);
    for (int p = 0; p < k; ++p) {
      std::vector<bool> mask(universe, false);
      for (int u = 0; u < universe; ++u)
        for (const auto& id : inst.incidence[chosen[p]])
          if (id == inst.universe_ids[u]) mask[u] = true;
      for (const auto& id : planted[p])
        for (int u = 0; u < universe; ++u)
          if (id == inst.universe_ids[u]) mask[u] = true;
      std::vector<std::string> merged;
      for (int u = 0; u < universe; ++u)
        if (mask[u]) merged.push_back(inst.universe_ids[u]);
      inst.incidence[chosen[p]] = std::move(merged);
    }
  }
  return inst;
}

inline CnfFormula random_cnf(SplitMix64& rng, int max_vars, int max_clauses) {
  CnfFormula cnf;
  cnf.num_vars = 1 + static_cast<int>(rng.below(max_vars));
  int clauses = static_cast<int>(rng.below(max_clauses + 1));
  for (int c = 0; c < clauses; ++c) {
    std::vector<int> clause;
    int len = 1 + static_cast<int>(rng.below(3));
    for (int l = 0; l < len; ++l) {
      int var = 1 + static_cast<int>(rng.below(cnf.num_vars));
      clause.push_back(rng.below(2) ? var : -var);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

inline MultipartiteGraph random_tripartite(SplitMix64& rng, int max_vertices) {
  MultipartiteGraph g;
  g.k = 3;
  g.parts.resize(3);
  int nv = 3 + static_cast<int>(rng.below(std::max(1, max_vertices - 2)));
  for (int v = 0; v < nv; ++v) g.parts[v % 3].push_back("v" + std::to_string(v + 1));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (const auto& u : g.parts[i])
        for (const auto& v : g.parts[j])
          if (rng.below(2) == 0) g.edges.emplace_back(u, v);
  return g;
}

}  // namespace gapcover::testing
