#include "gapcover/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace gapcover {

SetCoverInstance sat_to_setcover(const CnfFormula& cnf, int k, const Budget& budget) {
  if (k < 1) throw Error("sat_to_setcover: k must be >= 1");
  int n = cnf.num_vars;
  int chunk = (n + k - 1) / k;
  if (chunk > 60 || (std::uint64_t{1} << chunk) > budget.size)
    throw BudgetError("sat_to_setcover: needs 2^" + std::to_string(chunk) + " sets per part, over size budget " +
                      std::to_string(budget.size));

  SetCoverInstance inst;
  for (int i = 1; i <= k; ++i) inst.universe_ids.push_back("guard:" + std::to_string(i));
  for (std::size_t c = 1; c <= cnf.clauses.size(); ++c) inst.universe_ids.push_back("clause:" + std::to_string(c));

  std::vector<PartRange> parts;
  for (int i = 0; i < k; ++i) {
    int first_var = i * chunk + 1;                     // 1-based, may exceed n (empty part)
    int width = std::max(0, std::min(n, (i + 1) * chunk) - (first_var - 1));
    parts.push_back({static_cast<int>(inst.set_ids.size()), 1 << width});
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << width); ++a) {
      std::string bits(width, '0');
      for (int b = 0; b < width; ++b)
        if ((a >> b) & 1) bits[b] = '1';
      inst.set_ids.push_back("asg:" + std::to_string(i + 1) + ":" + bits);
      std::vector<std::string> covered;
      covered.push_back(inst.universe_ids[i]);  // the guard
      for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
        bool satisfied = false;
        for (int lit : cnf.clauses[c]) {
          int var = std::abs(lit);
          if (var < first_var || var >= first_var + width) continue;
          bool value = (a >> (var - first_var)) & 1;
          if ((lit > 0) == value) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) covered.push_back(inst.universe_ids[k + c]);
      }
      inst.incidence.push_back(std::move(covered));
    }
  }
  inst.partition = std::move(parts);
  return inst;
}

SetCoverInstance clique_to_setcover(const MultipartiteGraph& g, int k) {
  check_graph(g);
  if (k != g.k) throw Error("clique_to_setcover: k must equal the part count");
  if (k < 2) throw Error("clique_to_setcover: k must be >= 2");

  int nv = g.num_vertices();
  int L = bits_for(static_cast<std::uint64_t>(std::max(nv, 1)));
  // 0-based global index in exactly L bits, most significant bit first.
  std::unordered_map<std::string, int> global_index, part_of;
  {
    int idx = 0;
    for (int p = 0; p < k; ++p)
      for (const auto& v : g.parts[p]) {
        global_index.emplace(v, idx++);
        part_of.emplace(v, p);
      }
  }
  // sigma_i maps the ascending elements of [k] minus {i} onto 1..k-1.
  auto sigma = [&](int i1, int j1) { return j1 < i1 ? j1 : j1 - 1; };

  SetCoverInstance inst;
  for (int i = 1; i <= k; ++i)
    for (int f0 = 1; f0 <= k - 1; ++f0)
      for (int f1 = 1; f1 <= k - 1; ++f1)
        for (int l = 1; l <= L; ++l)
          inst.universe_ids.push_back("u:" + std::to_string(i) + ":" + std::to_string(f0) + "-" + std::to_string(f1) +
                                      ":" + std::to_string(l));
  auto universe_pos = [&](int i1, int f0, int f1, int l1) {
    return ((static_cast<std::size_t>(i1 - 1) * (k - 1) + (f0 - 1)) * (k - 1) + (f1 - 1)) * L + (l1 - 1);
  };

  // Edges grouped by part pair, pairs in lexicographic order, edges within a
  // pair ordered by endpoint indices.
  std::vector<PartRange> parts;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<std::pair<int, int>> pair_edges;  // (global lower-part endpoint, global other)
      for (const auto& [u, v] : g.edges) {
        int pu = part_of.at(u), pv = part_of.at(v);
        if (std::min(pu, pv) != i || std::max(pu, pv) != j) continue;
        const std::string& a = pu == i ? u : v;
        const std::string& b = pu == i ? v : u;
        pair_edges.emplace_back(global_index.at(a), global_index.at(b));
      }
      std::sort(pair_edges.begin(), pair_edges.end());
      parts.push_back({static_cast<int>(inst.set_ids.size()), static_cast<int>(pair_edges.size())});
      for (const auto& [ga, gb] : pair_edges) {
        inst.set_ids.push_back("e:" + std::to_string(ga) + "-" + std::to_string(gb));
        // (i1, f, l) is covered iff f(encode(endpoint in part i1)[l]) equals
        // sigma_{i1}(other part).
        std::vector<bool> hit(inst.universe_ids.size(), false);
        for (auto [p1, other, gidx] : {std::tuple<int, int, int>{i + 1, j + 1, ga}, {j + 1, i + 1, gb}}) {
          for (int l = 1; l <= L; ++l) {
            int bit = (gidx >> (L - l)) & 1;
            int want = sigma(p1, other);
            for (int f0 = 1; f0 <= k - 1; ++f0)
              for (int f1 = 1; f1 <= k - 1; ++f1)
                if ((bit == 0 ? f0 : f1) == want) hit[universe_pos(p1, f0, f1, l)] = true;
          }
        }
        std::vector<std::string> covered;
        for (std::size_t u = 0; u < hit.size(); ++u)
          if (hit[u]) covered.push_back(inst.universe_ids[u]);
        inst.incidence.push_back(std::move(covered));
      }
    }
  }
  inst.partition = std::move(parts);
  return inst;
}

SetCoverInstance vectorsum_to_setcover(const VectorSumInstance& vs, const Budget& budget) {
  check_vector_sum(vs);
  int k = vs.k;

  // D: zero-sum tuples in [-bound, bound]^k, lexicographic.
  std::vector<std::vector<long long>> D;
  std::vector<long long> tuple(k);
  std::function<void(int, long long)> enumerate = [&](int pos, long long partial) {
    if (pos == k - 1) {
      long long last = -partial;
      if (last >= -vs.bound && last <= vs.bound) {
        tuple[pos] = last;
        D.push_back(tuple);
      }
      return;
    }
    for (long long d = -vs.bound; d <= vs.bound; ++d) {
      tuple[pos] = d;
      enumerate(pos + 1, partial + d);
    }
  };
  enumerate(0, 0);

  std::uint64_t words = saturating_pow(static_cast<std::uint64_t>(k), D.size());
  std::uint64_t universe = saturating_mul(words, static_cast<std::uint64_t>(vs.dim));
  if (universe > budget.size)
    throw BudgetError("vectorsum_to_setcover: universe dim*k^|D| = " + std::to_string(universe) +
                      " exceeds size budget " + std::to_string(budget.size));

  SetCoverInstance inst;
  std::vector<PartRange> parts;
  for (int i = 0; i < k; ++i) {
    parts.push_back({static_cast<int>(inst.set_ids.size()), static_cast<int>(vs.lists[i].size())});
    for (std::size_t r = 0; r < vs.lists[i].size(); ++r)
      inst.set_ids.push_back("vec:" + std::to_string(i + 1) + ":" + std::to_string(r + 1));
  }
  inst.partition = std::move(parts);
  inst.incidence.resize(inst.set_ids.size());

  std::vector<int> word(D.size(), 1);  // entries in 1..k, first position most significant
  for (int j = 1; j <= vs.dim; ++j) {
    std::fill(word.begin(), word.end(), 1);
    while (true) {
      std::string id = "vu:" + std::to_string(j) + ":";
      for (std::size_t l = 0; l < word.size(); ++l) id += (l ? "-" : "") + std::to_string(word[l]);
      inst.universe_ids.push_back(id);

      // x in list i covers this element iff some position l has word[l] == i
      // and x[j] == D[l][i].
      int set_index = 0;
      for (int i = 0; i < k; ++i)
        for (std::size_t r = 0; r < vs.lists[i].size(); ++r, ++set_index) {
          bool covers = false;
          for (std::size_t l = 0; l < D.size() && !covers; ++l)
            covers = word[l] == i + 1 && vs.lists[i][r][j - 1] == D[l][i];
          if (covers) inst.incidence[set_index].push_back(id);
        }

      int l = static_cast<int>(word.size()) - 1;
      while (l >= 0 && word[l] == k) word[l--] = 1;
      if (l < 0) break;
      ++word[l];
    }
  }
  return inst;
}

KsumReductionResult ksum_to_vectorsum(const std::vector<std::vector<long long>>& lists, int p, int d,
                                      const Budget& budget) {
  KsumReductionResult res;
  res.k = static_cast<int>(lists.size());
  res.p = p;
  res.d = d;
  if (res.k < 1) throw Error("ksum_to_vectorsum: need at least one list");
  if (d < 1) throw Error("ksum_to_vectorsum: d must be >= 1");
  if (res.k >= p) throw Error("ksum_to_vectorsum: requires k < p (k=" + std::to_string(res.k) +
                              ", p=" + std::to_string(p) + ")");

  long long R = 0;
  std::size_t total = 0;
  for (const auto& list : lists) {
    total += list.size();
    for (long long x : list) R = std::max(R, std::abs(x));
  }
  long long M = 2 * R;
  // p^d >= k*M + 1, overflow-safe.
  std::uint64_t pd = saturating_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(d));
  if (pd < static_cast<std::uint64_t>(res.k) * static_cast<std::uint64_t>(M) + 1)
    throw Error("ksum_to_vectorsum: requires p^d >= k*M+1 (p^d=" + std::to_string(pd) +
                ", k*M+1=" + std::to_string(res.k * M + 1) + ")");
  res.shift = R;
  res.target = static_cast<long long>(res.k) * R;

  std::uint64_t s = saturating_pow(static_cast<std::uint64_t>(res.k + 1), static_cast<std::uint64_t>(d - 1));
  if (saturating_mul(s, saturating_mul(total, static_cast<std::uint64_t>(d))) > budget.work)
    throw BudgetError("ksum_to_vectorsum: s*inputs*d exceeds work budget");

  auto digits = [&](long long value) {
    std::vector<long long> dig(d);
    for (int u = 0; u < d; ++u) {
      dig[u] = value % p;
      value /= p;
    }
    return dig;
  };
  auto t_digits = digits(res.target);

  // One instance per carry vector in [0,k]^(d-1); instance index encodes the
  // carries base (k+1), first carry most significant.
  for (std::uint64_t index = 0; index < s; ++index) {
    std::vector<long long> carry(d + 1, 0);  // carry[0] = carry[d] = 0
    std::uint64_t rest = index;
    for (int u = d - 1; u >= 1; --u) {
      carry[u] = static_cast<long long>(rest % (res.k + 1));
      rest /= (res.k + 1);
    }
    VectorSumInstance vs;
    vs.k = res.k;
    vs.dim = d;
    long long max_abs = 1;
    for (const auto& list : lists) {
      std::vector<std::vector<long long>> out;
      for (long long x : list) {
        auto x_digits = digits(x + R);
        std::vector<long long> vec(d);
        for (int u = 0; u < d; ++u) {
          vec[u] = static_cast<long long>(res.k) * x_digits[u] - t_digits[u] + carry[u] -
                   static_cast<long long>(p) * carry[u + 1];
          max_abs = std::max(max_abs, std::abs(vec[u]));
        }
        out.push_back(std::move(vec));
      }
      vs.lists.push_back(std::move(out));
    }
    vs.bound = max_abs;
    res.instances.push_back(std::move(vs));
  }
  return res;
}

std::vector<std::vector<long long>> parse_ksum_lists(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) throw ParseError("ksum lists: empty file", lineno);
  int k = 0;
  {
    std::istringstream ls(line);
    ls >> k;
    if (ls.fail() || k < 1) throw ParseError("ksum lists: bad list count '" + line + "'", lineno);
  }
  std::vector<std::vector<long long>> lists;
  for (int i = 0; i < k; ++i) {
    ++lineno;
    if (!std::getline(in, line)) throw ParseError("ksum lists: truncated file", lineno);
    std::istringstream ls(line);
    long n = 0;
    ls >> n;
    if (ls.fail() || n < 0) throw ParseError("ksum lists: bad list size", lineno);
    std::vector<long long> list(n);
    for (long j = 0; j < n; ++j) ls >> list[j];
    if (ls.fail()) throw ParseError("ksum lists: bad integer", lineno);
    lists.push_back(std::move(list));
  }
  return lists;
}

std::string write_ksum_lists(const std::vector<std::vector<long long>>& lists) {
  std::ostringstream os;
  os << lists.size() << "\n";
  for (const auto& list : lists) {
    os << list.size();
    for (long long v : list) os << " " << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace gapcover
