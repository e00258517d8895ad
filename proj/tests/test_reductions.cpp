#include <set>

#include "doctest.h"
#include "gapcover/oracles.hpp"
#include "gapcover/reductions.hpp"
#include "helpers.hpp"

using namespace gapcover;

TEST_CASE("sat front-end: single positive unit clause, k=1") {
  auto inst = sat_to_setcover(parse_dimacs("p cnf 1 1\n1 0\n"), 1);
  CHECK(inst.set_ids.size() == 2);  // both assignments to x1
  CHECK(inst.universe_ids.size() == 2);  // guard + clause
  auto opt = exact_opt(inst, 2);
  REQUIRE(opt.status == OptStatus::kFound);
  CHECK(opt.opt == 1);
}

TEST_CASE("sat front-end: contradiction forces opt > k") {
  auto inst = sat_to_setcover(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n"), 1);
  CHECK(exact_opt(inst, 1).status == OptStatus::kExceedsBound);
}

TEST_CASE("sat front-end universe is guards plus clauses") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    auto cnf = testing::random_cnf(rng, 4, 5);
    for (int k : {1, 2}) {
      auto inst = sat_to_setcover(cnf, k);
      CHECK(inst.universe_ids.size() == cnf.clauses.size() + k);
      CHECK(inst.partition->size() == static_cast<std::size_t>(k));
    }
  }
}

TEST_CASE("sat front-end matches brute_sat with rainbow witnesses") {
  SplitMix64 rng(56);
  for (int trial = 0; trial < 40; ++trial) {
    auto cnf = testing::random_cnf(rng, 4, 4);
    for (int k : {1, 2}) {
      auto inst = sat_to_setcover(cnf, k);
      auto c = compile_instance(pad_partition(inst));
      auto opt = exact_opt(pad_partition(inst), k);
      bool sat = brute_sat(cnf).satisfiable;
      CHECK(sat == opt.within(k));
      if (opt.within(k)) {
        std::set<int> parts;
        for (int s : opt.witness) parts.insert(c.part_of_set[s]);
        CHECK(parts.size() == static_cast<std::size_t>(k));  // rainbow
      }
    }
  }
}

TEST_CASE("clique front-end on the triangle") {
  MultipartiteGraph tri;
  tri.k = 3;
  tri.parts = {{"a"}, {"b"}, {"c"}};
  tri.edges = {{"a", "b"}, {"b", "c"}, {"a", "c"}};
  auto inst = clique_to_setcover(tri, 3);
  CHECK(inst.partition->size() == 3);  // C(3,2) part pairs
  // |U| = k(k-1)^2 * ceil(log2 n): 3 vertices -> L = 2
  CHECK(inst.universe_ids.size() == 3u * 4u * 2u);
  auto opt = exact_opt(inst, 3);
  REQUIRE(opt.within(3));
  CHECK(opt.opt == 3);
}

TEST_CASE("clique front-end: removing an edge kills all 3-covers") {
  MultipartiteGraph g;
  g.k = 3;
  g.parts = {{"a"}, {"b"}, {"c"}};
  g.edges = {{"a", "b"}, {"b", "c"}};
  auto inst = clique_to_setcover(g, 3);
  CHECK(exact_opt(inst, 3).status != OptStatus::kFound);
}

TEST_CASE("clique front-end agrees with brute_clique on random tripartite graphs") {
  SplitMix64 rng(57);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testing::random_tripartite(rng, 8);
    auto inst = clique_to_setcover(g, 3);
    bool clique = brute_clique(g, 3).exists;
    CHECK(clique == exact_opt(inst, 3).within(3));
  }
}

TEST_CASE("vector-sum front-end: the frozen D for k=2, bound=1") {
  VectorSumInstance vs;
  vs.k = 2;
  vs.dim = 2;
  vs.bound = 1;
  vs.lists = {{{1, 0}}, {{-1, 0}}};
  auto inst = vectorsum_to_setcover(vs);
  // D = {(-1,1),(0,0),(1,-1)}, so each U_j has 2^3 = 8 elements
  CHECK(inst.universe_ids.size() == 2u * 8u);
  CHECK(inst.universe_ids[0] == "vu:1:1-1-1");
  // planted zero-sum pair covers everything
  auto opt = exact_opt(inst, 2);
  REQUIRE(opt.within(2));
  CHECK(opt.opt == 2);
}

TEST_CASE("vector-sum front-end: no zero-sum tuple means opt > k") {
  VectorSumInstance vs;
  vs.k = 2;
  vs.dim = 1;
  vs.bound = 1;
  vs.lists = {{{1}, {0}}, {{1}, {1}}};
  REQUIRE_FALSE(brute_vector_sum(vs).exists);
  auto inst = vectorsum_to_setcover(vs);
  CHECK(exact_opt(inst, 2).status != OptStatus::kFound);
}

TEST_CASE("ksum mapping: d=1 degenerates to plain k-SUM") {
  auto res = ksum_to_vectorsum({{1, 2}, {-1, -3}}, 20, 1);
  CHECK(res.instances.size() == 1);  // s = (k+1)^0
  CHECK(brute_vector_sum(res.instances[0]).exists == brute_ksum({{1, 2}, {-1, -3}}).exists);
}

TEST_CASE("ksum mapping: biconditional on small instances, both sides brute-forced") {
  auto lists = std::vector<std::vector<long long>>{{1, 2}, {-1, 3}};
  for (auto [p, d] : {std::pair<int, int>{3, 3}, {4, 2}, {13, 1}}) {
    auto res = ksum_to_vectorsum(lists, p, d);
    CHECK(res.instances.size() == saturating_pow(3, d - 1));  // (k+1)^(d-1)
    bool any = false;
    for (const auto& vs : res.instances) any = any || brute_vector_sum(vs).exists;
    CHECK(any == brute_ksum(lists).exists);
  }
}

TEST_CASE("ksum mapping: randomized biconditional") {
  SplitMix64 rng(58);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<long long>> lists(2);
    for (auto& list : lists) {
      int n = 1 + static_cast<int>(rng.below(4));
      for (int i = 0; i < n; ++i) list.push_back(static_cast<long long>(rng.below(17)) - 8);
    }
    auto res = ksum_to_vectorsum(lists, 5, 3);
    bool any = false;
    for (const auto& vs : res.instances) any = any || brute_vector_sum(vs).exists;
    CHECK(any == brute_ksum(lists).exists);
  }
}

TEST_CASE("ksum mapping rejects bad parameters by name") {
  CHECK_THROWS_WITH_AS(ksum_to_vectorsum({{1}, {2}}, 2, 2), doctest::Contains("k < p"), Error);
  CHECK_THROWS_WITH_AS(ksum_to_vectorsum({{100}, {50}}, 3, 2), doctest::Contains("p^d"), Error);
}

TEST_CASE("source certificates translate to rainbow covers, by direct membership") {
  // No solver: build the cover straight from the witness and check coverage.
  auto covers_all = [](const SetCoverInstance& inst, const std::vector<std::string>& chosen_ids) {
    auto c = compile_instance(inst);
    std::set<int> covered;
    for (const auto& id : chosen_ids)
      for (int u : c.cover[c.set_index.at(id)]) covered.insert(u);
    return static_cast<int>(covered.size()) == c.num_universe;
  };

  SUBCASE("sat: the satisfying assignment restricted per part") {
    auto cnf = parse_dimacs("p cnf 3 2\n1 -2 0\n3 0\n");
    auto w = brute_sat(cnf);
    REQUIRE(w.satisfiable);
    for (int k : {1, 2}) {
      auto inst = sat_to_setcover(cnf, k);
      int chunk = (cnf.num_vars + k - 1) / k;
      std::vector<std::string> ids;
      for (int i = 0; i < k; ++i) {
        int first = i * chunk;
        int width = std::max(0, std::min(cnf.num_vars, (i + 1) * chunk) - first);
        std::string bits(width, '0');
        for (int b = 0; b < width; ++b)
          if (w.assignment[first + b]) bits[b] = '1';
        ids.push_back("asg:" + std::to_string(i + 1) + ":" + bits);
      }
      CHECK(covers_all(inst, ids));
    }
  }

  SUBCASE("clique: the C(k,2) edges of the clique") {
    MultipartiteGraph tri;
    tri.k = 3;
    tri.parts = {{"a"}, {"x", "b"}, {"c"}};
    tri.edges = {{"a", "b"}, {"b", "c"}, {"a", "c"}};
    auto w = brute_clique(tri, 3);
    REQUIRE(w.exists);
    auto inst = clique_to_setcover(tri, 3);
    // global indices: a=0, x=1, b=2, c=3
    CHECK(covers_all(inst, {"e:0-2", "e:0-3", "e:2-3"}));
  }

  SUBCASE("vector-sum: the zero-sum tuple") {
    VectorSumInstance vs;
    vs.k = 2;
    vs.dim = 2;
    vs.bound = 1;
    vs.lists = {{{0, 1}, {1, 0}}, {{-1, 0}, {1, 1}}};
    auto w = brute_vector_sum(vs);
    REQUIRE(w.exists);
    auto inst = vectorsum_to_setcover(vs);
    std::vector<std::string> ids;
    for (int i = 0; i < vs.k; ++i)
      ids.push_back("vec:" + std::to_string(i + 1) + ":" + std::to_string(w.indices[i] + 1));
    CHECK(covers_all(inst, ids));
  }
}

TEST_CASE("front-ends are byte-deterministic") {
  SplitMix64 rng(59);
  auto cnf = testing::random_cnf(rng, 4, 4);
  CHECK(serialize_instance(sat_to_setcover(cnf, 2)) == serialize_instance(sat_to_setcover(cnf, 2)));
  auto g = testing::random_tripartite(rng, 7);
  CHECK(serialize_instance(clique_to_setcover(g, 3)) == serialize_instance(clique_to_setcover(g, 3)));
}
