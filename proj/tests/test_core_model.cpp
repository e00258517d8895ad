#include "doctest.h"
#include "gapcover/instance.hpp"
#include "gapcover/oracles.hpp"
#include "helpers.hpp"

using namespace gapcover;

namespace {

SetCoverInstance tiny() {
  SetCoverInstance inst;
  inst.universe_ids = {"a", "b"};
  inst.set_ids = {"s1"};
  inst.incidence = {{"a", "b"}};
  return inst;
}

bool has_violation(const ValidationReport& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.message.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("validate accepts a minimal well-formed instance") {
  CHECK(validate_instance(tiny()).ok());
}

TEST_CASE("validate flags unknown universe ids") {
  auto inst = tiny();
  inst.incidence[0].push_back("ghost");
  auto report = validate_instance(inst);
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "unknown universe id"));
}

TEST_CASE("validate flags unequal part widths") {
  SetCoverInstance inst;
  inst.universe_ids = {"a"};
  inst.set_ids = {"s1", "s2", "s3", "s4", "s5"};
  inst.incidence = {{"a"}, {}, {}, {}, {}};
  inst.partition = std::vector<PartRange>{{0, 2}, {2, 3}};
  auto report = validate_instance(inst);
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "unequal part widths"));
}

TEST_CASE("validate catches single-field corruptions") {
  SplitMix64 rng(7);
  auto base = testing::random_instance(rng, 6, 5);
  REQUIRE(validate_instance(base).ok());

  SUBCASE("duplicate set id") {
    auto inst = base;
    inst.set_ids[0] = inst.set_ids.back();
    CHECK_FALSE(validate_instance(inst).ok());
  }
  SUBCASE("duplicate universe id") {
    auto inst = base;
    inst.universe_ids.push_back(inst.universe_ids[0]);
    CHECK_FALSE(validate_instance(inst).ok());
  }
  SUBCASE("unsorted incidence") {
    auto inst = base;
    // find a set covering >= 2 elements and swap them
    for (auto& cov : inst.incidence)
      if (cov.size() >= 2) {
        std::swap(cov[0], cov[1]);
        break;
      }
    bool any_multi = false;
    for (auto& cov : inst.incidence) any_multi = any_multi || cov.size() >= 2;
    if (any_multi) CHECK_FALSE(validate_instance(inst).ok());
  }
  SUBCASE("partition not covering all sets") {
    auto inst = base;
    inst.partition = std::vector<PartRange>{{0, static_cast<int>(inst.set_ids.size()) - 1}};
    if (inst.set_ids.size() >= 2) CHECK_FALSE(validate_instance(inst).ok());
  }
  SUBCASE("id with forbidden character") {
    auto inst = base;
    inst.set_ids[0] = "bad,id";
    CHECK_FALSE(validate_instance(inst).ok());
  }
}

TEST_CASE("pad_partition equalizes widths with inert dummies") {
  SetCoverInstance inst;
  inst.universe_ids = {"a", "b"};
  inst.set_ids = {"x1", "x2", "y1", "y2", "y3"};
  inst.incidence = {{"a"}, {"b"}, {"a"}, {}, {"a", "b"}};
  inst.partition = std::vector<PartRange>{{0, 2}, {2, 3}};

  auto padded = pad_partition(inst);
  REQUIRE(padded.partition.has_value());
  CHECK(padded.partition->size() == 2);
  CHECK((*padded.partition)[0].width == 3);
  CHECK((*padded.partition)[1].width == 3);
  CHECK(padded.set_ids[2] == "pad:1:1");
  CHECK(padded.incidence[2].empty());
  CHECK(validate_instance(padded).ok());
}

TEST_CASE("pad_partition is the identity on equal parts") {
  SplitMix64 rng(3);
  auto inst = testing::random_partitioned(rng, 2, 3, 4, false);
  CHECK(pad_partition(inst) == inst);
}

TEST_CASE("pad_partition errors without a partition") {
  CHECK_THROWS_AS(pad_partition(tiny()), Error);
}

TEST_CASE("pad_partition preserves opt (exact-solver oracle)") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    auto inst = testing::random_partitioned(rng, 2, 2, 4, trial % 2 == 0);
    // make part widths unequal by dropping the last set
    inst.set_ids.pop_back();
    inst.incidence.pop_back();
    (*inst.partition)[1].width -= 1;
    auto padded = pad_partition(inst);
    auto a = exhaustive_opt(inst, static_cast<int>(inst.set_ids.size()));
    auto b = exhaustive_opt(padded, static_cast<int>(padded.set_ids.size()));
    CHECK(a.status == b.status);
    if (a.status == OptStatus::kFound) CHECK(a.opt == b.opt);
  }
}

TEST_CASE("instance serialization round-trips") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = trial % 2 == 0 ? testing::random_instance(rng, 8, 6)
                               : testing::random_partitioned(rng, 2, 3, 4, trial % 4 == 1);
    auto text = serialize_instance(inst);
    CHECK(deserialize_instance(text) == inst);
    // byte-deterministic
    CHECK(serialize_instance(deserialize_instance(text)) == text);
  }
}

TEST_CASE("DIMACS frozen example and round-trip") {
  auto cnf = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  CHECK(cnf.num_vars == 2);
  REQUIRE(cnf.clauses.size() == 1);
  CHECK(cnf.clauses[0] == std::vector<int>{1, -2});

  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto random = testing::random_cnf(rng, 5, 6);
    CHECK(parse_dimacs(write_dimacs(random)) == random);
  }
}

TEST_CASE("DIMACS parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 -2 0\n"), ParseError);       // truncated
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 -2\n"), ParseError);         // unterminated
  CHECK_THROWS_AS(parse_dimacs("1 -2 0\n"), ParseError);                  // clause before header
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0\n"), ParseError);          // out of range
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n0\n"), ParseError);            // empty clause
  try {
    parse_dimacs("p cnf 2 2\n1 0\nx 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("graph serialization round-trips and rejects bad structure") {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = testing::random_tripartite(rng, 7);
    CHECK(deserialize_graph(serialize_graph(g)) == g);
  }
  MultipartiteGraph bad;
  bad.k = 2;
  bad.parts = {{"a", "b"}, {"c"}};
  bad.edges = {{"a", "b"}};  // same part
  CHECK_THROWS_AS(check_graph(bad), ValidationError);
}

TEST_CASE("vector-sum serialization round-trips and validates") {
  VectorSumInstance vs;
  vs.k = 2;
  vs.dim = 2;
  vs.bound = 1;
  vs.lists = {{{1, 0}, {0, -1}}, {{-1, 0}}};
  CHECK(deserialize_vector_sum(serialize_vector_sum(vs)) == vs);

  vs.lists[0][0][0] = 5;  // out of bound
  CHECK_THROWS_AS(check_vector_sum(vs), ValidationError);
}
