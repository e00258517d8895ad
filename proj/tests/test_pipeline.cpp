#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "gapcover/pipeline.hpp"
#include "gapcover/verify.hpp"
#include "helpers.hpp"

using namespace gapcover;

namespace {

MultipartiteGraph triangle() {
  MultipartiteGraph g;
  g.k = 3;
  g.parts = {{"a"}, {"b"}, {"c"}};
  g.edges = {{"a", "b"}, {"b", "c"}, {"a", "c"}};
  return g;
}

MultipartiteGraph triangle_free() {
  MultipartiteGraph g;
  g.k = 3;
  g.parts = {{"a1", "a2"}, {"b1", "b2"}, {"c1", "c2"}};
  g.edges = {{"a1", "b1"}, {"a2", "b2"}, {"b1", "c2"}, {"b2", "c1"}, {"a1", "c1"}, {"a2", "c2"}};
  return g;
}

bool all_lines(const PipelineVerdict& v, const std::string& name, const std::string& verdict) {
  for (const auto& l : v.lines)
    if (l.name == name) return l.verdict == verdict;
  return false;
}

}  // namespace

TEST_CASE("sat pipeline: satisfiable formulas keep a k-cover") {
  auto cnf = parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n");
  auto out = pipeline_sat(cnf, 2, 0.5);
  auto opt = exact_opt_implicit(*out.reduced, 2);
  CHECK(opt.within(2));
  auto verdict = verify_sat_pipeline(cnf, out);
  CHECK(all_lines(verdict, "completeness", "PASS"));
  CHECK(verdict.exit_code() == 0);
}

TEST_CASE("sat pipeline: unsatisfiable formulas exceed the requested gap h=2") {
  auto cnf = parse_dimacs("p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n");
  auto out = pipeline_sat(cnf, 2, 0.5, 0.1, /*h_request=*/2);
  CHECK(out.params.h_effective == 2);
  auto opt = exact_opt_implicit(*out.reduced, 2);
  CHECK(opt.status != OptStatus::kFound);
  auto verdict = verify_sat_pipeline(cnf, out);
  CHECK(all_lines(verdict, "soundness", "PASS"));
}

TEST_CASE("clique pipeline keeps the two-sided contract") {
  auto yes = pipeline_clique(triangle(), 3);
  CHECK(exact_opt_implicit(*yes.reduced, 3).within(3));
  CHECK(all_lines(verify_clique_pipeline(triangle(), yes), "completeness", "PASS"));

  auto no = pipeline_clique(triangle_free(), 3);
  CHECK(exact_opt_implicit(*no.reduced, no.params.h_effective).status != OptStatus::kFound);
  CHECK(all_lines(verify_clique_pipeline(triangle_free(), no), "soundness", "PASS"));
}

TEST_CASE("ksum pipeline: planted and empty zero-sum cases") {
  std::vector<std::vector<long long>> yes = {{1, 2, -1}, {-1, 1, 2}};
  auto yes_out = pipeline_ksum(yes);
  CHECK(yes_out.outputs.size() == 3);  // (k+1)^(d-1) with defaults k=2, d=2
  CHECK(all_lines(verify_ksum_pipeline(yes, yes_out), "completeness", "PASS"));

  std::vector<std::vector<long long>> no = {{1, 2}, {1, 2}};
  auto no_out = pipeline_ksum(no);
  CHECK(all_lines(verify_ksum_pipeline(no, no_out), "soundness", "PASS"));
}

TEST_CASE("pipeline parameters report both formula and effective values") {
  auto out = pipeline_sat(parse_dimacs("p cnf 2 1\n1 2 0\n"), 1, 0.5);
  CHECK(out.params.parts == 1);
  CHECK(out.params.h_effective >= 2);
  CHECK(is_power_of_two(out.params.h_effective));
  CHECK(out.params.ell == static_cast<long long>(saturating_pow(out.params.h_effective, 1)));
  CHECK(out.params.m == out.gadget.m);
  CHECK(out.params.universe_size == out.reduced->universe_size().to_string());
  // materialized here, so the exact count must match the formula
  REQUIRE(out.materialized.has_value());
  CHECK(std::to_string(out.materialized->universe_ids.size()) == out.params.universe_size);
}

TEST_CASE("provenance files round-trip through verify_pipeline_file") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "gapcover-test-prov";
  fs::create_directories(dir);
  std::string base = (dir / "run").string();

  std::string cnf_text = "p cnf 2 2\n1 2 0\n-1 2 0\n";
  auto out = pipeline_sat(parse_dimacs(cnf_text), 1, 0.5);
  write_file(base + ".source", cnf_text);
  save_instance_file(out.padded_source, base + ".src.json");
  write_file(base + ".gad", serialize_gadget(out.gadget));
  std::vector<std::pair<std::string, std::string>> artifacts = {{"padded_source", "run.src.json"},
                                                                {"gadget", "run.gad"}};
  if (out.materialized) {
    save_instance_file(*out.materialized, base + ".inst.json");
    artifacts.emplace_back("instance", "run.inst.json");
  }
  write_file(base + ".prov.json", provenance_json(out, "run.source", fnv1a_hex(cnf_text), 1, artifacts));

  auto verdict = verify_pipeline_file(base + ".prov.json");
  CHECK(verdict.exit_code() == 0);
  CHECK(all_lines(verdict, "completeness", "PASS"));
  CHECK(all_lines(verdict, "universe-size", "PASS"));

  // tampered source is refused
  write_file(base + ".source", cnf_text + "c tampered\n");
  CHECK_THROWS_AS(verify_pipeline_file(base + ".prov.json"), Error);
}

TEST_CASE("budget-starved verification is INCONCLUSIVE, never a silent PASS") {
  auto cnf = parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n");
  auto out = pipeline_sat(cnf, 2, 0.5);
  Budget starved;
  starved.work = 10;  // enough for brute_sat, far too little for the solver
  auto verdict = verify_sat_pipeline(cnf, out, starved);
  CHECK(all_lines(verdict, "completeness", "INCONCLUSIVE"));
  CHECK(verdict.exit_code() == 2);
}

TEST_CASE("pipelines are byte-deterministic per seed") {
  auto cnf = parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n");
  auto a = pipeline_sat(cnf, 2, 0.5, 0.1, 0, 5);
  auto b = pipeline_sat(cnf, 2, 0.5, 0.1, 0, 5);
  CHECK(serialize_gadget(a.gadget) == serialize_gadget(b.gadget));
  CHECK(serialize_instance(a.padded_source) == serialize_instance(b.padded_source));
  REQUIRE(a.materialized.has_value() == b.materialized.has_value());
  if (a.materialized) CHECK(serialize_instance(*a.materialized) == serialize_instance(*b.materialized));
}
