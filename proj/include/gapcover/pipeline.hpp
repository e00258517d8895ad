#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gapcover/hypercube.hpp"
#include "gapcover/reductions.hpp"

namespace gapcover {

// Asymptotic-formula and effective parameters of one gap-producing run. The
// formula values are reported next to the desk-scale values actually used;
// the two-sided guarantee (yes => opt <= parts, no => opt > h) is what
// verify_pipeline checks.
struct PipelineParams {
  int k = 0;           // source parameter (variables split / clique size / lists)
  int parts = 0;       // partition arity fed to the gadget: k or C(k,2)
  double delta = 0.0;
  double epsilon = 0.1;
  std::uint64_t M = 0;  // |S| after padding
  int n_part = 0;       // part width after padding
  int h_requested = 0;  // 0 when chosen automatically
  double h_formula = 0.0;
  double ell_formula = 0.0;
  double m_formula = 0.0;
  int h_effective = 0;
  long long ell = 0;
  int m = 0;
  std::string universe_size;  // exact decimal, m * |U|^ell
  std::string total_vertices;  // |S| + |U'|
  double gap_target = 0.0;  // (1/(1+delta)) * (log N / loglog N)^(1/parts)
};

struct PipelineOutput {
  std::string source_kind;  // sat | clique | ksum | vectorsum
  SetCoverInstance padded_source;
  GapGadget gadget;
  std::shared_ptr<const HypercubeReduction> reduced;
  std::optional<SetCoverInstance> materialized;  // present when within budget
  PipelineParams params;
  bool rainbow_certified = true;
  std::vector<std::string> warnings;
};

// SAT -> partitioned set cover -> padding -> gadget -> hypercube reduction.
// h_request = 0 picks h from the asymptotic formula with a floor that keeps
// the gap nontrivial; an explicit request wins, rounded down to a power of
// two.
PipelineOutput pipeline_sat(const CnfFormula& cnf, int k, double delta, double epsilon = 0.1, int h_request = 0,
                            std::uint64_t seed = 1, const Budget& budget = {});

PipelineOutput pipeline_clique(const MultipartiteGraph& g, int k, double delta = 0.5, double epsilon = 0.1,
                               int h_request = 0, std::uint64_t seed = 1, const Budget& budget = {});

PipelineOutput pipeline_vectorsum(const VectorSumInstance& vs, double delta = 0.5, double epsilon = 0.1,
                                  int h_request = 0, std::uint64_t seed = 1, const Budget& budget = {});

struct KsumPipelineOutput {
  KsumReductionResult mapping;
  std::vector<PipelineOutput> outputs;  // one per carry vector, shared gadget
};

// p = 0 / d = 0 pick defaults (d = 2, smallest feasible p).
KsumPipelineOutput pipeline_ksum(const std::vector<std::vector<long long>>& lists, double delta = 0.5, int p = 0,
                                 int d = 0, double epsilon = 0.1, int h_request = 0, std::uint64_t seed = 1,
                                 const Budget& budget = {});

// Provenance sidecar: everything verify needs to re-run the oracles without
// guessing parameters.
std::string provenance_json(const PipelineOutput& out, const std::string& source_file,
                            const std::string& source_hash, std::uint64_t seed,
                            const std::vector<std::pair<std::string, std::string>>& artifacts);
std::string ksum_provenance_json(const KsumPipelineOutput& out, const std::string& source_file,
                                 const std::string& source_hash, std::uint64_t seed, const std::string& gadget_path,
                                 const std::vector<std::string>& padded_source_paths);

}  // namespace gapcover
