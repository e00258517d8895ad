#pragma once

#include <string>
#include <vector>

#include "gapcover/oracles.hpp"
#include "gapcover/pipeline.hpp"

namespace gapcover {

struct VerdictLine {
  std::string name;
  std::string verdict;  // PASS | FAIL | SKIPPED | INCONCLUSIVE
  std::string detail;
};

struct PipelineVerdict {
  std::vector<VerdictLine> lines;

  bool any(const std::string& v) const {
    for (const auto& l : lines)
      if (l.verdict == v) return true;
    return false;
  }
  // 0 all PASS/SKIPPED, 1 some FAIL, 2 inconclusive.
  int exit_code() const { return any("FAIL") ? 1 : any("INCONCLUSIVE") ? 2 : 0; }
  std::string to_text() const;
};

// Re-runs the source oracle and the exact solver against the two-sided
// contract: source yes => opt <= parts, source no => opt > h_effective.
// Budget exhaustion yields INCONCLUSIVE, never a silent PASS.
PipelineVerdict verify_sat_pipeline(const CnfFormula& cnf, const PipelineOutput& out, const Budget& budget = {});
PipelineVerdict verify_clique_pipeline(const MultipartiteGraph& g, const PipelineOutput& out,
                                       const Budget& budget = {});
PipelineVerdict verify_vectorsum_pipeline(const VectorSumInstance& vs, const PipelineOutput& out,
                                          const Budget& budget = {});
PipelineVerdict verify_ksum_pipeline(const std::vector<std::vector<long long>>& lists,
                                     const KsumPipelineOutput& out, const Budget& budget = {});

// Loads the provenance sidecar, checks artifact hashes, reconstructs the
// implicit instance from the recorded files, and runs the verdict above.
PipelineVerdict verify_pipeline_file(const std::string& provenance_path, const Budget& budget = {});

}  // namespace gapcover
