#include "gapcover/pipeline.hpp"

#include <cmath>

#include "json.hpp"

namespace gapcover {

namespace {

constexpr std::uint64_t kEllCap = std::uint64_t{1} << 16;

double formula_h(std::uint64_t M, double delta, int parts) {
  if (M < 5) return 0.0;
  double log_m = std::log2(static_cast<double>(M));
  double loglog_m = std::log2(log_m);
  if (loglog_m <= 0) return 0.0;
  return (1.0 / (1.0 + delta / 2.0)) * std::pow(log_m / loglog_m, 1.0 / parts);
}

int choose_effective_h(int parts, double h_formula, int h_request, std::vector<std::string>& warnings) {
  std::uint64_t h;
  if (h_request > 0) {
    h = pow2_floor(static_cast<std::uint64_t>(std::max(2, h_request)));
    if (static_cast<int>(h) <= parts)
      warnings.push_back("requested h=" + std::to_string(h) + " <= parts=" + std::to_string(parts) +
                         ": the gap h/parts is degenerate (soundness still holds)");
  } else {
    std::uint64_t from_formula = h_formula >= 2.0 ? pow2_floor(static_cast<std::uint64_t>(h_formula)) : 2;
    h = std::max<std::uint64_t>(pow2_ceil(static_cast<std::uint64_t>(parts) + 1), from_formula);
  }
  while (h > 2 && saturating_pow(h, static_cast<std::uint64_t>(parts)) > kEllCap) {
    h /= 2;
    warnings.push_back("h lowered to " + std::to_string(h) + " to keep ell = h^parts within " +
                       std::to_string(kEllCap));
  }
  return static_cast<int>(h);
}

PipelineOutput run_common(std::string kind, SetCoverInstance front, int source_k, int parts, double delta,
                          double epsilon, int h_request, std::uint64_t seed, const Budget& budget) {
  PipelineOutput out;
  out.source_kind = std::move(kind);
  out.padded_source = pad_partition(front);

  PipelineParams& pp = out.params;
  pp.k = source_k;
  pp.parts = parts;
  pp.delta = delta;
  pp.epsilon = epsilon;
  pp.h_requested = h_request;
  pp.M = out.padded_source.set_ids.size();
  pp.n_part = out.padded_source.partition->empty() ? 0 : out.padded_source.partition->front().width;
  pp.h_formula = formula_h(pp.M, delta, parts);
  pp.ell_formula = pp.h_formula > 0 ? std::pow(pp.h_formula, parts) : 0.0;
  pp.m_formula = pp.h_formula > 1 ? static_cast<double>(pp.M) * std::log2(pp.h_formula) : 0.0;
  pp.h_effective = choose_effective_h(parts, pp.h_formula, h_request, out.warnings);

  auto built = build_gadget(parts, pp.n_part, pp.h_effective, seed, budget, epsilon);
  for (const auto& w : built.warnings) out.warnings.push_back("gadget: " + w);
  out.gadget = std::move(built.gadget);
  pp.ell = out.gadget.ell;
  pp.m = out.gadget.m;

  out.reduced = std::make_shared<HypercubeReduction>(out.padded_source, out.gadget, out.rainbow_certified);
  for (const auto& w : out.reduced->warnings()) out.warnings.push_back(w);
  pp.universe_size = out.reduced->universe_size().to_string();

  BigNat total = out.reduced->universe_size();
  total.add(BigNat(pp.M));
  pp.total_vertices = total.to_string();
  double log_n = total.log2();
  double loglog_n = log_n > 1 ? std::log2(log_n) : 0.0;
  pp.gap_target = loglog_n > 0 ? (1.0 / (1.0 + delta)) * std::pow(log_n / loglog_n, 1.0 / parts) : 0.0;

  if (out.reduced->universe_size() <= budget.size) {
    try {
      out.materialized = out.reduced->materialize(budget);
    } catch (const BudgetError&) {
      // ell alone can exceed the budget even when the element count fits.
    }
  }
  if (!out.materialized)
    out.warnings.push_back("output kept implicit: |U'| = " + pp.universe_size + " exceeds size budget " +
                           std::to_string(budget.size));
  return out;
}

}  // namespace

PipelineOutput pipeline_sat(const CnfFormula& cnf, int k, double delta, double epsilon, int h_request,
                            std::uint64_t seed, const Budget& budget) {
  auto front = sat_to_setcover(cnf, k, budget);
  auto out = run_common("sat", std::move(front), k, k, delta, epsilon, h_request, seed, budget);
  // Gatekeeping inequalities of the asymptotic statement, reported only.
  if (std::pow(1.0 + 1.0 / std::pow(k, 3), 1.0 / k) > (1.0 + delta) / (1.0 + delta / 2.0))
    out.warnings.push_back("outside asymptotic regime: (1+1/k^3)^(1/k) > (1+delta)/(1+delta/2)");
  if (std::pow(1.0 + delta / 2.0, k) < 2.0 * std::pow(k, 4))
    out.warnings.push_back("outside asymptotic regime: (1+delta/2)^k < 2k^4");
  return out;
}

PipelineOutput pipeline_clique(const MultipartiteGraph& g, int k, double delta, double epsilon, int h_request,
                               std::uint64_t seed, const Budget& budget) {
  auto front = clique_to_setcover(g, k);
  int parts = k * (k - 1) / 2;
  return run_common("clique", std::move(front), k, parts, delta, epsilon, h_request, seed, budget);
}

PipelineOutput pipeline_vectorsum(const VectorSumInstance& vs, double delta, double epsilon, int h_request,
                                  std::uint64_t seed, const Budget& budget) {
  auto front = vectorsum_to_setcover(vs, budget);
  return run_common("vectorsum", std::move(front), vs.k, vs.k, delta, epsilon, h_request, seed, budget);
}

KsumPipelineOutput pipeline_ksum(const std::vector<std::vector<long long>>& lists, double delta, int p, int d,
                                 double epsilon, int h_request, std::uint64_t seed, const Budget& budget) {
  int k = static_cast<int>(lists.size());
  long long R = 0;
  for (const auto& list : lists)
    for (long long x : list) R = std::max(R, std::abs(x));
  if (d <= 0) d = 2;
  if (p <= 0) {
    // Smallest p with k < p and p^d >= k*2R + 1.
    p = k + 1;
    while (saturating_pow(p, d) < static_cast<std::uint64_t>(k) * (2 * R) + 1) ++p;
  }
  KsumPipelineOutput out;
  out.mapping = ksum_to_vectorsum(lists, p, d, budget);
  for (const auto& vsi : out.mapping.instances) {
    auto po = pipeline_vectorsum(vsi, delta, epsilon, h_request, seed, budget);
    po.source_kind = "ksum";
    po.params.k = k;
    out.outputs.push_back(std::move(po));
  }
  return out;
}

namespace {

nlohmann::ordered_json params_json(const PipelineParams& pp) {
  nlohmann::ordered_json j;
  j["k"] = pp.k;
  j["parts"] = pp.parts;
  j["delta"] = pp.delta;
  j["epsilon"] = pp.epsilon;
  j["M"] = pp.M;
  j["n_part"] = pp.n_part;
  j["h_requested"] = pp.h_requested;
  j["h_effective"] = pp.h_effective;
  j["ell"] = pp.ell;
  j["m"] = pp.m;
  j["universe_size"] = pp.universe_size;
  j["total_vertices"] = pp.total_vertices;
  j["gap_target"] = pp.gap_target;
  j["formula"] = {{"h", pp.h_formula}, {"ell", pp.ell_formula}, {"m", pp.m_formula}};
  return j;
}

nlohmann::ordered_json base_json(const std::string& kind, bool rainbow, const std::string& source_file,
                                 const std::string& source_hash, std::uint64_t seed,
                                 const std::vector<std::pair<std::string, std::string>>& artifacts,
                                 const std::vector<std::string>& warnings) {
  nlohmann::ordered_json j;
  j["format"] = "gapcover-provenance-v1";
  j["source_kind"] = kind;
  j["source_file"] = source_file;
  j["source_hash"] = source_hash;
  j["rainbow_certified"] = rainbow;
  j["seed"] = seed;
  auto a = nlohmann::ordered_json::object();
  for (const auto& [name, path] : artifacts) a[name] = path;
  j["artifacts"] = a;
  j["warnings"] = warnings;
  return j;
}

}  // namespace

std::string provenance_json(const PipelineOutput& out, const std::string& source_file,
                            const std::string& source_hash, std::uint64_t seed,
                            const std::vector<std::pair<std::string, std::string>>& artifacts) {
  auto j = base_json(out.source_kind, out.rainbow_certified, source_file, source_hash, seed, artifacts, out.warnings);
  j["params"] = params_json(out.params);
  return j.dump(2) + "\n";
}

std::string ksum_provenance_json(const KsumPipelineOutput& out, const std::string& source_file,
                                 const std::string& source_hash, std::uint64_t seed, const std::string& gadget_path,
                                 const std::vector<std::string>& padded_source_paths) {
  std::vector<std::string> warnings;
  for (const auto& o : out.outputs)
    for (const auto& w : o.warnings) warnings.push_back(w);
  auto j = base_json("ksum", true, source_file, source_hash, seed, {{"gadget", gadget_path}}, warnings);
  j["artifacts"]["outputs"] = padded_source_paths;
  j["p"] = out.mapping.p;
  j["d"] = out.mapping.d;
  j["s"] = out.outputs.size();
  j["shift"] = out.mapping.shift;
  j["target"] = out.mapping.target;
  if (!out.outputs.empty()) j["params"] = params_json(out.outputs.front().params);
  return j.dump(2) + "\n";
}

}  // namespace gapcover
