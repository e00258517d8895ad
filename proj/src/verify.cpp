#include "gapcover/verify.hpp"

#include <sstream>

#include "json.hpp"

namespace gapcover {

namespace {

// opt(I') related checks run on the implicit instance; the materialized one,
// when present, is only used for the universe-size line.
VerdictLine completeness_line(const HypercubeReduction& red, int parts, bool source_yes, const Budget& budget) {
  VerdictLine line{"completeness", "SKIPPED", ""};
  if (!source_yes) {
    line.detail = "source is a no-instance";
    return line;
  }
  try {
    auto opt = exact_opt_implicit(red, parts, budget);
    if (opt.within(parts)) {
      line.verdict = "PASS";
      line.detail = "opt(I') = " + std::to_string(opt.opt) + " <= " + std::to_string(parts);
    } else {
      line.verdict = "FAIL";
      line.detail = "no cover of size <= " + std::to_string(parts);
    }
  } catch (const BudgetError& e) {
    line.verdict = "INCONCLUSIVE";
    line.detail = e.what();
  }
  return line;
}

VerdictLine soundness_line(const HypercubeReduction& red, int h, bool source_yes, const Budget& budget) {
  VerdictLine line{"soundness", "SKIPPED", ""};
  if (source_yes) {
    line.detail = "source is a yes-instance";
    return line;
  }
  try {
    auto opt = exact_opt_implicit(red, h, budget);
    if (opt.status == OptStatus::kExceedsBound) {
      line.verdict = "PASS";
      line.detail = "opt(I') > " + std::to_string(h);
    } else if (opt.status == OptStatus::kInfeasible) {
      line.verdict = "PASS";
      line.detail = "I' is uncoverable (opt = infinity > " + std::to_string(h) + ")";
    } else {
      line.verdict = "FAIL";
      line.detail = "found cover of size " + std::to_string(opt.opt) + " <= " + std::to_string(h);
    }
  } catch (const BudgetError& e) {
    line.verdict = "INCONCLUSIVE";
    line.detail = e.what();
  }
  return line;
}

VerdictLine universe_line(const PipelineOutput& out) {
  VerdictLine line{"universe-size", "SKIPPED", "output kept implicit"};
  if (out.materialized) {
    bool match = std::to_string(out.materialized->universe_ids.size()) == out.params.universe_size;
    line.verdict = match ? "PASS" : "FAIL";
    line.detail = "|U'| = " + out.params.universe_size + " = m*|U|^ell";
  }
  return line;
}

PipelineVerdict two_sided(const PipelineOutput& out, bool source_yes, const Budget& budget) {
  PipelineVerdict v;
  v.lines.push_back(completeness_line(*out.reduced, out.params.parts, source_yes, budget));
  v.lines.push_back(soundness_line(*out.reduced, out.params.h_effective, source_yes, budget));
  v.lines.push_back(universe_line(out));
  return v;
}

}  // namespace

std::string PipelineVerdict::to_text() const {
  std::ostringstream os;
  for (const auto& l : lines) {
    os << l.name << ": " << l.verdict;
    if (!l.detail.empty()) os << " (" << l.detail << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

PipelineVerdict source_oracle_starved(const std::string& why) {
  PipelineVerdict v;
  v.lines.push_back({"completeness", "INCONCLUSIVE", why});
  v.lines.push_back({"soundness", "INCONCLUSIVE", why});
  return v;
}

}  // namespace

PipelineVerdict verify_sat_pipeline(const CnfFormula& cnf, const PipelineOutput& out, const Budget& budget) {
  bool yes = false;
  try {
    yes = brute_sat(cnf, budget).satisfiable;
  } catch (const BudgetError& e) {
    return source_oracle_starved(e.what());
  }
  return two_sided(out, yes, budget);
}

PipelineVerdict verify_clique_pipeline(const MultipartiteGraph& g, const PipelineOutput& out, const Budget& budget) {
  bool yes = false;
  try {
    yes = brute_clique(g, g.k, budget).exists;
  } catch (const BudgetError& e) {
    return source_oracle_starved(e.what());
  }
  return two_sided(out, yes, budget);
}

PipelineVerdict verify_vectorsum_pipeline(const VectorSumInstance& vs, const PipelineOutput& out,
                                          const Budget& budget) {
  bool yes = false;
  try {
    yes = brute_vector_sum(vs, budget).exists;
  } catch (const BudgetError& e) {
    return source_oracle_starved(e.what());
  }
  return two_sided(out, yes, budget);
}

PipelineVerdict verify_ksum_pipeline(const std::vector<std::vector<long long>>& lists, const KsumPipelineOutput& out,
                                     const Budget& budget) {
  PipelineVerdict v;
  bool yes = false;
  try {
    yes = brute_ksum(lists, budget).exists;
  } catch (const BudgetError& e) {
    return source_oracle_starved(e.what());
  }
  // yes-instances need some output with a small cover; no-instances need
  // every output to stay above h.
  try {
    if (yes) {
      bool found = false;
      int where = -1;
      for (std::size_t i = 0; i < out.outputs.size() && !found; ++i) {
        auto opt = exact_opt_implicit(*out.outputs[i].reduced, out.outputs[i].params.parts, budget);
        if (opt.within(out.outputs[i].params.parts)) {
          found = true;
          where = static_cast<int>(i);
        }
      }
      v.lines.push_back({"completeness", found ? "PASS" : "FAIL",
                         found ? "opt(I_" + std::to_string(where + 1) + ") <= k" : "no output admits a small cover"});
      v.lines.push_back({"soundness", "SKIPPED", "source is a yes-instance"});
    } else {
      bool all_large = true;
      int where = -1;
      for (std::size_t i = 0; i < out.outputs.size() && all_large; ++i) {
        auto opt = exact_opt_implicit(*out.outputs[i].reduced, out.outputs[i].params.h_effective, budget);
        if (opt.status == OptStatus::kFound) {
          all_large = false;
          where = static_cast<int>(i);
        }
      }
      v.lines.push_back({"completeness", "SKIPPED", "source is a no-instance"});
      v.lines.push_back({"soundness", all_large ? "PASS" : "FAIL",
                         all_large ? "opt(I_i) > h for all i" : "output " + std::to_string(where + 1) + " has a small cover"});
    }
  } catch (const BudgetError& e) {
    v.lines.push_back({yes ? "completeness" : "soundness", "INCONCLUSIVE", e.what()});
  }
  v.lines.push_back({"output-count", out.outputs.size() == saturating_pow(out.mapping.k + 1, out.mapping.d - 1)
                                         ? "PASS"
                                         : "FAIL",
                     "s = " + std::to_string(out.outputs.size())});
  return v;
}

namespace {

PipelineOutput reload_output(const nlohmann::json& j, const std::string& dir) {
  PipelineOutput out;
  out.source_kind = j.at("source_kind").get<std::string>();
  out.rainbow_certified = j.at("rainbow_certified").get<bool>();
  const auto& artifacts = j.at("artifacts");
  out.padded_source = load_instance_file(dir + artifacts.at("padded_source").get<std::string>());
  out.gadget = load_gadget_file(dir + artifacts.at("gadget").get<std::string>());
  out.reduced = std::make_shared<HypercubeReduction>(out.padded_source, out.gadget, out.rainbow_certified);
  if (artifacts.contains("instance"))
    out.materialized = load_instance_file(dir + artifacts.at("instance").get<std::string>());
  const auto& p = j.at("params");
  out.params.k = p.at("k").get<int>();
  out.params.parts = p.at("parts").get<int>();
  out.params.h_effective = p.at("h_effective").get<int>();
  out.params.universe_size = p.at("universe_size").get<std::string>();
  out.params.ell = p.at("ell").get<long long>();
  out.params.m = p.at("m").get<int>();
  return out;
}

std::string dirname_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? "" : path.substr(0, slash + 1);
}

}  // namespace

PipelineVerdict verify_pipeline_file(const std::string& provenance_path, const Budget& budget) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(provenance_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("provenance: ") + e.what(), 0);
  }
  if (j.value("format", "") != "gapcover-provenance-v1") throw Error("provenance: unknown format tag");
  std::string dir = dirname_of(provenance_path);
  std::string source_file = j.at("source_file").get<std::string>();
  if (source_file.empty()) throw Error("provenance: empty source_file");
  std::string source_text = read_file(source_file.front() == '/' ? source_file : dir + source_file);
  if (fnv1a_hex(source_text) != j.at("source_hash").get<std::string>())
    throw Error("provenance: source file hash mismatch for " + source_file);

  std::string kind = j.at("source_kind").get<std::string>();
  if (kind == "sat") return verify_sat_pipeline(parse_dimacs(source_text), reload_output(j, dir), budget);
  if (kind == "clique") return verify_clique_pipeline(deserialize_graph(source_text), reload_output(j, dir), budget);
  if (kind == "vectorsum")
    return verify_vectorsum_pipeline(deserialize_vector_sum(source_text), reload_output(j, dir), budget);
  if (kind == "ksum") {
    auto lists = parse_ksum_lists(source_text);
    KsumPipelineOutput out;
    out.mapping.k = static_cast<int>(lists.size());
    out.mapping.p = j.at("p").get<int>();
    out.mapping.d = j.at("d").get<int>();
    const auto& artifacts = j.at("artifacts");
    GapGadget gadget = load_gadget_file(dir + artifacts.at("gadget").get<std::string>());
    for (const auto& entry : artifacts.at("outputs")) {
      PipelineOutput po;
      po.source_kind = "ksum";
      po.rainbow_certified = true;
      po.padded_source = load_instance_file(dir + entry.get<std::string>());
      po.gadget = gadget;
      po.reduced = std::make_shared<HypercubeReduction>(po.padded_source, po.gadget, true);
      const auto& p = j.at("params");
      po.params.parts = p.at("parts").get<int>();
      po.params.h_effective = p.at("h_effective").get<int>();
      out.outputs.push_back(std::move(po));
    }
    return verify_ksum_pipeline(lists, out, budget);
  }
  throw Error("provenance: unknown source kind '" + kind + "'");
}

}  // namespace gapcover
