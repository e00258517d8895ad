#include <cmath>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gapcover/oracles.hpp"
#include "gapcover/pipeline.hpp"
#include "gapcover/universal.hpp"
#include "gapcover/verify.hpp"

using namespace gapcover;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 1;
  std::uint64_t work_budget = 100'000'000;
  std::uint64_t size_budget = 10'000'000;
  std::string format = "text";

  Budget budget() const { return {work_budget, size_budget}; }
};

std::string basename_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

void print_params(const PipelineParams& p, const std::string& format) {
  if (format == "summary") {
    std::cout << "parameter        formula              effective\n";
    std::cout << "k (parts)        " << p.parts << "                    " << p.parts << "\n";
    std::cout << "h                " << p.h_formula << "             " << p.h_effective << "\n";
    std::cout << "ell              " << p.ell_formula << "             " << p.ell << "\n";
    std::cout << "m                " << p.m_formula << "             " << p.m << "\n";
    std::cout << "|U'|             -                    " << p.universe_size << "\n";
    std::cout << "gap target       " << p.gap_target << "\n";
  } else {
    std::cout << "M=" << p.M << " n_part=" << p.n_part << " h_eff=" << p.h_effective << " ell=" << p.ell
              << " m=" << p.m << " |U'|=" << p.universe_size << " gap_target=" << p.gap_target << "\n";
  }
}

// Emits src/gadget/instance/provenance files for one pipeline run; the
// source text is copied next to the artifacts so verify is self-contained.
void emit_pipeline(const PipelineOutput& out, const std::string& base, const std::string& source_text,
                   std::uint64_t seed, const std::string& format) {
  std::string stem = basename_of(base);
  write_file(base + ".source", source_text);
  save_instance_file(out.padded_source, base + ".src.json");
  write_file(base + ".gad", serialize_gadget(out.gadget));
  std::vector<std::pair<std::string, std::string>> artifacts = {{"padded_source", stem + ".src.json"},
                                                                {"gadget", stem + ".gad"}};
  if (out.materialized) {
    save_instance_file(*out.materialized, base + ".inst.json");
    artifacts.emplace_back("instance", stem + ".inst.json");
  }
  write_file(base + ".prov.json",
             provenance_json(out, stem + ".source", fnv1a_hex(source_text), seed, artifacts));
  for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
  print_params(out.params, format);
  std::cout << "wrote " << base << ".prov.json\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gap-producing set cover reduction toolkit"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "PRNG seed; same seed, same bytes");
  app.add_option("--budget", g.work_budget, "work budget for exhaustive verifiers/solvers")
      ->envname("GAPCOVER_BUDGET");
  app.add_option("--size-budget", g.size_budget, "universe elements a reduction may materialize");
  app.add_option("--format", g.format, "text|summary")->check(CLI::IsMember({"text", "summary"}));

  int exit_code = 0;

  // universal build|verify
  auto* universal = app.add_subcommand("universal", "(n,k)-universal sets");
  universal->require_subcommand(1);
  {
    auto* build = universal->add_subcommand("build", "construct and self-verify");
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto out_path = std::make_shared<std::string>();
    build->add_option("-n", *n, "string length")->required();
    build->add_option("-k", *k, "universality order")->required();
    build->add_option("--out", *out_path, "output file (default stdout)");
    build->callback([=, &g]() {
      auto us = build_universal(*n, *k, g.seed, g.budget());
      auto text = serialize_universal(us);
      if (out_path->empty())
        std::cout << text;
      else
        write_file(*out_path, text);
      auto report = size_bound_report(*n, *k, g.seed, g.budget());
      std::cout << "regime=" << report.regime << " size=" << report.achieved_size
                << " size_n_bound=" << report.size_n_bound << " fallback_bound=" << report.fallback_bound << "\n";
    });

    auto* verify = universal->add_subcommand("verify", "exhaustive verification");
    auto file = std::make_shared<std::string>();
    verify->add_option("file", *file, "universal set file")->required();
    verify->callback([=, &g, &exit_code]() {
      auto us = deserialize_universal(read_file(*file));
      auto res = verify_universal(us, g.budget());
      if (res.ok) {
        std::cout << "universal: yes (n=" << us.n << ", k=" << us.k << ", size=" << us.strings.size() << ")\n";
      } else {
        std::cout << "universal: no; positions (";
        for (std::size_t i = 0; i < res.counterexample->positions.size(); ++i)
          std::cout << (i ? "," : "") << res.counterexample->positions[i];
        std::cout << ") miss pattern " << res.counterexample->pattern_string() << "\n";
        exit_code = 1;
      }
    });
  }

  // gadget build|verify|feasibility
  auto* gadget = app.add_subcommand("gadget", "gap-gadgets");
  gadget->require_subcommand(1);
  {
    auto* build = gadget->add_subcommand("build", "build a (k,n,m,h^k,h)-gadget");
    build->set_help_flag("--help", "print help");
    auto k = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    auto h = std::make_shared<int>(0);
    auto eps = std::make_shared<double>(0.1);
    auto out_path = std::make_shared<std::string>();
    build->add_option("-k", *k)->required();
    build->add_option("-n", *n)->required();
    build->add_option("--h", *h, "gap threshold (rounded down to a power of two)")->required();
    build->add_option("--epsilon", *eps, "epsilon in the regime report");
    build->add_option("--out", *out_path);
    build->callback([=, &g]() {
      auto res = build_gadget(*k, *n, *h, g.seed, g.budget(), *eps);
      for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
      auto text = serialize_gadget(res.gadget);
      if (out_path->empty())
        std::cout << text;
      else
        write_file(*out_path, text);
      std::cout << "gadget k=" << res.gadget.k << " n=" << res.gadget.n << " m=" << res.gadget.m
                << " ell=" << res.gadget.ell << " h=" << res.gadget.h << " route=" << res.matrix_route << "\n";
    });

    auto* verify = gadget->add_subcommand("verify", "exhaustive M1/M2/G3/G4");
    auto file = std::make_shared<std::string>();
    verify->add_option("file", *file)->required();
    verify->callback([=, &g, &exit_code]() {
      auto gad = load_gadget_file(*file);  // M1 checked on load
      auto m2 = verify_m2(gad.matrix, gad.h, g.budget());
      auto g3 = verify_g3(gad, g.budget());
      auto g4 = verify_g4(gad, g.budget());
      std::cout << "M1: ok\nM2: " << (m2.ok ? "ok" : "FAIL") << "\nG3: " << (g3.ok ? "ok" : "FAIL") << "\nG4: "
                << (g4.ok ? "ok" : "FAIL") << "\n";
      if (!m2.ok || !g3.ok || !g4.ok) exit_code = 1;
    });

    auto* feas = gadget->add_subcommand("feasibility", "greedy-infeasibility regime check");
    feas->set_help_flag("--help", "print help");
    auto fk = std::make_shared<int>(0);
    auto ell = std::make_shared<double>(0);
    auto universe = std::make_shared<double>(0);
    auto m = std::make_shared<double>(0);
    auto fh = std::make_shared<double>(0);
    feas->add_option("-k", *fk)->required();
    feas->add_option("--ell", *ell)->required();
    feas->add_option("--universe", *universe, "|U| of the source instance")->required();
    feas->add_option("-m", *m)->required();
    feas->add_option("--h", *fh)->required();
    feas->callback([=]() {
      double lhs = *fk * (1.0 + *ell * std::log(*universe) + std::log(*m));
      bool res = check_greedy_infeasibility(*fk, *ell, *universe, *m, *fh);
      std::cout << "k(1 + ell*ln|U| + ln m) = " << lhs << (res ? " < " : " >= ") << "h = " << *fh << " -> "
                << (res ? "true" : "false") << "\n";
    });
  }

  // reduce sat|clique|vectorsum|ksum|hypercube
  auto* reduce = app.add_subcommand("reduce", "single reduction steps");
  reduce->require_subcommand(1);
  {
    auto add_front = [&](const std::string& name, auto loader, auto runner) {
      auto* cmd = reduce->add_subcommand(name, name + " front-end");
      auto input = std::make_shared<std::string>();
      auto k = std::make_shared<int>(1);
      auto out_base = std::make_shared<std::string>();
      cmd->add_option("--input", *input, "source file")->required();
      if (name == "sat" || name == "clique") cmd->add_option("-k", *k)->required();
      cmd->add_option("--out", *out_base, "output base path")->required();
      cmd->callback([=, &g]() {
        auto text = read_file(*input);
        auto inst = runner(loader(text), *k, g.budget());
        save_instance_file(inst, *out_base + ".inst.json");
        nlohmann::ordered_json prov;
        prov["format"] = "gapcover-reduction-v1";
        prov["reduction"] = name + "_to_setcover";
        prov["source_file"] = *input;
        prov["source_hash"] = fnv1a_hex(text);
        prov["k"] = *k;
        prov["sets"] = inst.set_ids.size();
        prov["universe"] = inst.universe_ids.size();
        write_file(*out_base + ".prov.json", prov.dump(2) + "\n");
        std::cout << "sets=" << inst.set_ids.size() << " universe=" << inst.universe_ids.size() << "\n";
      });
    };
    add_front("sat", [](const std::string& t) { return parse_dimacs(t); },
              [](const CnfFormula& f, int k, const Budget& b) { return sat_to_setcover(f, k, b); });
    add_front("clique", [](const std::string& t) { return deserialize_graph(t); },
              [](const MultipartiteGraph& gr, int k, const Budget&) { return clique_to_setcover(gr, k); });
    add_front("vectorsum", [](const std::string& t) { return deserialize_vector_sum(t); },
              [](const VectorSumInstance& vs, int, const Budget& b) { return vectorsum_to_setcover(vs, b); });

    auto* ks = reduce->add_subcommand("ksum", "k-SUM to vector-sum instances");
    auto input = std::make_shared<std::string>();
    auto p = std::make_shared<int>(0);
    auto d = std::make_shared<int>(2);
    auto out_base = std::make_shared<std::string>();
    ks->add_option("--input", *input)->required();
    ks->add_option("-p", *p, "modulus (default: smallest feasible)");
    ks->add_option("-d", *d, "digits");
    ks->add_option("--out", *out_base)->required();
    ks->callback([=, &g]() {
      auto text = read_file(*input);
      auto lists = parse_ksum_lists(text);
      int pp = *p;
      if (pp <= 0) {
        long long R = 0;
        for (const auto& l : lists)
          for (long long x : l) R = std::max(R, std::abs(x));
        pp = static_cast<int>(lists.size()) + 1;
        while (saturating_pow(pp, *d) < static_cast<std::uint64_t>(lists.size()) * (2 * R) + 1) ++pp;
      }
      auto res = ksum_to_vectorsum(lists, pp, *d, g.budget());
      for (std::size_t i = 0; i < res.instances.size(); ++i)
        write_file(*out_base + ".i" + std::to_string(i + 1) + ".vs", serialize_vector_sum(res.instances[i]));
      std::cout << "s=" << res.instances.size() << " p=" << res.p << " d=" << res.d << "\n";
    });

    auto* hc = reduce->add_subcommand("hypercube", "combine instance and gadget");
    auto inst_path = std::make_shared<std::string>();
    auto gad_path = std::make_shared<std::string>();
    auto out_base2 = std::make_shared<std::string>();
    hc->add_option("--instance", *inst_path)->required();
    hc->add_option("--gadget", *gad_path)->required();
    hc->add_option("--out", *out_base2)->required();
    hc->callback([=, &g]() {
      auto src_text = read_file(*inst_path);
      auto gad_text = read_file(*gad_path);
      HypercubeReduction red(deserialize_instance(src_text), deserialize_gadget(gad_text), false);
      for (const auto& w : red.warnings()) std::cerr << "warning: " << w << "\n";
      auto inst = red.materialize(g.budget());
      save_instance_file(inst, *out_base2 + ".inst.json");
      nlohmann::ordered_json prov;
      prov["format"] = "gapcover-reduction-v1";
      prov["reduction"] = "hypercube";
      prov["source_file"] = *inst_path;
      prov["source_hash"] = fnv1a_hex(src_text);
      prov["gadget_file"] = *gad_path;
      prov["gadget_hash"] = fnv1a_hex(gad_text);
      prov["k"] = red.gadget().k;
      prov["n"] = red.gadget().n;
      prov["m"] = red.gadget().m;
      prov["ell"] = red.gadget().ell;
      prov["h"] = red.gadget().h;
      prov["universe_size"] = red.universe_size().to_string();
      write_file(*out_base2 + ".prov.json", prov.dump(2) + "\n");
      std::cout << "universe=" << inst.universe_ids.size() << "\n";
    });
  }

  // pipeline sat|clique|ksum
  auto* pipeline = app.add_subcommand("pipeline", "end-to-end gapped instances");
  pipeline->require_subcommand(1);
  {
    auto add_pipe = [&](const std::string& name) {
      auto* cmd = pipeline->add_subcommand(name, name + " pipeline");
      cmd->set_help_flag("--help", "print help");
      auto input = std::make_shared<std::string>();
      auto k = std::make_shared<int>(1);
      auto delta = std::make_shared<double>(0.5);
      auto eps = std::make_shared<double>(0.1);
      auto h = std::make_shared<int>(0);
      auto p = std::make_shared<int>(0);
      auto d = std::make_shared<int>(0);
      auto out_base = std::make_shared<std::string>();
      cmd->add_option(name == "sat" ? "--cnf" : name == "clique" ? "--graph" : "--input", *input)->required();
      if (name != "ksum") cmd->add_option("-k", *k)->required();
      cmd->add_option("--delta", *delta, "gap slack");
      cmd->add_option("--epsilon", *eps);
      cmd->add_option("--h", *h, "explicit gap threshold (0 = from the formula)");
      if (name == "ksum") {
        cmd->add_option("-p", *p);
        cmd->add_option("-d", *d);
      }
      cmd->add_option("--out", *out_base)->required();
      cmd->callback([=, &g]() {
        auto text = read_file(*input);
        if (name == "ksum") {
          auto lists = parse_ksum_lists(text);
          auto out = pipeline_ksum(lists, *delta, *p, *d, *eps, *h, g.seed, g.budget());
          std::string stem = basename_of(*out_base);
          write_file(*out_base + ".source", text);
          write_file(*out_base + ".gad", serialize_gadget(out.outputs.front().gadget));
          std::vector<std::string> paths;
          for (std::size_t i = 0; i < out.outputs.size(); ++i) {
            std::string rel = stem + ".i" + std::to_string(i + 1) + ".src.json";
            save_instance_file(out.outputs[i].padded_source, *out_base + ".i" + std::to_string(i + 1) + ".src.json");
            paths.push_back(rel);
          }
          write_file(*out_base + ".prov.json", ksum_provenance_json(out, stem + ".source", fnv1a_hex(text), g.seed,
                                                                    stem + ".gad", paths));
          print_params(out.outputs.front().params, g.format);
          std::cout << "s=" << out.outputs.size() << " instances; wrote " << *out_base << ".prov.json\n";
        } else if (name == "sat") {
          auto out = pipeline_sat(parse_dimacs(text), *k, *delta, *eps, *h, g.seed, g.budget());
          emit_pipeline(out, *out_base, text, g.seed, g.format);
        } else {
          auto out = pipeline_clique(deserialize_graph(text), *k, *delta, *eps, *h, g.seed, g.budget());
          emit_pipeline(out, *out_base, text, g.seed, g.format);
        }
      });
    };
    add_pipe("sat");
    add_pipe("clique");
    add_pipe("ksum");
  }

  // solve exact|greedy
  auto* solve = app.add_subcommand("solve", "oracle solvers");
  solve->require_subcommand(1);
  {
    auto* exact = solve->add_subcommand("exact", "branch-and-bound exact cover");
    auto file = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(-1);
    exact->add_option("--instance", *file)->required();
    exact->add_option("--bound", *bound, "search up to this size (default |S|)");
    exact->callback([=, &g]() {
      auto inst = load_instance_file(*file);
      int b = *bound < 0 ? static_cast<int>(inst.set_ids.size()) : *bound;
      auto res = exact_opt(inst, b, g.budget());
      if (res.status == OptStatus::kFound) {
        std::cout << "opt=" << res.opt << " witness=";
        for (std::size_t i = 0; i < res.witness.size(); ++i)
          std::cout << (i ? "," : "") << inst.set_ids[res.witness[i]];
        std::cout << "\n";
      } else if (res.status == OptStatus::kExceedsBound) {
        std::cout << "opt>" << b << "\n";
      } else {
        std::cout << "infeasible\n";
      }
    });

    auto* greedy = solve->add_subcommand("greedy", "greedy cover");
    auto file2 = std::make_shared<std::string>();
    greedy->add_option("--instance", *file2)->required();
    greedy->callback([=]() {
      auto inst = load_instance_file(*file2);
      auto res = greedy_cover(inst);
      std::cout << "size=" << res.size << " witness=";
      for (std::size_t i = 0; i < res.witness.size(); ++i)
        std::cout << (i ? "," : "") << inst.set_ids[res.witness[i]];
      std::cout << "\n";
    });
  }

  // verify pipeline
  auto* verify = app.add_subcommand("verify", "check pipeline contracts");
  verify->require_subcommand(1);
  {
    auto* vp = verify->add_subcommand("pipeline", "verify a provenance sidecar");
    auto prov = std::make_shared<std::string>();
    vp->add_option("--provenance", *prov)->required();
    vp->callback([=, &g, &exit_code]() {
      auto verdict = verify_pipeline_file(*prov, g.budget());
      std::cout << verdict.to_text();
      exit_code = verdict.exit_code();
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
