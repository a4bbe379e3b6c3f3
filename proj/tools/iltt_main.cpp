// Copyright 2026 the ILTT toolkit authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "iltt/domination.hpp"
#include "iltt/embed.hpp"
#include "iltt/generate.hpp"
#include "iltt/hamilton.hpp"
#include "iltt/io.hpp"
#include "iltt/metrics.hpp"
#include "iltt/motifs.hpp"
#include "iltt/parallel.hpp"
#include "iltt/spectral.hpp"
#include "iltt/verify.hpp"

namespace {

using iltt::ModelKind;
using iltt::Tournament;
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::uint64_t default_cap_from_env() {
  if (const char* env = std::getenv("ILTT_NODE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 2) return v;
  }
  return iltt::kDefaultNodeCap;
}

// Base specs: c3 | linear:N | random:N:SEED | path to an edge-list/DOT file.
Tournament load_base(const std::string& spec) {
  if (spec == "c3") return iltt::make_directed_3_cycle();
  if (spec.rfind("linear:", 0) == 0) {
    return iltt::make_linear_order(
        static_cast<std::uint32_t>(std::stoul(spec.substr(7))));
  }
  if (spec.rfind("random:", 0) == 0) {
    const auto rest = spec.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw iltt::DomainError("random base spec needs random:N:SEED");
    }
    return iltt::make_random(
        static_cast<std::uint32_t>(std::stoul(rest.substr(0, colon))),
        std::stoull(rest.substr(colon + 1)));
  }
  return iltt::read_tournament_file(spec);
}

json wiener_json(iltt::u128 w) {
  if (iltt::fits_u64(w)) return static_cast<std::uint64_t>(w);
  return iltt::to_string(w);
}

json summary_json(const iltt::DistanceSummary& s) {
  json j;
  j["order"] = s.order;
  j["strong"] = s.strong;
  j["diameter"] = s.diameter;
  j["alpha"] = s.alpha;
  if (s.wiener) j["wiener"] = wiener_json(*s.wiener);
  if (s.avg_distance) {
    j["average_distance"] = {{"num", s.avg_distance->num},
                             {"den", s.avg_distance->den},
                             {"value", s.avg_distance->value}};
  }
  return j;
}

struct CommonOpts {
  std::uint64_t cap = default_cap_from_env();
  unsigned threads = iltt::default_thread_count();
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--cap", c.cap, "node cap (env ILTT_NODE_CAP)")
      ->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
  cmd->add_option("--threads", c.threads, "worker threads");
}

int cmd_generate(const std::string& base_spec, const std::string& model_name,
                 std::uint32_t steps, const std::string& format,
                 const CommonOpts& common) {
  const auto model = iltt::parse_model(model_name);
  if (!model) throw iltt::DomainError("unknown model: " + model_name);
  const Tournament base = load_base(base_spec);
  const auto trace = iltt::iterate(base, *model, steps, {common.cap, false});
  const Tournament& out = trace.final_tournament();
  std::cout << (format == "dot" ? iltt::to_dot(out) : iltt::to_edge_list(out));
  return 0;
}

int cmd_analyze(const std::optional<std::string>& in_file,
                const std::optional<std::string>& base_spec,
                const std::optional<std::string>& model_name,
                std::uint32_t steps, const CommonOpts& common) {
  if (in_file.has_value() == base_spec.has_value()) {
    throw iltt::DomainError("analyze needs exactly one of --in or --base");
  }
  const Tournament base =
      in_file ? iltt::read_tournament_file(*in_file) : load_base(*base_spec);

  std::optional<ModelKind> model;
  if (model_name) {
    model = iltt::parse_model(*model_name);
    if (!model) throw iltt::DomainError("unknown model: " + *model_name);
  }
  if (steps > 0 && !model) {
    throw iltt::DomainError("--steps needs --model");
  }

  const Tournament g =
      model ? iltt::iterate(base, *model, steps, {common.cap, false})
                  .final_tournament()
            : base;
  const iltt::DistanceSummary summary = iltt::summarize(g, common.threads);

  json j;
  j["schema_version"] = kSchemaVersion;
  j.update(summary_json(summary));

  if (model && steps >= 1) {
    const iltt::DistanceSummary base_summary =
        iltt::summarize(base, common.threads);
    json gen;
    gen["model"] = iltt::to_string(*model);
    gen["steps"] = steps;
    gen["base_order"] = base.order();
    gen["base_alpha"] = base_summary.alpha;
    if (base_summary.wiener) gen["base_wiener"] = wiener_json(*base_summary.wiener);
    j["generation"] = gen;

    // Closed-form predictors exist for strong bases of order >= 3.
    if (base_summary.strong && base.order() >= 3 && summary.wiener) {
      const iltt::u128 predicted =
          *model == ModelKind::kIltt
              ? iltt::predict_wiener_iltt(base.order(), *base_summary.wiener,
                                          steps)
              : iltt::predict_wiener_ilttd(base.order(), base_summary.alpha,
                                           steps);
      json p;
      p["closed_form"] = wiener_json(predicted);
      p["match"] = predicted == *summary.wiener;
      j["predictors"] = {{*model == ModelKind::kIltt ? "wiener_iltt"
                                                     : "wiener_ilttd",
                          p}};
    }
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_spectrum(const std::optional<std::string>& in_file,
                 const std::optional<std::string>& base_spec,
                 std::uint32_t steps, const std::string& method,
                 const iltt::SpectralTolerances& tol, const CommonOpts& common) {
  if (in_file.has_value() == base_spec.has_value()) {
    throw iltt::DomainError("spectrum needs exactly one of --in or --base");
  }
  const Tournament base =
      in_file ? iltt::read_tournament_file(*in_file) : load_base(*base_spec);

  auto print = [](const iltt::Spectrum& s) {
    for (const auto& v : s.values) {
      std::printf("%.17g,%.17g,%s\n", v.real(), v.imag(),
                  iltt::to_string(s.provenance));
    }
  };
  std::printf("re,im,provenance\n");
  if (method == "direct" || method == "both") {
    const Tournament g =
        steps == 0 ? base
                   : iltt::iterate(base, ModelKind::kIltt, steps,
                                   {common.cap, false})
                         .final_tournament();
    print(iltt::direct_spectrum(g, tol));
  }
  if (method == "recurrence" || method == "both") {
    const iltt::Spectrum base_direct = iltt::direct_spectrum(base, tol);
    print(iltt::recurrence_spectrum(iltt::nonzero_values(base_direct, tol.zero),
                                    steps));
  }
  return 0;
}

int cmd_hamilton(const std::string& in_file, std::uint32_t lift_steps,
                 const CommonOpts& common) {
  const Tournament g = iltt::read_tournament_file(in_file);
  iltt::HamiltonCycle cycle = iltt::find_hamilton_cycle(g);
  Tournament current = g;
  for (std::uint32_t t = 0; t < lift_steps; ++t) {
    cycle = iltt::lift_hamilton_cycle(cycle, ModelKind::kIltt, current.order());
    current = iltt::step(current, ModelKind::kIltt, common.cap).tournament;
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["order"] = g.order();
  j["lifted_steps"] = lift_steps;
  j["final_order"] = current.order();
  j["cycle"] = cycle.nodes;
  j["valid"] = iltt::is_valid_hamilton_cycle(current, cycle);
  std::cout << j.dump(2) << "\n";
  return 0;
}

json lift_outcome_json(const iltt::LiftOutcome& o) {
  return {{"validated", o.validated},
          {"set", o.set},
          {"uncovered", o.uncovered}};
}

int cmd_dominate(const std::string& in_file, bool check_lifts,
                 std::uint32_t steps, const CommonOpts& common) {
  const Tournament g = iltt::read_tournament_file(in_file);
  const iltt::DominationResult r = iltt::domination_numbers(g);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["order"] = g.order();
  j["gamma_in"] = r.gamma_in;
  j["gamma_out"] = r.gamma_out;
  j["witness_in"] = r.witness_in;
  j["witness_out"] = r.witness_out;

  if (check_lifts) {
    json checks;
    for (ModelKind model : {ModelKind::kIltt, ModelKind::kIlttDual}) {
      const auto trace = iltt::iterate(g, model, steps, {common.cap, false});
      const iltt::DominationResult top =
          iltt::domination_numbers(trace.final_tournament());
      json per_model;
      per_model["gamma_in"] = top.gamma_in;
      per_model["gamma_out"] = top.gamma_out;
      per_model["in_number_preserved"] = top.gamma_in == r.gamma_in;
      per_model["out_number_preserved"] = top.gamma_out == r.gamma_out;
      per_model["projection_preserves_in"] =
          iltt::is_in_dominating(g, iltt::project_dominating_set(
                                        top.witness_in, trace,
                                        iltt::DominationKind::kIn));
      per_model["projection_preserves_out"] =
          iltt::is_out_dominating(g, iltt::project_dominating_set(
                                         top.witness_out, trace,
                                         iltt::DominationKind::kOut));
      if (model == ModelKind::kIltt) {
        per_model["lift_in_clones"] =
            lift_outcome_json(iltt::lift_in_dominating(r.witness_in, trace));
        per_model["lift_out_identity"] =
            lift_outcome_json(iltt::lift_out_dominating(r.witness_out, trace));
      }
      checks[iltt::to_string(model)] = per_model;
    }
    j["lift_checks"] = checks;
    j["steps"] = steps;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_motifs(const std::string& in_file, std::uint64_t sample,
               std::uint64_t seed) {
  const Tournament g = iltt::read_tournament_file(in_file);
  const iltt::TriadCensus triads = iltt::triad_census(g);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["order"] = g.order();
  j["triads"] = {{"transitive", triads.transitive}, {"cyclic", triads.cyclic}};
  if (g.order() >= 4) {
    if (sample > 0) {
      const auto est = iltt::tetrad_census_sampled(g, sample, seed);
      json t;
      for (std::size_t k = 0; k < iltt::kTetradClassCount; ++k) {
        t[iltt::to_string(static_cast<iltt::TetradClass>(k))] = {
            {"estimate", est.estimate[k]}, {"std_error", est.std_error[k]}};
      }
      j["tetrads_estimate"] = t;
      j["samples"] = est.samples;
      j["seed"] = est.seed;
    } else {
      const auto census = iltt::tetrad_census(g);
      json t;
      for (std::size_t k = 0; k < iltt::kTetradClassCount; ++k) {
        t[iltt::to_string(static_cast<iltt::TetradClass>(k))] =
            census.counts[k];
      }
      j["tetrads"] = t;
    }
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_embed(const std::string& target_spec, const std::string& base_spec,
              const std::string& model_name, const CommonOpts& common) {
  if (model_name == "iltt") {
    // A transitive base never grows a directed 3-cycle under the copying
    // model, so no copying-model family can contain every tournament.
    throw iltt::DomainError(
        "embedding uses the dual model only: copying-model families are not "
        "universal (a transitive base stays free of directed 3-cycles)");
  }
  if (model_name != "ilttd") {
    throw iltt::DomainError("unknown model: " + model_name);
  }
  const Tournament target = load_base(target_spec);
  const Tournament base = load_base(base_spec);
  const iltt::EmbeddingCertificate cert =
      iltt::embed_target(target, base, common.cap);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["target_order"] = target.order();
  j["base_order"] = base.order();
  j["model"] = iltt::to_string(cert.model);
  j["reached_step"] = cert.reached_step;
  j["kappa"] = cert.kappa;
  j["node_map"] = cert.node_map;
  j["valid"] = true;  // embed_target validates before returning
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(std::uint64_t seed, const iltt::SpectralTolerances& tol,
               const CommonOpts& common) {
  iltt::VerifyOptions opts;
  opts.seed = seed;
  opts.node_cap = common.cap;
  opts.threads = common.threads;
  opts.spectral = tol;
  const iltt::VerdictReport report = iltt::run_verify(opts);
  std::cout << iltt::to_json(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tournament generation and structural analysis for the "
               "iterated local transitivity models"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "grow a tournament and print it");
  std::string gen_base = "c3", gen_model = "iltt", gen_format = "edgelist";
  std::uint32_t gen_steps = 1;
  CommonOpts gen_common;
  gen->add_option("--base", gen_base, "c3 | linear:N | random:N:SEED | file");
  gen->add_option("--model", gen_model, "iltt | ilttd");
  gen->add_option("--steps", gen_steps, "number of cloning steps");
  gen->add_option("--out", gen_format, "edgelist | dot")
      ->check(CLI::IsMember({"edgelist", "dot"}));
  add_common(gen, gen_common);

  // analyze
  auto* ana = app.add_subcommand("analyze", "distance/Wiener report as JSON");
  std::optional<std::string> ana_in, ana_base, ana_model;
  std::uint32_t ana_steps = 0;
  CommonOpts ana_common;
  ana->add_option("--in", ana_in, "input tournament file");
  ana->add_option("--base", ana_base, "generate first: c3 | linear:N | random:N:SEED | file");
  ana->add_option("--model", ana_model, "iltt | ilttd");
  ana->add_option("--steps", ana_steps, "cloning steps before analysis");
  add_common(ana, ana_common);

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "eigenvalues as CSV");
  std::optional<std::string> sp_in, sp_base;
  std::uint32_t sp_steps = 0;
  std::string sp_method = "both";
  iltt::SpectralTolerances sp_tol;
  CommonOpts sp_common;
  spec->add_option("--in", sp_in, "input tournament file");
  spec->add_option("--base", sp_base, "c3 | linear:N | random:N:SEED | file");
  spec->add_option("--steps", sp_steps, "cloning steps (copying model)");
  spec->add_option("--method", sp_method, "direct | recurrence | both")
      ->check(CLI::IsMember({"direct", "recurrence", "both"}));
  spec->add_option("--tol-eig", sp_tol.eig, "solver deflation tolerance");
  spec->add_option("--tol-zero", sp_tol.zero, "zero filtering threshold");
  spec->add_option("--tol-match", sp_tol.match, "set matching tolerance");
  add_common(spec, sp_common);

  // hamilton
  auto* ham = app.add_subcommand("hamilton", "find and optionally lift a "
                                             "Hamilton cycle");
  std::string ham_in;
  std::uint32_t ham_lift = 0;
  CommonOpts ham_common;
  ham->add_option("--in", ham_in, "input tournament file")->required();
  ham->add_option("--lift", ham_lift, "lift the cycle this many steps");
  add_common(ham, ham_common);

  // dominate
  auto* dom = app.add_subcommand("dominate", "exact domination numbers");
  std::string dom_in;
  bool dom_check_lifts = false;
  std::uint32_t dom_steps = 1;
  CommonOpts dom_common;
  dom->add_option("--in", dom_in, "input tournament file")->required();
  dom->add_flag("--check-lifts", dom_check_lifts,
                "run set-transfer checks against the iterates");
  dom->add_option("--steps", dom_steps, "steps for --check-lifts");
  add_common(dom, dom_common);

  // motifs
  auto* mot = app.add_subcommand("motifs", "triad/tetrad census as JSON");
  std::string mot_in;
  std::uint64_t mot_sample = 0, mot_seed = 1;
  bool mot_exact = false;
  mot->add_option("--in", mot_in, "input tournament file")->required();
  mot->add_flag("--exact", mot_exact, "exact counts (the default)");
  mot->add_option("--sample", mot_sample,
                  "sample this many quadruples instead of exact counting")
      ->excludes("--exact");
  mot->add_option("--seed", mot_seed, "sampling seed");

  // embed
  auto* emb = app.add_subcommand("embed", "embed a target into a dual-model "
                                          "iterate");
  std::string emb_target, emb_base = "c3", emb_model = "ilttd";
  CommonOpts emb_common;
  emb->add_option("--target", emb_target, "target tournament (spec or file)")
      ->required();
  emb->add_option("--base", emb_base, "c3 | linear:N | random:N:SEED | file");
  emb->add_option("--model", emb_model, "must be ilttd");
  add_common(emb, emb_common);

  // verify
  auto* ver = app.add_subcommand("verify", "run every structural-claim suite");
  std::uint64_t ver_seed = 20260811;
  iltt::SpectralTolerances ver_tol;
  CommonOpts ver_common;
  ver->add_option("--seed", ver_seed, "corpus seed");
  ver->add_option("--tol-eig", ver_tol.eig, "solver deflation tolerance");
  ver->add_option("--tol-zero", ver_tol.zero, "zero filtering threshold");
  ver->add_option("--tol-match", ver_tol.match, "set matching tolerance");
  add_common(ver, ver_common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_generate(gen_base, gen_model, gen_steps, gen_format,
                          gen_common);
    }
    if (ana->parsed()) {
      return cmd_analyze(ana_in, ana_base, ana_model, ana_steps, ana_common);
    }
    if (spec->parsed()) {
      return cmd_spectrum(sp_in, sp_base, sp_steps, sp_method, sp_tol,
                          sp_common);
    }
    if (ham->parsed()) return cmd_hamilton(ham_in, ham_lift, ham_common);
    if (dom->parsed()) {
      return cmd_dominate(dom_in, dom_check_lifts, dom_steps, dom_common);
    }
    if (mot->parsed()) return cmd_motifs(mot_in, mot_sample, mot_seed);
    if (emb->parsed()) {
      return cmd_embed(emb_target, emb_base, emb_model, emb_common);
    }
    if (ver->parsed()) return cmd_verify(ver_seed, ver_tol, ver_common);
  } catch (const iltt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
