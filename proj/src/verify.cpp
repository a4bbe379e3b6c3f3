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

#include "iltt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "iltt/domination.hpp"
#include "iltt/embed.hpp"
#include "iltt/generate.hpp"
#include "iltt/hamilton.hpp"
#include "iltt/metrics.hpp"
#include "iltt/motifs.hpp"

namespace iltt {

namespace {

std::string describe(const Tournament& g) {
  std::ostringstream out;
  out << "order " << g.order();
  if (g.order() <= 8) {
    out << " [";
    bool first = true;
    for (std::uint32_t i = 0; i < g.order(); ++i) {
      for (std::uint32_t j = i + 1; j < g.order(); ++j) {
        if (!first) out << " ";
        first = false;
        if (g.arc(i, j)) {
          out << i << ">" << j;
        } else {
          out << j << ">" << i;
        }
      }
    }
    out << "]";
  }
  return out.str();
}

void fail(VerdictEntry& e, const std::string& counterexample) {
  if (e.pass) {
    e.pass = false;
    e.counterexample = counterexample;
  }
}

// Deterministic input collections derived from the run seed.
struct Corpus {
  std::vector<Tournament> mixed;       // orders 3..8, any strongness, >= 102
  std::vector<Tournament> strong_mid;  // strong, orders 3..8 (plus C3 first)
  std::vector<Tournament> strong_small;  // strong, orders 3..6 (C3 first)
  std::vector<Tournament> all_order3;  // the 8 labeled 3-node tournaments
};

Corpus build_corpus(std::uint64_t seed) {
  Corpus c;
  std::mt19937_64 rng(seed);
  for (std::uint32_t n = 3; n <= 8; ++n) {
    for (int k = 0; k < 17; ++k) c.mixed.push_back(make_random(n, rng()));
  }
  c.strong_mid.push_back(make_directed_3_cycle());
  for (std::uint32_t n = 3; n <= 8; ++n) {
    int found = 0;
    while (found < 2) {
      Tournament g = make_random(n, rng());
      if (is_strong(g)) {
        c.strong_mid.push_back(std::move(g));
        ++found;
      }
    }
  }
  c.strong_small.push_back(make_directed_3_cycle());
  for (std::uint32_t n = 3; n <= 6; ++n) {
    int found = 0;
    while (found < 2) {
      Tournament g = make_random(n, rng());
      if (is_strong(g)) {
        c.strong_small.push_back(std::move(g));
        ++found;
      }
    }
  }
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    c.all_order3.push_back(Tournament::build(
        3, [bits](std::uint32_t i, std::uint32_t j) {
          const std::uint32_t rank = i + j - 1;  // {0,1}->0 {0,2}->1 {1,2}->2
          return ((bits >> rank) & 1u) != 0;
        }));
  }
  return c;
}

u128 measured_wiener(const Tournament& g, unsigned threads) {
  const DistanceSummary s = summarize(g, threads);
  if (!s.wiener) throw DomainError("expected a strong tournament");
  return *s.wiener;
}

// ---- individual suites ----------------------------------------------------

void suite_strongness_equivalence(const VerifyOptions& opts, const Corpus& c,
                                  VerdictEntry& e) {
  for (std::size_t i = 0; i < c.mixed.size(); ++i) {
    const Tournament& base = c.mixed[i];
    const bool strong0 = is_strong(base);
    GenerationTrace trace =
        iterate(base, ModelKind::kIltt, 3, {opts.node_cap, true});
    for (std::uint32_t t = 1; t <= 3; ++t) {
      ++e.inputs_tested;
      if (is_strong(trace.snapshot(t)) != strong0) {
        fail(e, "base " + describe(base) + " t=" + std::to_string(t) +
                   ": strongness not preserved");
      }
    }
  }
}

void suite_dual_no_sink_strong(const VerifyOptions& opts, const Corpus& c,
                               VerdictEntry& e) {
  for (const Tournament& base : c.mixed) {
    if (has_sink(base)) continue;
    GenerationTrace trace =
        iterate(base, ModelKind::kIlttDual, 3, {opts.node_cap, true});
    for (std::uint32_t t = 1; t <= 3; ++t) {
      ++e.inputs_tested;
      if (!is_strong(trace.snapshot(t))) {
        fail(e, "sink-free base " + describe(base) + " t=" + std::to_string(t) +
                   ": dual-model iterate not strong");
      }
    }
  }
}

void suite_distance_persistence(const VerifyOptions& opts, const Corpus& c,
                                VerdictEntry& e) {
  std::uint64_t step0_anomalies = 0;
  for (const Tournament& base : c.strong_small) {
    GenerationTrace trace =
        iterate(base, ModelKind::kIltt, 4, {opts.node_cap, true});
    for (std::uint32_t t = 0; t <= 3; ++t) {
      const Tournament& g = trace.snapshot(t);
      const Tournament& h = trace.snapshot(t + 1);
      const std::uint32_t n = g.order();
      const auto dg = all_pairs_distances(g, opts.threads);
      const auto dh = all_pairs_distances(h, opts.threads);
      bool violated = false;
      for (std::uint32_t x = 0; x < n && !violated; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
          if (x == y) continue;
          const std::uint32_t d = dg[x * n + y];
          const std::uint32_t m = 2 * n;
          if (dh[x * m + y] != d || dh[x * m + (n + y)] != d ||
              dh[(n + x) * m + y] != d || dh[(n + x) * m + (n + y)] != d) {
            violated = true;
            break;
          }
        }
      }
      if (t == 0) {
        // Stated for t >= 1; the first transition is observed, not asserted.
        if (violated) ++step0_anomalies;
        continue;
      }
      ++e.inputs_tested;
      if (violated) {
        fail(e, "base " + describe(base) + ": four-way distance equality "
                   "broken between steps " + std::to_string(t) + " and " +
                   std::to_string(t + 1));
      }
    }
  }
  e.notes = "step 0->1 transitions observed report-only: " +
            std::to_string(step0_anomalies) + " anomalies";
}

void suite_diameter_bounds(const VerifyOptions& opts, const Corpus& c,
                           VerdictEntry& e) {
  for (const Tournament& base : c.strong_small) {
    const std::uint32_t diam0 = summarize(base, opts.threads).diameter;
    for (ModelKind model : {ModelKind::kIltt, ModelKind::kIlttDual}) {
      GenerationTrace trace = iterate(base, model, 3, {opts.node_cap, true});
      for (std::uint32_t t = 1; t <= 3; ++t) {
        ++e.inputs_tested;
        const Tournament& g = trace.snapshot(t);
        const std::uint32_t diam = summarize(g, opts.threads).diameter;
        const std::uint32_t bound =
            model == ModelKind::kIltt ? std::max(diam0, 3u) : diam0;
        if (diam > bound) {
          fail(e, "base " + describe(base) + " model " + to_string(model) +
                     " t=" + std::to_string(t) + ": diameter " +
                     std::to_string(diam) + " exceeds bound " +
                     std::to_string(bound));
        }
        // Clone distances: 3 in the copying model, 2 in the dual model.
        const std::uint32_t expected =
            model == ModelKind::kIltt ? 3u : 2u;
        const std::uint32_t half = g.order() / 2;
        for (std::uint32_t x = 0; x < half; ++x) {
          const auto row = distances_from(g, x);
          if (row[half + x] != expected) {
            fail(e, "base " + describe(base) + " model " + to_string(model) +
                       " t=" + std::to_string(t) + ": d(x, clone(x)) = " +
                       std::to_string(row[half + x]) + " for x=" +
                       std::to_string(x) + ", expected " +
                       std::to_string(expected));
            break;
          }
        }
      }
    }
  }
}

void suite_wiener_recurrence(const VerifyOptions& opts, const Corpus& c,
                             VerdictEntry& e) {
  bool fault_pending = opts.inject_wiener_fault;
  for (const Tournament& base : c.strong_mid) {
    const std::uint32_t n = base.order();
    GenerationTrace trace =
        iterate(base, ModelKind::kIltt, 4, {opts.node_cap, true});
    std::vector<u128> w(5);
    for (std::uint32_t t = 0; t <= 4; ++t) {
      w[t] = measured_wiener(trace.snapshot(t), opts.threads);
    }
    for (std::uint32_t t = 1; t <= 3; ++t) {
      ++e.inputs_tested;
      u128 lhs = w[t + 1];
      if (fault_pending) {
        lhs += 1;  // test-only corruption; must surface below
        fault_pending = false;
      }
      const u128 rhs = 4 * ((static_cast<u128>(n) << t) + w[t]);
      if (lhs != rhs) {
        fail(e, "base " + describe(base) + " t=" + std::to_string(t) +
                   ": W(t+1) = " + to_string(lhs) + " but 4(2^t n + W(t)) = " +
                   to_string(rhs));
      }
    }
  }
}

void suite_wiener_closed_form(const VerifyOptions& opts, const Corpus& c,
                              VerdictEntry& e) {
  for (const Tournament& base : c.strong_mid) {
    const std::uint32_t n = base.order();
    const u128 w0 = measured_wiener(base, opts.threads);
    GenerationTrace trace =
        iterate(base, ModelKind::kIltt, 4, {opts.node_cap, true});
    for (std::uint32_t t = 1; t <= 4; ++t) {
      ++e.inputs_tested;
      const u128 measured = measured_wiener(trace.snapshot(t), opts.threads);
      const u128 predicted = predict_wiener_iltt(n, w0, t);
      if (measured != predicted) {
        fail(e, "base " + describe(base) + " t=" + std::to_string(t) +
                   ": measured " + to_string(measured) + " vs closed form " +
                   to_string(predicted));
      }
    }
  }
}

void suite_dual_wiener_closed_form(const VerifyOptions& opts, const Corpus& c,
                                   VerdictEntry& e) {
  for (const Tournament& base : c.strong_mid) {
    const std::uint32_t n = base.order();
    const std::uint64_t alpha = count_alpha(base);
    GenerationTrace trace =
        iterate(base, ModelKind::kIlttDual, 4, {opts.node_cap, true});
    for (std::uint32_t t = 1; t <= 4; ++t) {
      ++e.inputs_tested;
      const u128 measured = measured_wiener(trace.snapshot(t), opts.threads);
      const u128 predicted = predict_wiener_ilttd(n, alpha, t);
      if (measured != predicted) {
        fail(e, "base " + describe(base) + " t=" + std::to_string(t) +
                   ": measured " + to_string(measured) + " vs closed form " +
                   to_string(predicted));
      }
    }
  }
}

void suite_dual_average_distance_limit(const VerifyOptions& opts,
                                       const Corpus&, VerdictEntry& e) {
  const Tournament c3 = make_directed_3_cycle();
  const Tournament g =
      iterate(c3, ModelKind::kIlttDual, 6, {opts.node_cap, false})
          .final_tournament();
  const DistanceSummary s = summarize(g, opts.threads);
  ++e.inputs_tested;
  if (!s.avg_distance) {
    fail(e, "dual iterate of the 3-cycle at t=6 is not strong");
    return;
  }
  const double l = s.avg_distance->value;
  e.notes = "average distance at t=6: " + std::to_string(l);
  if (std::fabs(l - 1.5) > 0.02) {
    fail(e, "average distance " + std::to_string(l) +
               " not within 0.02 of 3/2");
  }
}

void suite_linear_order_embedding(const VerifyOptions& opts, const Corpus& c,
                                  VerdictEntry& e) {
  std::vector<Tournament> bases{make_directed_3_cycle(), make_linear_order(3),
                                c.mixed[20]};
  for (const Tournament& base : bases) {
    for (ModelKind model : {ModelKind::kIltt, ModelKind::kIlttDual}) {
      GenerationTrace trace = iterate(base, model, 5, {opts.node_cap, true});
      for (std::uint32_t k = 1; k <= 5; ++k) {
        ++e.inputs_tested;
        const auto witness = find_linear_order(trace, k);
        const Tournament sub = induced(trace.snapshot(k), witness);
        if (!(sub == make_linear_order(k))) {
          fail(e, "base " + describe(base) + " model " + to_string(model) +
                     " k=" + std::to_string(k) +
                     ": witness does not induce the linear order");
        }
      }
    }
  }
}

void suite_single_arc_flip(const VerifyOptions& opts, const Corpus& c,
                           VerdictEntry& e) {
  std::vector<Tournament> bases{make_directed_3_cycle(), make_linear_order(3),
                                c.mixed[40]};
  for (const Tournament& base : bases) {
    GenerationTrace trace =
        iterate(base, ModelKind::kIlttDual, 5, {opts.node_cap, true});
    const std::uint32_t k = 4;
    const auto witness = find_linear_order(trace, k);
    const Tournament before = induced(trace.snapshot(k), witness);
    for (std::size_t u = 0; u < k; ++u) {
      for (std::size_t v = u + 1; v < k; ++v) {
        ++e.inputs_tested;
        const auto flipped = flip_one_arc(
            witness, u, v, static_cast<std::uint32_t>(trace.order_at(k)));
        const Tournament after = induced(trace.snapshot(k + 1), flipped);
        bool exact = differ_by(before, after) == 1 &&
                     after.arc(static_cast<NodeId>(v), static_cast<NodeId>(u)) ==
                         before.arc(static_cast<NodeId>(u), static_cast<NodeId>(v));
        if (!exact) {
          fail(e, "base " + describe(base) + " flip (" + std::to_string(u) +
                     "," + std::to_string(v) +
                     "): induced subtournament did not flip exactly that arc");
        }
      }
    }
  }
}

void suite_universality_bound(const VerifyOptions& opts, const Corpus& c,
                              VerdictEntry& e) {
  std::vector<Tournament> targets = c.all_order3;
  for (std::size_t k = 0; k < kTetradClassCount; ++k) {
    targets.push_back(tetrad_representative(static_cast<TetradClass>(k)));
  }
  const Tournament base_c3 = make_directed_3_cycle();
  const Tournament base_l3 = make_linear_order(3);
  for (const Tournament& target : targets) {
    for (const Tournament* base : {&base_c3, &base_l3}) {
      ++e.inputs_tested;
      const EmbeddingCertificate cert =
          embed_target(target, *base, opts.node_cap);
      if (cert.reached_step > cert.kappa ||
          !validate_certificate(cert, opts.node_cap)) {
        fail(e, "target " + describe(target) + " base " + describe(*base) +
                   ": certificate invalid or bound exceeded");
        continue;
      }
      if (target == make_linear_order(target.order()) &&
          cert.reached_step != target.order()) {
        fail(e, "linear-order target of order " +
                   std::to_string(target.order()) + " reached step " +
                   std::to_string(cert.reached_step) + ", expected exactly n");
      }
    }
  }
}

bool exhaustive_hamilton(const Tournament& g) {
  const std::uint32_t n = g.order();
  if (n < 3) return false;
  std::vector<NodeId> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  std::function<bool()> extend = [&]() -> bool {
    if (path.size() == n) return g.arc(path.back(), 0);
    for (NodeId v = 1; v < n; ++v) {
      if (used[v] || !g.arc(path.back(), v)) continue;
      used[v] = true;
      path.push_back(v);
      if (extend()) return true;
      path.pop_back();
      used[v] = false;
    }
    return false;
  };
  return extend();
}

void suite_hamilton_lifting(const VerifyOptions& opts, const Corpus& c,
                            VerdictEntry& e) {
  for (const Tournament& base : c.strong_small) {
    HamiltonCycle cycle = find_hamilton_cycle(base);
    for (ModelKind model : {ModelKind::kIltt, ModelKind::kIlttDual}) {
      Tournament cur = base;
      HamiltonCycle cyc = cycle;
      for (std::uint32_t t = 0; t <= 3; ++t) {
        ++e.inputs_tested;
        const HamiltonCycle lifted =
            lift_hamilton_cycle(cyc, model, cur.order());
        const Tournament next = step(cur, model, opts.node_cap).tournament;
        if (!is_valid_hamilton_cycle(next, lifted)) {
          fail(e, "base " + describe(base) + " model " + to_string(model) +
                     " t=" + std::to_string(t) + ": lifted cycle invalid");
          break;
        }
        cur = next;
        cyc = lifted;
      }
    }
  }
  // Existence criterion agrees with exhaustive search on small orders.
  std::mt19937_64 rng(opts.seed ^ 0x48414d49u);
  for (std::uint32_t bits = 0; bits < 64; ++bits) {
    const Tournament g = Tournament::build(
        4, [bits](std::uint32_t i, std::uint32_t j) {
          const std::uint32_t rank[4][4] = {{0, 0, 1, 2}, {0, 0, 3, 4},
                                            {0, 0, 0, 5}, {0, 0, 0, 0}};
          return ((bits >> rank[i][j]) & 1u) != 0;
        });
    ++e.inputs_tested;
    if (is_hamiltonian(g) != exhaustive_hamilton(g)) {
      fail(e, "order-4 " + describe(g) + ": existence criterion disagrees "
                 "with exhaustive search");
    }
  }
  for (std::uint32_t n = 5; n <= 6; ++n) {
    for (int k = 0; k < 250; ++k) {
      const Tournament g = make_random(n, rng());
      ++e.inputs_tested;
      if (is_hamiltonian(g) != exhaustive_hamilton(g)) {
        fail(e, describe(g) + ": existence criterion disagrees with "
                   "exhaustive search");
      }
    }
  }
}

void suite_spectral_recurrence(const VerifyOptions& opts, const Corpus&,
                               VerdictEntry& e) {
  std::mt19937_64 rng(opts.seed ^ 0x53504543u);
  std::vector<Tournament> bases{make_directed_3_cycle(), make_linear_order(4)};
  for (std::uint32_t n = 3; n <= 6; ++n) {
    for (int k = 0; k < 2; ++k) bases.push_back(make_random(n, rng()));
  }
  for (const Tournament& base : bases) {
    for (std::uint32_t t = 0; t <= 3; ++t) {
      ++e.inputs_tested;
      const RecurrenceReport rep =
          validate_recurrence(base, t, opts.spectral, opts.node_cap);
      if (!rep.matched) {
        fail(e, "base " + describe(base) + " t=" + std::to_string(t) +
                   ": recurrence/direct set mismatch " +
                   std::to_string(rep.max_set_distance));
        continue;
      }
      if (t >= 1 && rep.min_distance_to_minus_half <= 1e-8) {
        fail(e, "base " + describe(base) + " t=" + std::to_string(t) +
                   ": eigenvalue within 1e-8 of -1/2");
        continue;
      }
      // Solver sanity: sum of eigenvalues = trace = 0 and sum of squares =
      // trace(A^2) = 0 (no loops, no 2-cycles).
      const Tournament g =
          t == 0 ? base
                 : iterate(base, ModelKind::kIltt, t, {opts.node_cap, false})
                       .final_tournament();
      const Spectrum s = direct_spectrum(g, opts.spectral);
      std::complex<double> sum{0, 0}, sum_sq{0, 0};
      for (const auto& v : s.values) {
        sum += v;
        sum_sq += v * v;
      }
      const double budget = static_cast<double>(g.order()) * 1e-9;
      if (std::abs(sum) > budget || std::abs(sum_sq) > budget) {
        fail(e, "base " + describe(base) + " t=" + std::to_string(t) +
                   ": trace identities violated (|sum|=" +
                   std::to_string(std::abs(sum)) + ", |sum of squares|=" +
                   std::to_string(std::abs(sum_sq)) + ")");
      }
    }
  }
}

void suite_domination_set_transfer(const VerifyOptions& opts, const Corpus& c,
                                   VerdictEntry& e) {
  std::mt19937_64 rng(opts.seed ^ 0x444f4d31u);
  std::vector<Tournament> bases = c.all_order3;
  for (std::uint32_t n = 4; n <= 5; ++n) {
    for (int k = 0; k < 2; ++k) bases.push_back(make_random(n, rng()));
  }
  std::uint64_t lifts_validated = 0, lifts_rejected = 0;
  for (const Tournament& base : bases) {
    for (ModelKind model : {ModelKind::kIltt, ModelKind::kIlttDual}) {
      for (std::uint32_t t = 1; t <= 2; ++t) {
        GenerationTrace trace = iterate(base, model, t, {opts.node_cap, false});
        const Tournament& top = trace.final_tournament();

        // Projection transfers both kinds for both models; asserted.
        const DominationResult top_gamma = domination_numbers(top);
        for (DominationKind kind : {DominationKind::kIn, DominationKind::kOut}) {
          ++e.inputs_tested;
          const auto& witness = kind == DominationKind::kIn
                                    ? top_gamma.witness_in
                                    : top_gamma.witness_out;
          try {
            project_dominating_set(witness, trace, kind);
          } catch (const Error& err) {
            fail(e, "base " + describe(base) + " model " + to_string(model) +
                       " t=" + std::to_string(t) +
                       ": projection failed: " + err.what());
          }
        }

        // Minimal sets never pair a node with its clone (stated for the
        // copying model; the dual model genuinely violates it); asserted.
        if (model == ModelKind::kIltt && top.order() <= 12) {
          const StepLineage lin = trace.lineage(t);
          for (DominationKind kind :
               {DominationKind::kIn, DominationKind::kOut}) {
            ++e.inputs_tested;
            for (const auto& s : enumerate_minimal_dominating_sets(top, kind)) {
              for (NodeId v = 0; v < lin.order_before; ++v) {
                const bool has_v =
                    std::find(s.begin(), s.end(), v) != s.end();
                const bool has_clone =
                    std::find(s.begin(), s.end(), lin.clone(v)) != s.end();
                if (has_v && has_clone) {
                  fail(e, "base " + describe(base) + " model " +
                             to_string(model) + " t=" + std::to_string(t) +
                             ": minimal set contains node " +
                             std::to_string(v) + " and its clone");
                }
              }
            }
          }
        }

        // Clone/identity lift constructions are validated and reported,
        // never trusted (their stated one-step transfers do not hold for
        // every input; see the ledger-facing notes field).
        if (model == ModelKind::kIltt) {
          const DominationResult base_gamma = domination_numbers(base);
          std::vector<NodeId> everyone(base.order());
          for (NodeId v = 0; v < base.order(); ++v) everyone[v] = v;
          for (const LiftOutcome& o :
               {lift_in_dominating(base_gamma.witness_in, trace),
                lift_out_dominating(base_gamma.witness_out, trace),
                lift_in_dominating(everyone, trace),
                lift_out_dominating(everyone, trace)}) {
            ++(o.validated ? lifts_validated : lifts_rejected);
          }
        }
      }
    }
  }
  e.notes = "clone/identity lift constructions validated: " +
            std::to_string(lifts_validated) + ", rejected with diagnostics: " +
            std::to_string(lifts_rejected);
}

void suite_domination_numbers(const VerifyOptions& opts, const Corpus& c,
                              VerdictEntry& e) {
  std::mt19937_64 rng(opts.seed ^ 0x444f4d32u);
  std::vector<Tournament> bases = c.all_order3;
  bases.push_back(make_linear_order(4));
  bases.push_back(make_linear_order(5));
  for (std::uint32_t n = 4; n <= 5; ++n) {
    for (int k = 0; k < 3; ++k) bases.push_back(make_random(n, rng()));
  }
  for (const Tournament& base : bases) {
    const DominationResult g0 = domination_numbers(base);
    for (std::uint32_t t = 1; t <= 2; ++t) {
      const Tournament iter_copy =
          iterate(base, ModelKind::kIltt, t, {opts.node_cap, false})
              .final_tournament();
      const Tournament iter_dual =
          iterate(base, ModelKind::kIlttDual, t, {opts.node_cap, false})
              .final_tournament();
      const DominationResult gc = domination_numbers(iter_copy);
      const DominationResult gd = domination_numbers(iter_dual);

      ++e.inputs_tested;
      if (gc.gamma_in != g0.gamma_in || gc.gamma_out != g0.gamma_out) {
        fail(e, "base " + describe(base) + " t=" + std::to_string(t) +
                   ": copying-model domination numbers changed (" +
                   std::to_string(g0.gamma_in) + "," +
                   std::to_string(g0.gamma_out) + ") -> (" +
                   std::to_string(gc.gamma_in) + "," +
                   std::to_string(gc.gamma_out) + ")");
      }
      ++e.inputs_tested;
      if (gd.gamma_out != g0.gamma_out) {
        fail(e, "base " + describe(base) + " t=" + std::to_string(t) +
                   ": stated dual-model out-domination equality fails, " +
                   std::to_string(g0.gamma_out) + " vs " +
                   std::to_string(gd.gamma_out) +
                   " (the in-domination number is what the dual model "
                   "preserves here: " + std::to_string(g0.gamma_in) + " vs " +
                   std::to_string(gd.gamma_in) + ")");
      }
      ++e.inputs_tested;
      if (g0.gamma_in > gd.gamma_in) {
        fail(e, "base " + describe(base) + " t=" + std::to_string(t) +
                   ": dual-model in-domination inequality fails, " +
                   std::to_string(g0.gamma_in) + " > " +
                   std::to_string(gd.gamma_in));
      }
    }
  }
}

struct RegisteredSuite {
  const char* id;
  const char* statement;
  void (*fn)(const VerifyOptions&, const Corpus&, VerdictEntry&);
};

constexpr RegisteredSuite kRegistry[] = {
    {"strongness-equivalence",
     "copying-model iterates of an order >= 3 base are strong iff the base "
     "is strong (t = 1..3)",
     suite_strongness_equivalence},
    {"dual-no-sink-strong",
     "dual-model iterates of a sink-free base are strong (t = 1..3)",
     suite_dual_no_sink_strong},
    {"distance-persistence",
     "for strong bases, original-pair distances persist across a copying "
     "step and transfer to all four original/clone combinations (t = 1..3)",
     suite_distance_persistence},
    {"diameter-bounds",
     "diameter of copying-model iterates <= max(base diameter, 3); dual "
     "model <= base diameter; d(x, clone) = 3 resp. 2",
     suite_diameter_bounds},
    {"wiener-recurrence",
     "W(t+1) = 4(2^t n + W(t)) for strong bases under the copying model",
     suite_wiener_recurrence},
    {"wiener-closed-form",
     "measured Wiener index equals 2^{t+1}(2^t - 1) n + 4^t W0 exactly "
     "(copying model, t = 1..4)",
     suite_wiener_closed_form},
    {"dual-wiener-closed-form",
     "measured Wiener index equals 12 C(2^{t-1} n, 2) + alpha + 3*2^{t-1} n "
     "exactly (dual model, t = 1..4)",
     suite_dual_wiener_closed_form},
    {"dual-average-distance-limit",
     "average distance of dual-model iterates approaches 3/2 (within 0.02 "
     "at t = 6 from the 3-cycle)",
     suite_dual_average_distance_limit},
    {"linear-order-embedding",
     "the step-k iterate contains a constructed linear order of order k "
     "(both models)",
     suite_linear_order_embedding},
    {"single-arc-flip",
     "substituting the clones of two witness nodes across a dual-model step "
     "reverses exactly that one arc",
     suite_single_arc_flip},
    {"universality-bound",
     "every 3-node target and all four 4-node classes embed into a "
     "dual-model iterate with r <= n + C(n,2); linear orders reach r = n",
     suite_universality_bound},
    {"hamilton-lifting",
     "lifted Hamilton cycles stay valid at every step for both models; the "
     "existence criterion matches exhaustive search on orders 4..6",
     suite_hamilton_lifting},
    {"spectral-recurrence",
     "non-zero eigenvalues follow mu = lambda +- sqrt(lambda^2 + lambda) "
     "per step; no eigenvalue near -1/2; trace identities hold",
     suite_spectral_recurrence},
    {"domination-set-transfer",
     "dominating sets project to the base (both models, both kinds) and "
     "minimal sets never contain a node with its clone; clone/identity "
     "lift constructions are validated and reported",
     suite_domination_set_transfer},
    {"domination-numbers",
     "domination numbers are preserved by the copying model; the stated "
     "dual-model out-domination equality and in-domination inequality are "
     "checked as printed",
     suite_domination_numbers},
};

}  // namespace

VerdictReport run_verify(const VerifyOptions& opts) {
  VerdictReport report;
  report.seed = opts.seed;
  const Corpus corpus = build_corpus(opts.seed);
  for (const RegisteredSuite& suite : kRegistry) {
    VerdictEntry entry;
    entry.id = suite.id;
    entry.statement = suite.statement;
    entry.pass = true;
    try {
      suite.fn(opts, corpus, entry);
    } catch (const std::exception& ex) {
      entry.pass = false;
      if (entry.counterexample.empty()) {
        entry.counterexample = std::string("suite error: ") + ex.what();
      }
    }
    report.entries.push_back(std::move(entry));
  }
  report.all_pass = std::all_of(report.entries.begin(), report.entries.end(),
                                [](const VerdictEntry& e) { return e.pass; });
  return report;
}

std::string to_json(const VerdictReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["seed"] = report.seed;
  j["all_pass"] = report.all_pass;
  j["entries"] = nlohmann::ordered_json::array();
  for (const VerdictEntry& e : report.entries) {
    nlohmann::ordered_json je;
    je["id"] = e.id;
    je["statement"] = e.statement;
    je["inputs_tested"] = e.inputs_tested;
    je["pass"] = e.pass;
    je["counterexample"] = e.counterexample;
    je["notes"] = e.notes;
    j["entries"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

}  // namespace iltt
