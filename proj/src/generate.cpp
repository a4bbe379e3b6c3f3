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

#include "iltt/generate.hpp"

#include <string>
#include <utility>

namespace iltt {

const char* to_string(ModelKind m) {
  return m == ModelKind::kIltt ? "iltt" : "ilttd";
}

std::optional<ModelKind> parse_model(std::string_view s) {
  if (s == "iltt") return ModelKind::kIltt;
  if (s == "ilttd") return ModelKind::kIlttDual;
  return std::nullopt;
}

StepOutput step(const Tournament& g, ModelKind model, std::uint64_t node_cap) {
  const std::uint32_t n = g.order();
  const std::uint64_t out_order = 2 * static_cast<std::uint64_t>(n);
  if (out_order > node_cap) {
    throw CapacityError("capacity error: step would produce order " +
                            std::to_string(out_order) + " > cap " +
                            std::to_string(node_cap) +
                            "; required cap: " + std::to_string(out_order),
                        out_order);
  }
  const auto m = static_cast<std::uint32_t>(out_order);
  const std::size_t wpr_out = bits::words_for(m);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(m) * wpr_out, 0);

  // Clone-block source: the rows of g for ILTT, of dual(g) for ILTT_d.
  const Tournament* block = &g;
  std::optional<Tournament> dual_holder;
  if (model == ModelKind::kIlttDual) {
    dual_holder = dual(g);
    block = &*dual_holder;
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    const auto src = g.row(i);
    std::span<std::uint64_t> orig(rows.data() +
                                      static_cast<std::size_t>(i) * wpr_out,
                                  wpr_out);
    bits::copy_shifted(src, n, orig, 0);
    bits::copy_shifted(src, n, orig, n);

    std::span<std::uint64_t> clone(
        rows.data() + static_cast<std::size_t>(n + i) * wpr_out, wpr_out);
    bits::copy_shifted(src, n, clone, 0);
    bits::set(clone, i);  // clone-to-parent arc (N+i, i)
    bits::copy_shifted(block->row(i), n, clone, n);
  }
  return {Tournament::from_rows(m, std::move(rows)), StepLineage{n}};
}

GenerationTrace::GenerationTrace(Tournament base, ModelKind model,
                                 std::uint32_t steps,
                                 Tournament final_tournament,
                                 std::vector<Tournament> snapshots)
    : base_(std::move(base)),
      model_(model),
      steps_(steps),
      final_(std::move(final_tournament)),
      snapshots_(std::move(snapshots)) {}

const Tournament& GenerationTrace::snapshot(std::uint32_t k) const {
  if (k > steps_) {
    throw DomainError("snapshot index " + std::to_string(k) +
                      " out of range; trace has " + std::to_string(steps_) +
                      " steps");
  }
  if (k == 0) return base_;
  if (k == steps_) return final_;
  if (!has_snapshots()) {
    throw DomainError("intermediate snapshots were not retained; "
                      "iterate with keep_snapshots");
  }
  return snapshots_[k];
}

StepLineage GenerationTrace::lineage(std::uint32_t k) const {
  if (k == 0 || k > steps_) {
    throw DomainError("lineage index " + std::to_string(k) +
                      " out of range; steps are 1.." + std::to_string(steps_));
  }
  return StepLineage{
      static_cast<std::uint32_t>(base_.order() << (k - 1))};
}

GenerationTrace iterate(const Tournament& base, ModelKind model,
                        std::uint32_t t, const IterateOptions& opts) {
  // Pre-check the final order so a capacity error leaves no partial work.
  if (t >= 48) {
    throw CapacityError("capacity error: step count " + std::to_string(t) +
                            " is out of range",
                        ~std::uint64_t{0});
  }
  const std::uint64_t final_order = static_cast<std::uint64_t>(base.order())
                                    << t;
  if (final_order > opts.node_cap) {
    throw CapacityError("capacity error: " + std::to_string(t) +
                            " steps from order " + std::to_string(base.order()) +
                            " reach order " + std::to_string(final_order) +
                            " > cap " + std::to_string(opts.node_cap) +
                            "; required cap: " + std::to_string(final_order),
                        final_order);
  }

  std::vector<Tournament> snapshots;
  if (opts.keep_snapshots) snapshots.push_back(base);
  Tournament current = base;
  for (std::uint32_t k = 0; k < t; ++k) {
    current = step(current, model, opts.node_cap).tournament;
    if (opts.keep_snapshots) snapshots.push_back(current);
  }
  return GenerationTrace(base, model, t, std::move(current),
                         std::move(snapshots));
}

}  // namespace iltt
