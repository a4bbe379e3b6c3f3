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

#ifndef ILTT_GENERATE_HPP_
#define ILTT_GENERATE_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "iltt/tournament.hpp"

namespace iltt {

// Which orientation the clone block copies: the current tournament (ILTT)
// or its dual (ILTT_d).
enum class ModelKind { kIltt, kIlttDual };

const char* to_string(ModelKind m);
std::optional<ModelKind> parse_model(std::string_view s);

// One cloning step maps order N to order 2N under the fixed convention
// that the clone of node i is N + i. Parent and clone are mutually inverse
// bijections between the two halves.
struct StepLineage {
  std::uint32_t order_before = 0;

  bool is_clone(NodeId id) const { return id >= order_before; }
  NodeId parent(NodeId clone_id) const { return clone_id - order_before; }
  NodeId clone(NodeId parent_id) const { return parent_id + order_before; }
};

struct StepOutput {
  Tournament tournament;
  StepLineage lineage;
};

// One cloning step. Output order 2N, arcs:
//   (a) originals keep all arcs;
//   (b) clone-to-parent arc (N+i, i) for every i;
//   (c) cross arcs: clones share the adjacencies of their parents among
//       originals, adj(N+i, j) = adj(i, j) and adj(j, N+i) = adj(j, i);
//   (d) clone block: adj(N+i, N+j) = adj(i, j) for ILTT, adj(j, i) for
//       ILTT_d.
// Exceeding the cap is a capacity error thrown before any allocation.
StepOutput step(const Tournament& g, ModelKind model,
                std::uint64_t node_cap = kDefaultNodeCap);

struct IterateOptions {
  std::uint64_t node_cap = kDefaultNodeCap;
  // Holding every intermediate tournament doubles memory again; off unless
  // a verification suite needs to look back.
  bool keep_snapshots = false;
};

// Base tournament, model tag, step count and per-step lineage. The base
// and the final tournament are always retained; intermediate snapshots
// only when requested. Immutable once returned.
class GenerationTrace {
 public:
  GenerationTrace(Tournament base, ModelKind model, std::uint32_t steps,
                  Tournament final_tournament,
                  std::vector<Tournament> snapshots);

  const Tournament& base() const { return base_; }
  ModelKind model() const { return model_; }
  std::uint32_t steps() const { return steps_; }
  const Tournament& final_tournament() const { return final_; }

  bool has_snapshots() const { return !snapshots_.empty(); }
  // k in [0, steps]; 0 is the base and steps is the final tournament, both
  // available regardless of retention.
  const Tournament& snapshot(std::uint32_t k) const;

  std::uint64_t order_at(std::uint32_t k) const {
    return static_cast<std::uint64_t>(base_.order()) << k;
  }
  // Lineage of step k (the step that produced snapshot k), k in [1, steps].
  StepLineage lineage(std::uint32_t k) const;

 private:
  Tournament base_;
  ModelKind model_;
  std::uint32_t steps_;
  Tournament final_;
  std::vector<Tournament> snapshots_;  // indices 0..steps when retained
};

// t-fold iteration; snapshot 0 is the base. The cap is checked for the
// final order up front so no partial work happens on capacity errors.
GenerationTrace iterate(const Tournament& base, ModelKind model,
                        std::uint32_t t, const IterateOptions& opts = {});

}  // namespace iltt

#endif  // ILTT_GENERATE_HPP_
