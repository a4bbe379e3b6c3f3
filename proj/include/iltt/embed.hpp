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

#ifndef ILTT_EMBED_HPP_
#define ILTT_EMBED_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "iltt/generate.hpp"
#include "iltt/tournament.hpp"

namespace iltt {

// Proof that `target` appears as a labeled subtournament of the
// reached_step-th dual-model iterate of `base`: node_map[i] is the node
// playing target node i, and r never exceeds kappa = n + C(n,2).
struct EmbeddingCertificate {
  Tournament target;
  Tournament base;
  ModelKind model = ModelKind::kIlttDual;
  std::uint32_t reached_step = 0;
  std::vector<NodeId> node_map;
  std::uint32_t kappa = 0;
};

std::uint32_t kappa_bound(std::uint32_t n);

// Nodes of step k inducing a linear order (position a beats position b for
// a < b), built by prepending the clone of the previous source at each
// step. Works for both models; the construction is pure index arithmetic
// thanks to id persistence, so it never fails. Requires trace.steps() >= k
// and k >= 1.
std::vector<NodeId> find_linear_order(const GenerationTrace& trace,
                                      std::uint32_t k);

// One dual-model step that reverses exactly the witness pair at positions
// (u, v): both positions move to their clones, everything else keeps its
// id and orientation. u == v is an invalid-flip error.
std::vector<NodeId> flip_one_arc(std::span<const NodeId> witness,
                                 std::size_t u, std::size_t v,
                                 std::uint32_t order_before_step);

// Full universality pipeline: locate the linear order at step n, then flip
// every pair where the target disagrees with it (identity labeling,
// lexicographic flip order, one flip per step). Runs in streaming mode and
// validates the certificate before returning. Capacity errors report the
// minimal cap for the whole run before any stepping happens.
EmbeddingCertificate embed_target(const Tournament& target,
                                  const Tournament& base,
                                  std::uint64_t node_cap = kDefaultNodeCap);

// Regenerates the trace and checks the certificate arc-for-arc.
bool validate_certificate(const EmbeddingCertificate& cert,
                          std::uint64_t node_cap = kDefaultNodeCap);

}  // namespace iltt

#endif  // ILTT_EMBED_HPP_
