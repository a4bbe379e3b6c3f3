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

#ifndef ILTT_HAMILTON_HPP_
#define ILTT_HAMILTON_HPP_

#include <vector>

#include "iltt/generate.hpp"
#include "iltt/tournament.hpp"

namespace iltt {

// A directed cycle visiting every node exactly once, stored as the node
// sequence (wrap-around implied). Normalized to start at the smallest id.
struct HamiltonCycle {
  std::vector<NodeId> nodes;
};

// A tournament of order >= 3 is Hamiltonian iff it is strong; smaller
// orders have no cycle at all.
bool is_hamiltonian(const Tournament& g);

// Constructive search: Hamilton path by insertion, close it into a cycle,
// then grow the cycle by direct insertion, bridging through the
// outside-node classes when no single node fits. O(n^2) overall. Requires
// a strong tournament of order >= 3, else a no-cycle error.
HamiltonCycle find_hamilton_cycle(const Tournament& g);

// Lifts a Hamilton cycle a_1..a_N of an order-N tournament to the order-2N
// cycle a_1, a_2', a_2, a_3', a_3, ..., a_1' of its cloning step (clone of
// i is N+i). The lifted cycle alternates originals and clones, so it uses
// no clone-block arcs and is valid for both models; the model tag is kept
// for interface symmetry. Structural violations in the input (wrong
// length, duplicates, out-of-range ids) are invalid-cycle errors.
HamiltonCycle lift_hamilton_cycle(const HamiltonCycle& c, ModelKind model,
                                  std::uint32_t order);

// The oracle the tests lean on: all nodes covered exactly once and every
// consecutive pair (including wrap-around) is an arc.
bool is_valid_hamilton_cycle(const Tournament& g, const HamiltonCycle& c);

}  // namespace iltt

#endif  // ILTT_HAMILTON_HPP_
