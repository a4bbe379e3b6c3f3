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

#include "iltt/embed.hpp"

#include <string>
#include <utility>

namespace iltt {

std::uint32_t kappa_bound(std::uint32_t n) {
  return n + n * (n - 1) / 2;
}

std::vector<NodeId> find_linear_order(const GenerationTrace& trace,
                                      std::uint32_t k) {
  if (k == 0 || k > trace.steps()) {
    throw DomainError("linear-order witness needs 1 <= k <= trace steps");
  }
  // Step 1 witness: any single node; node 0 for determinism. Each further
  // step prepends the clone of the current source, which beats the whole
  // witness (clone-to-parent arc plus inherited cross arcs).
  std::vector<NodeId> witness{0};
  for (std::uint32_t s = 2; s <= k; ++s) {
    const std::uint32_t order_before = static_cast<std::uint32_t>(
        trace.base().order() << (s - 1));
    witness.insert(witness.begin(), order_before + witness.front());
  }
  return witness;
}

std::vector<NodeId> flip_one_arc(std::span<const NodeId> witness,
                                 std::size_t u, std::size_t v,
                                 std::uint32_t order_before_step) {
  if (u == v) throw DomainError("invalid-flip: positions must differ");
  if (u >= witness.size() || v >= witness.size()) {
    throw DomainError("invalid-flip: position out of range");
  }
  std::vector<NodeId> next(witness.begin(), witness.end());
  for (NodeId id : next) {
    if (id >= order_before_step) {
      throw DomainError("invalid-flip: witness id " + std::to_string(id) +
                        " exceeds the pre-step order");
    }
  }
  next[u] += order_before_step;
  next[v] += order_before_step;
  return next;
}

namespace {

// Pairs (a, b), a < b, where the target disagrees with the linear order
// witness under the identity labeling, in lexicographic order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> differing_pairs(
    const Tournament& target) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> diffs;
  for (std::uint32_t a = 0; a < target.order(); ++a) {
    for (std::uint32_t b = a + 1; b < target.order(); ++b) {
      if (target.arc(b, a)) diffs.emplace_back(a, b);
    }
  }
  return diffs;
}

bool induces_target(const Tournament& host, std::span<const NodeId> node_map,
                    const Tournament& target) {
  for (std::uint32_t a = 0; a < target.order(); ++a) {
    for (std::uint32_t b = 0; b < target.order(); ++b) {
      if (a == b) continue;
      if (host.arc(node_map[a], node_map[b]) != target.arc(a, b)) return false;
    }
  }
  return true;
}

}  // namespace

EmbeddingCertificate embed_target(const Tournament& target,
                                  const Tournament& base,
                                  std::uint64_t node_cap) {
  const std::uint32_t n = target.order();
  if (n < 2) {
    throw DomainError("embedding targets need order >= 2");
  }
  if (n > kIsomorphismOrderCap) {
    throw DomainError("size-cap: embedding targets are limited to order " +
                      std::to_string(kIsomorphismOrderCap));
  }
  const auto diffs = differing_pairs(target);
  const std::uint32_t r =
      n + static_cast<std::uint32_t>(diffs.size());

  // The whole run doubles the order r times; fail before any stepping.
  if (r >= 48) {
    throw CapacityError("capacity error: embedding needs " + std::to_string(r) +
                            " steps, out of range",
                        ~std::uint64_t{0});
  }
  const std::uint64_t final_order = static_cast<std::uint64_t>(base.order())
                                    << r;
  if (final_order > node_cap) {
    throw CapacityError(
        "capacity error: embedding an order-" + std::to_string(n) +
            " target needs " + std::to_string(r) + " steps, reaching order " +
            std::to_string(final_order) + " > cap " + std::to_string(node_cap) +
            "; required cap: " + std::to_string(final_order),
        final_order);
  }

  // Streaming: only the current snapshot is retained (the order doubles
  // every step, so holding the trail is not an option).
  Tournament current = base;
  for (std::uint32_t s = 0; s < n; ++s) {
    current = step(current, ModelKind::kIlttDual, node_cap).tournament;
  }
  std::vector<NodeId> witness{0};
  for (std::uint32_t s = 2; s <= n; ++s) {
    witness.insert(witness.begin(),
                   static_cast<NodeId>(base.order() << (s - 1)) +
                       witness.front());
  }

  for (const auto& [a, b] : diffs) {
    const std::uint32_t order_before = current.order();
    current = step(current, ModelKind::kIlttDual, node_cap).tournament;
    witness = flip_one_arc(witness, a, b, order_before);
  }

  EmbeddingCertificate cert{target, base, ModelKind::kIlttDual, r,
                            std::move(witness), kappa_bound(n)};
  if (cert.reached_step > cert.kappa ||
      !induces_target(current, cert.node_map, target)) {
    throw DomainError(
        "construction postcondition violated: certificate does not induce "
        "the target");
  }
  return cert;
}

bool validate_certificate(const EmbeddingCertificate& cert,
                          std::uint64_t node_cap) {
  if (cert.model != ModelKind::kIlttDual) return false;
  if (cert.reached_step > cert.kappa) return false;
  if (cert.node_map.size() != cert.target.order()) return false;
  IterateOptions opts;
  opts.node_cap = node_cap;
  const GenerationTrace trace =
      iterate(cert.base, cert.model, cert.reached_step, opts);
  const Tournament& host = trace.final_tournament();
  for (NodeId id : cert.node_map) {
    if (id >= host.order()) return false;
  }
  return induces_target(host, cert.node_map, cert.target);
}

}  // namespace iltt
