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

#include "iltt/domination.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace iltt {

namespace {

void check_selection(const Tournament& g, std::span<const NodeId> s) {
  if (s.empty()) {
    throw DomainError("invalid-selection: dominating-set checks need a "
                      "nonempty set");
  }
  std::vector<bool> seen(g.order(), false);
  for (NodeId v : s) {
    if (v >= g.order()) {
      throw DomainError("invalid-selection: node " + std::to_string(v) +
                        " out of range");
    }
    if (seen[v]) {
      throw DomainError("invalid-selection: duplicate node " +
                        std::to_string(v));
    }
    seen[v] = true;
  }
}

std::vector<NodeId> uncovered_nodes(const Tournament& g,
                                    std::span<const NodeId> s,
                                    DominationKind kind) {
  std::vector<bool> in_set(g.order(), false);
  for (NodeId v : s) in_set[v] = true;
  std::vector<NodeId> missing;
  for (NodeId u = 0; u < g.order(); ++u) {
    if (in_set[u]) continue;
    bool covered = false;
    for (NodeId v : s) {
      covered = kind == DominationKind::kIn ? g.arc(u, v) : g.arc(v, u);
      if (covered) break;
    }
    if (!covered) missing.push_back(u);
  }
  return missing;
}

// Exact minimum set cover over single-word masks. Coverage of candidate v
// is v itself plus the nodes it dominates; branching happens on the
// lowest-index uncovered node, candidates ordered by how much they cover.
class CoverSearch {
 public:
  CoverSearch(std::vector<std::uint64_t> cover, std::uint32_t n)
      : cover_(std::move(cover)), n_(n), full_((n == 64 ? ~0ull : (1ull << n) - 1)) {}

  std::vector<NodeId> solve() {
    // Greedy upper bound.
    best_.clear();
    std::vector<NodeId> greedy;
    std::uint64_t uncovered = full_;
    while (uncovered) {
      NodeId pick = 0;
      int best_gain = -1;
      for (NodeId v = 0; v < n_; ++v) {
        const int gain = std::popcount(cover_[v] & uncovered);
        if (gain > best_gain) {
          best_gain = gain;
          pick = v;
        }
      }
      greedy.push_back(pick);
      uncovered &= ~cover_[pick];
    }
    best_ = std::move(greedy);

    std::vector<NodeId> chosen;
    descend(full_, chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void descend(std::uint64_t uncovered, std::vector<NodeId>& chosen) {
    if (!uncovered) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;

    const auto u = static_cast<NodeId>(std::countr_zero(uncovered));
    std::vector<NodeId> candidates;
    for (NodeId v = 0; v < n_; ++v) {
      if (cover_[v] & (std::uint64_t{1} << u)) candidates.push_back(v);
    }
    std::sort(candidates.begin(), candidates.end(), [&](NodeId a, NodeId b) {
      const int ga = std::popcount(cover_[a] & uncovered);
      const int gb = std::popcount(cover_[b] & uncovered);
      return ga != gb ? ga > gb : a < b;
    });
    for (NodeId v : candidates) {
      chosen.push_back(v);
      descend(uncovered & ~cover_[v], chosen);
      chosen.pop_back();
    }
  }

  std::vector<std::uint64_t> cover_;
  std::uint32_t n_;
  std::uint64_t full_;
  std::vector<NodeId> best_;
};

std::vector<std::uint64_t> coverage_masks(const Tournament& g,
                                          DominationKind kind) {
  const std::uint32_t n = g.order();
  // In-domination: v covers its in-neighbours (u with arc (u,v)), which are
  // the out-neighbours of v in the dual.
  const Tournament source = kind == DominationKind::kIn ? dual(g) : g;
  std::vector<std::uint64_t> cover(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    std::uint64_t mask = std::uint64_t{1} << v;
    bits::for_each_set_bit(source.row(v),
                           [&](std::uint32_t u) { mask |= std::uint64_t{1} << u; });
    cover[v] = mask;
  }
  return cover;
}

NodeId ultimate_ancestor(NodeId id, const GenerationTrace& trace) {
  for (std::uint32_t k = trace.steps(); k >= 1; --k) {
    const StepLineage lin = trace.lineage(k);
    if (lin.is_clone(id)) id = lin.parent(id);
  }
  return id;
}

}  // namespace

bool is_in_dominating(const Tournament& g, std::span<const NodeId> s) {
  check_selection(g, s);
  return uncovered_nodes(g, s, DominationKind::kIn).empty();
}

bool is_out_dominating(const Tournament& g, std::span<const NodeId> s) {
  check_selection(g, s);
  return uncovered_nodes(g, s, DominationKind::kOut).empty();
}

bool is_dominating(const Tournament& g, std::span<const NodeId> s,
                   DominationKind kind) {
  return kind == DominationKind::kIn ? is_in_dominating(g, s)
                                     : is_out_dominating(g, s);
}

DominationResult domination_numbers(const Tournament& g) {
  if (g.order() > kDominationExactOrderCap) {
    throw CapacityError("size-cap: exact domination search is limited to "
                        "order " + std::to_string(kDominationExactOrderCap),
                        g.order());
  }
  DominationResult r;
  r.witness_in = CoverSearch(coverage_masks(g, DominationKind::kIn), g.order()).solve();
  r.witness_out = CoverSearch(coverage_masks(g, DominationKind::kOut), g.order()).solve();
  r.gamma_in = static_cast<std::uint32_t>(r.witness_in.size());
  r.gamma_out = static_cast<std::uint32_t>(r.witness_out.size());
  return r;
}

std::vector<NodeId> project_dominating_set(std::span<const NodeId> s,
                                           const GenerationTrace& trace,
                                           DominationKind kind) {
  const Tournament& top = trace.final_tournament();
  check_selection(top, s);
  if (!is_dominating(top, s, kind)) {
    throw DomainError("invalid-input: set does not dominate the final step");
  }
  std::vector<NodeId> projected;
  for (NodeId v : s) {
    const NodeId anc = ultimate_ancestor(v, trace);
    if (std::find(projected.begin(), projected.end(), anc) == projected.end()) {
      projected.push_back(anc);
    }
  }
  std::sort(projected.begin(), projected.end());
  if (!is_dominating(trace.base(), projected, kind)) {
    throw DomainError(
        "construction postcondition violated: projected set does not "
        "dominate the base");
  }
  return projected;
}

namespace {

LiftOutcome finish_lift(const Tournament& top, std::vector<NodeId> candidate,
                        DominationKind kind) {
  LiftOutcome out;
  out.uncovered = uncovered_nodes(top, candidate, kind);
  out.validated = out.uncovered.empty();
  out.set = std::move(candidate);
  return out;
}

}  // namespace

LiftOutcome lift_in_dominating(std::span<const NodeId> s,
                               const GenerationTrace& trace) {
  if (trace.model() != ModelKind::kIltt) {
    throw DomainError("lift constructions are stated for the iltt model");
  }
  check_selection(trace.base(), s);
  if (!is_in_dominating(trace.base(), s)) {
    throw DomainError("invalid-input: set does not in-dominate the base");
  }
  // Clone-of-clone iterated per step: v ends up at (2^t - 1) * n + v.
  const std::uint64_t offset =
      ((std::uint64_t{1} << trace.steps()) - 1) * trace.base().order();
  std::vector<NodeId> candidate;
  candidate.reserve(s.size());
  for (NodeId v : s) candidate.push_back(static_cast<NodeId>(offset + v));
  return finish_lift(trace.final_tournament(), std::move(candidate),
                     DominationKind::kIn);
}

LiftOutcome lift_out_dominating(std::span<const NodeId> s,
                                const GenerationTrace& trace) {
  if (trace.model() != ModelKind::kIltt) {
    throw DomainError("lift constructions are stated for the iltt model");
  }
  check_selection(trace.base(), s);
  if (!is_out_dominating(trace.base(), s)) {
    throw DomainError("invalid-input: set does not out-dominate the base");
  }
  return finish_lift(trace.final_tournament(),
                     std::vector<NodeId>(s.begin(), s.end()),
                     DominationKind::kOut);
}

std::vector<std::vector<NodeId>> enumerate_minimal_dominating_sets(
    const Tournament& g, DominationKind kind) {
  const std::uint32_t n = g.order();
  if (n > kDominationEnumerationCap) {
    throw CapacityError("size-cap: minimal-set enumeration is limited to "
                        "order " + std::to_string(kDominationEnumerationCap),
                        n);
  }
  const auto cover = coverage_masks(g, kind);
  const std::uint64_t full = n == 64 ? ~0ull : (std::uint64_t{1} << n) - 1;
  auto dominates = [&](std::uint64_t set) {
    std::uint64_t covered = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (set & (std::uint64_t{1} << v)) covered |= cover[v];
    }
    return (covered & full) == full;
  };

  std::vector<std::vector<NodeId>> minimal;
  for (std::uint64_t set = 1; set <= full; ++set) {
    if (!dominates(set)) continue;
    bool is_minimal = true;
    for (NodeId v = 0; v < n && is_minimal; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((set & bit) && dominates(set & ~bit)) is_minimal = false;
    }
    if (!is_minimal) continue;
    std::vector<NodeId> nodes;
    for (NodeId v = 0; v < n; ++v) {
      if (set & (std::uint64_t{1} << v)) nodes.push_back(v);
    }
    minimal.push_back(std::move(nodes));
  }
  return minimal;
}

}  // namespace iltt
