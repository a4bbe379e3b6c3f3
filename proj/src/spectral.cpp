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

#include "iltt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace iltt {

namespace {

bool complex_less(const std::complex<double>& a,
                  const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void sort_canonical(std::vector<std::complex<double>>& v) {
  std::sort(v.begin(), v.end(), complex_less);
}

double min_distance_to(const std::vector<std::complex<double>>& set,
                       std::complex<double> z) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : set) best = std::min(best, std::abs(s - z));
  return best;
}

}  // namespace

const char* to_string(SpectrumProvenance p) {
  return p == SpectrumProvenance::kDirect ? "direct" : "recurrence";
}

Spectrum direct_spectrum(const Tournament& g, const SpectralTolerances& tol) {
  const std::uint32_t n = g.order();
  if (n > kDirectSolveOrderCap) {
    throw CapacityError("size-cap: direct eigensolve is limited to order " +
                            std::to_string(kDirectSolveOrderCap),
                        n);
  }
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (std::uint32_t i = 0; i < n; ++i) {
    bits::for_each_set_bit(g.row(i), [&](std::uint32_t j) {
      a[static_cast<std::size_t>(i) * n + j] = 1.0;
    });
  }
  // The solver deflates at machine precision, strictly tighter than the
  // tol.eig accuracy contract the consumers check against.
  Spectrum s;
  s.values = dense_eigenvalues(std::move(a), n, EigOptions{});
  s.provenance = SpectrumProvenance::kDirect;
  sort_canonical(s.values);
  s.zero_count = 0;
  for (const auto& v : s.values) {
    if (std::abs(v) <= tol.zero) ++s.zero_count;
  }
  return s;
}

std::vector<std::complex<double>> nonzero_values(const Spectrum& s,
                                                 double tol_zero) {
  std::vector<std::complex<double>> out;
  out.reserve(s.values.size());
  for (const auto& v : s.values) {
    if (std::abs(v) > tol_zero) out.push_back(v);
  }
  return out;
}

Spectrum recurrence_spectrum(std::vector<std::complex<double>> base_nonzero,
                             std::uint32_t t) {
  std::vector<std::complex<double>> current = std::move(base_nonzero);
  for (std::uint32_t k = 0; k < t; ++k) {
    std::vector<std::complex<double>> next;
    next.reserve(2 * current.size());
    for (const auto& lambda : current) {
      const std::complex<double> root = std::sqrt(lambda * lambda + lambda);
      next.push_back(lambda + root);
      next.push_back(lambda - root);
    }
    current = std::move(next);
  }
  Spectrum s;
  s.values = std::move(current);
  s.provenance = SpectrumProvenance::kRecurrence;
  s.zero_count = 0;
  sort_canonical(s.values);
  return s;
}

RecurrenceReport validate_recurrence(const Tournament& base, std::uint32_t t,
                                     const SpectralTolerances& tol,
                                     std::uint64_t node_cap) {
  RecurrenceReport report;
  report.base_order = base.order();
  report.steps = t;

  const Spectrum base_direct = direct_spectrum(base, tol);
  const auto base_nonzero = nonzero_values(base_direct, tol.zero);
  const Spectrum rec = recurrence_spectrum(base_nonzero, t);

  IterateOptions opts;
  opts.node_cap = node_cap;
  const Tournament iterate_t =
      t == 0 ? base : iterate(base, ModelKind::kIltt, t, opts).final_tournament();
  report.final_order = iterate_t.order();
  const Spectrum direct = direct_spectrum(iterate_t, tol);
  report.direct_zero_count = direct.zero_count;
  const auto direct_nonzero = nonzero_values(direct, tol.zero);

  // Set-level (multiplicity-blind) Hausdorff distance between the routes.
  double max_dist = 0.0;
  for (const auto& v : rec.values) {
    max_dist = std::max(max_dist, min_distance_to(direct_nonzero, v));
  }
  for (const auto& v : direct_nonzero) {
    max_dist = std::max(max_dist, min_distance_to(rec.values, v));
  }
  if (rec.values.empty() != direct_nonzero.empty()) {
    max_dist = std::numeric_limits<double>::infinity();
  }
  report.max_set_distance = rec.values.empty() && direct_nonzero.empty()
                                ? 0.0
                                : max_dist;
  report.matched = report.max_set_distance <= tol.match;

  report.min_distance_to_minus_half =
      min_distance_to(direct.values, {-0.5, 0.0});

  // Cluster the direct non-zero values and count how many recurrence
  // values land in each cluster. Multiplicity behaviour is reported only.
  for (const auto& v : direct_nonzero) {
    bool merged = false;
    for (auto& c : report.clusters) {
      if (std::abs(c.value - v) <= 2 * tol.match) {
        ++c.direct_multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) report.clusters.push_back({v, 1, 0});
  }
  for (const auto& v : rec.values) {
    for (auto& c : report.clusters) {
      if (std::abs(c.value - v) <= 2 * tol.match) {
        ++c.recurrence_multiplicity;
        break;
      }
    }
  }
  return report;
}

}  // namespace iltt
