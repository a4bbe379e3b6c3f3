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

#ifndef ILTT_SPECTRAL_HPP_
#define ILTT_SPECTRAL_HPP_

#include <complex>
#include <cstdint>
#include <vector>

#include "iltt/dense_eig.hpp"
#include "iltt/generate.hpp"
#include "iltt/tournament.hpp"

namespace iltt {

// Dense solves are O(n^3); beyond this order only the recurrence applies.
inline constexpr std::uint32_t kDirectSolveOrderCap = 1024;

struct SpectralTolerances {
  double eig = 1e-9;    // guaranteed accuracy of direct values (relative);
                        // the solver itself deflates at machine precision
  double zero = 1e-7;   // |value| at or below this counts as zero (absolute)
  double match = 1e-6;  // set-matching tolerance; recurrence error compounds
                        // per step, so this is looser than eig
};

enum class SpectrumProvenance { kDirect, kRecurrence };
const char* to_string(SpectrumProvenance p);

struct Spectrum {
  // Sorted by (real, imaginary) so repeated runs are bit-identical.
  std::vector<std::complex<double>> values;
  SpectrumProvenance provenance = SpectrumProvenance::kDirect;
  // Direct solves: multiplicity of eigenvalue zero (|v| <= tol.zero).
  // Recurrence outputs contain no zeros by construction.
  std::uint32_t zero_count = 0;
};

// All eigenvalues of the 0/1 adjacency matrix. Values come back sorted and
// cover the full dimension; zero_count tallies the near-zero ones.
Spectrum direct_spectrum(const Tournament& g,
                         const SpectralTolerances& tol = {});

// The values with modulus above tol_zero.
std::vector<std::complex<double>> nonzero_values(const Spectrum& s,
                                                 double tol_zero);

// Applies mu = lambda +- sqrt(lambda^2 + lambda) (principal branch, both
// signs) t times to the non-zero eigenvalue multiset of the base, yielding
// the non-zero eigenvalue multiset of the t-th ILTT iterate. Nonzero
// inputs can never map to 0 or to -1/2.
Spectrum recurrence_spectrum(std::vector<std::complex<double>> base_nonzero,
                             std::uint32_t t);

struct ValueCluster {
  std::complex<double> value;  // representative (from the direct solve)
  std::uint32_t direct_multiplicity = 0;
  std::uint32_t recurrence_multiplicity = 0;
};

struct RecurrenceReport {
  std::uint32_t base_order = 0;
  std::uint32_t steps = 0;
  std::uint32_t final_order = 0;
  bool matched = false;       // Hausdorff(non-zero sets) <= tol.match
  double max_set_distance = 0.0;
  double min_distance_to_minus_half = 0.0;  // over all direct eigenvalues
  std::uint32_t direct_zero_count = 0;
  // Observed multiplicities per matched value; recorded, never asserted.
  std::vector<ValueCluster> clusters;
};

// Runs both routes on the t-th ILTT iterate of the base and compares the
// non-zero value sets (ignoring multiplicity) within tol.match.
RecurrenceReport validate_recurrence(const Tournament& base, std::uint32_t t,
                                     const SpectralTolerances& tol = {},
                                     std::uint64_t node_cap = kDefaultNodeCap);

}  // namespace iltt

#endif  // ILTT_SPECTRAL_HPP_
