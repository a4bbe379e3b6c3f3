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

#ifndef ILTT_DENSE_EIG_HPP_
#define ILTT_DENSE_EIG_HPP_

#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

namespace iltt {

struct EigOptions {
  // Relative subdiagonal threshold for deflation. Machine precision keeps
  // the computed values well inside the 1e-9 accuracy contract consumers
  // rely on (trace identities are checked at n * 1e-9).
  double deflate_tol = std::numeric_limits<double>::epsilon();
  // Reflection budget: max_rotations_factor * n * n applied reflections
  // before the solve is declared non-convergent.
  std::uint64_t max_rotations_factor = 30;
};

// All eigenvalues of a dense real n x n matrix (row-major, consumed).
// Balance, reduce to upper Hessenberg by stabilized elementary
// transformations, then Francis double-shift QR with deflation.
// Throws NumericalError with iteration diagnostics on non-convergence.
std::vector<std::complex<double>> dense_eigenvalues(std::vector<double> a,
                                                    std::uint32_t n,
                                                    const EigOptions& opts = {});

}  // namespace iltt

#endif  // ILTT_DENSE_EIG_HPP_
