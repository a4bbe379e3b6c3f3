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

#include "iltt/dense_eig.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "iltt/errors.hpp"

namespace iltt {

namespace {

double sign_of(double magnitude, double carrier) {
  return carrier >= 0.0 ? std::fabs(magnitude) : -std::fabs(magnitude);
}

struct ActiveWindow {
  int low;
  int high;  // rows outside [low, high] are isolated 1x1 blocks
};

// Balancing: first isolate rows/columns whose active off-diagonal part is
// zero (their diagonal entries are exact eigenvalues; this also peels any
// permuted-triangular structure completely, which matters for nilpotent
// inputs), then scale the remaining window by powers of the radix so row
// and column norms roughly match.
ActiveWindow balance(std::vector<double>& a, int n) {
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  auto exchange = [&](int j, int other, int m, int k) {
    if (j == other) return;
    for (int i = 0; i <= k; ++i) std::swap(at(i, j), at(i, other));
    for (int i = m; i < n; ++i) std::swap(at(j, i), at(other, i));
  };

  int m = 0, k = n - 1;
  bool again = true;
  while (again) {  // rows with no active off-diagonal entries -> bottom
    again = false;
    for (int j = k; j >= m; --j) {
      double r = 0.0;
      for (int i = m; i <= k; ++i) {
        if (i != j) r += std::fabs(at(j, i));
      }
      if (r == 0.0) {
        exchange(j, k, m, k);
        --k;
        again = true;
        break;
      }
    }
  }
  again = true;
  while (again) {  // columns with no active off-diagonal entries -> left
    again = false;
    for (int j = m; j <= k; ++j) {
      double c = 0.0;
      for (int i = m; i <= k; ++i) {
        if (i != j) c += std::fabs(at(i, j));
      }
      if (c == 0.0) {
        exchange(j, m, m, k);
        ++m;
        again = true;
        break;
      }
    }
  }

  constexpr double kRadix = 2.0;
  constexpr double kRadixSq = kRadix * kRadix;
  bool scaling = true;
  while (scaling) {
    scaling = false;
    for (int i = m; i <= k; ++i) {
      double r = 0.0, c = 0.0;
      for (int j = m; j <= k; ++j) {
        if (j == i) continue;
        c += std::fabs(at(j, i));
        r += std::fabs(at(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / kRadix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= kRadix;
        c *= kRadixSq;
      }
      g = r * kRadix;
      while (c >= g) {
        f /= kRadix;
        c /= kRadixSq;
      }
      if ((c + r) / f < 0.95 * s) {
        scaling = true;
        g = 1.0 / f;
        for (int j = m; j < n; ++j) at(i, j) *= g;
        for (int j = 0; j <= k; ++j) at(j, i) *= f;
      }
    }
  }
  return {m, k};
}

// Reduction of the active window to upper Hessenberg form by stabilized
// elementary similarity transformations. Eliminated entries are zeroed;
// the transform is not accumulated (eigenvalues only).
void to_hessenberg(std::vector<double>& a, int n, ActiveWindow w) {
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  for (int m = w.low + 1; m < w.high; ++m) {
    int pivot = m;
    double x = 0.0;
    for (int i = m; i <= w.high; ++i) {
      if (std::fabs(at(i, m - 1)) > std::fabs(x)) {
        x = at(i, m - 1);
        pivot = i;
      }
    }
    if (pivot != m) {
      for (int j = m - 1; j < n; ++j) std::swap(at(pivot, j), at(m, j));
      for (int j = 0; j <= w.high; ++j) std::swap(at(j, pivot), at(j, m));
    }
    if (x == 0.0) continue;
    for (int i = m + 1; i <= w.high; ++i) {
      double y = at(i, m - 1);
      if (y == 0.0) continue;
      y /= x;
      at(i, m - 1) = 0.0;
      for (int j = m; j < n; ++j) at(i, j) -= y * at(m, j);
      for (int j = 0; j <= w.high; ++j) at(j, m) += y * at(j, i);
    }
  }
}

}  // namespace

std::vector<std::complex<double>> dense_eigenvalues(std::vector<double> a,
                                                    std::uint32_t n_unsigned,
                                                    const EigOptions& opts) {
  const int n = static_cast<int>(n_unsigned);
  if (n == 0) return {};
  if (a.size() != static_cast<std::size_t>(n) * n) {
    throw DomainError("dense_eigenvalues: matrix buffer size mismatch");
  }
  const ActiveWindow w = balance(a, n);
  to_hessenberg(a, n, w);

  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  const int low = w.low;
  const double tol = opts.deflate_tol;
  const std::uint64_t rotation_budget =
      opts.max_rotations_factor * static_cast<std::uint64_t>(n) * n;
  std::uint64_t rotations = 0;

  std::vector<std::complex<double>> eig(static_cast<std::size_t>(n));
  // Isolated diagonal entries are exact eigenvalues.
  for (int i = 0; i < low; ++i) eig[static_cast<std::size_t>(i)] = {at(i, i), 0.0};
  for (int i = w.high + 1; i < n; ++i) {
    eig[static_cast<std::size_t>(i)] = {at(i, i), 0.0};
  }

  double anorm = 0.0;
  for (int i = low; i <= w.high; ++i) {
    for (int j = std::max(i - 1, low); j <= w.high; ++j) {
      anorm += std::fabs(at(i, j));
    }
  }

  int nn = w.high;
  double t = 0.0;
  while (nn >= low) {
    int its = 0;
    for (;;) {
      // Look for a single small subdiagonal element.
      int l;
      for (l = nn; l >= low + 1; --l) {
        double s = std::fabs(at(l - 1, l - 1)) + std::fabs(at(l, l));
        if (s == 0.0) s = anorm;
        if (std::fabs(at(l, l - 1)) <= tol * s) {
          at(l, l - 1) = 0.0;
          break;
        }
      }

      double x = at(nn, nn);
      if (l == nn) {
        // One root found.
        eig[static_cast<std::size_t>(nn)] = {x + t, 0.0};
        --nn;
        break;
      }
      double y = at(nn - 1, nn - 1);
      double w2 = at(nn, nn - 1) * at(nn - 1, nn);
      if (l == nn - 1) {
        // Two roots found: solve the trailing 2x2 block.
        double p = 0.5 * (y - x);
        const double q = p * p + w2;
        double z = std::sqrt(std::fabs(q));
        x += t;
        if (q >= 0.0) {
          z = p + sign_of(z, p);
          eig[static_cast<std::size_t>(nn - 1)] = {x + z, 0.0};
          eig[static_cast<std::size_t>(nn)] = {z != 0.0 ? x - w2 / z : x + z,
                                               0.0};
        } else {
          eig[static_cast<std::size_t>(nn - 1)] = {x + p, z};
          eig[static_cast<std::size_t>(nn)] = {x + p, -z};
        }
        nn -= 2;
        break;
      }

      // No convergence yet; form a shift.
      if (its == 30) {
        throw NumericalError(
            "numerical-failure: QR iteration did not converge (block end " +
            std::to_string(nn) + ", " + std::to_string(its) +
            " iterations, " + std::to_string(rotations) + " reflections)");
      }
      if (its == 10 || its == 20) {
        // Exceptional shift.
        t += x;
        for (int i = low; i <= nn; ++i) at(i, i) -= x;
        const double s =
            std::fabs(at(nn, nn - 1)) + std::fabs(at(nn - 1, nn - 2));
        y = x = 0.75 * s;
        w2 = -0.4375 * s * s;
      }
      ++its;

      // Look for two consecutive small subdiagonal elements.
      int m;
      double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
      for (m = nn - 2; m >= l; --m) {
        z = at(m, m);
        const double rr = x - z;
        double s = y - z;
        p = (rr * s - w2) / at(m + 1, m) + at(m, m + 1);
        q = at(m + 1, m + 1) - z - rr - s;
        r = at(m + 2, m + 1);
        s = std::fabs(p) + std::fabs(q) + std::fabs(r);
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        const double u = std::fabs(at(m, m - 1)) * (std::fabs(q) + std::fabs(r));
        const double v = std::fabs(p) * (std::fabs(at(m - 1, m - 1)) +
                                         std::fabs(z) +
                                         std::fabs(at(m + 1, m + 1)));
        if (u <= tol * v) break;
      }
      for (int i = m + 2; i <= nn; ++i) {
        at(i, i - 2) = 0.0;
        if (i != m + 2) at(i, i - 3) = 0.0;
      }

      // Double QR sweep on rows/columns m..nn.
      for (int k = m; k <= nn - 1; ++k) {
        if (k != m) {
          p = at(k, k - 1);
          q = at(k + 1, k - 1);
          r = k != nn - 1 ? at(k + 2, k - 1) : 0.0;
          x = std::fabs(p) + std::fabs(q) + std::fabs(r);
          if (x != 0.0) {
            p /= x;
            q /= x;
            r /= x;
          }
        }
        const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
        if (s == 0.0) continue;
        if (++rotations > rotation_budget) {
          throw NumericalError(
              "numerical-failure: reflection budget exhausted (" +
              std::to_string(rotations) + " > " +
              std::to_string(rotation_budget) + ")");
        }
        if (k == m) {
          if (l != m) at(k, k - 1) = -at(k, k - 1);
        } else {
          at(k, k - 1) = -s * x;
        }
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j <= nn; ++j) {
          double pp = at(k, j) + q * at(k + 1, j);
          if (k != nn - 1) {
            pp += r * at(k + 2, j);
            at(k + 2, j) -= pp * z;
          }
          at(k + 1, j) -= pp * y;
          at(k, j) -= pp * x;
        }
        const int mmin = nn < k + 3 ? nn : k + 3;
        for (int i = l; i <= mmin; ++i) {
          double pp = x * at(i, k) + y * at(i, k + 1);
          if (k != nn - 1) {
            pp += z * at(i, k + 2);
            at(i, k + 2) -= pp * r;
          }
          at(i, k + 1) -= pp * q;
          at(i, k) -= pp;
        }
      }
    }
  }
  return eig;
}

}  // namespace iltt
