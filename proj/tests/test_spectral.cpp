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

#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "iltt/spectral.hpp"
#include "oracles.hpp"

using namespace iltt;

namespace {

double min_dist(const std::vector<std::complex<double>>& set,
                std::complex<double> z) {
  double best = 1e300;
  for (const auto& v : set) best = std::min(best, std::abs(v - z));
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("dense solver on small matrices with known spectra") {
  // Symmetric 2x2: eigenvalues 1 and 3.
  {
    const auto eig = dense_eigenvalues({2, 1, 1, 2}, 2);
    REQUIRE(eig.size() == 2);
    std::vector<double> re{eig[0].real(), eig[1].real()};
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(re[1] == doctest::Approx(3.0).epsilon(1e-12));
  }
  // Rotation-like 2x2: eigenvalues +-i.
  {
    const auto eig = dense_eigenvalues({0, -1, 1, 0}, 2);
    REQUIRE(eig.size() == 2);
    CHECK(std::abs(eig[0].real()) < 1e-12);
    CHECK(std::abs(std::abs(eig[0].imag()) - 1.0) < 1e-12);
  }
  CHECK(dense_eigenvalues({}, 0).empty());
  CHECK_THROWS_AS(dense_eigenvalues({1.0, 2.0}, 3), DomainError);
}

TEST_CASE("3-cycle spectrum: the cube roots of unity") {
  const Spectrum s = direct_spectrum(make_directed_3_cycle());
  REQUIRE(s.values.size() == 3);
  CHECK(s.zero_count == 0);
  CHECK(s.provenance == SpectrumProvenance::kDirect);
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  CHECK(min_dist(s.values, {1.0, 0.0}) < 1e-10);
  CHECK(min_dist(s.values, {-0.5, half_sqrt3}) < 1e-10);
  CHECK(min_dist(s.values, {-0.5, -half_sqrt3}) < 1e-10);
}

TEST_CASE("linear orders are nilpotent: spectra vanish exactly") {
  for (std::uint32_t n : {2u, 5u, 12u}) {
    const Spectrum s = direct_spectrum(make_linear_order(n));
    REQUIRE(s.values.size() == n);
    CHECK(s.zero_count == n);
    for (const auto& v : s.values) CHECK(std::abs(v) <= 1e-12);
  }
}

TEST_CASE("trace identities hold for random inputs") {
  for (std::uint32_t n : {4u, 6u, 9u, 30u}) {
    const Tournament g = oracle::random_valid(n, 510 + n);
    const Spectrum s = direct_spectrum(g);
    std::complex<double> sum{0, 0}, sum_sq{0, 0};
    for (const auto& v : s.values) {
      sum += v;
      sum_sq += v * v;
    }
    CHECK(std::abs(sum) <= n * 1e-9);      // trace(A) = 0
    CHECK(std::abs(sum_sq) <= n * 1e-9);   // trace(A^2) = 0: no 2-cycles
  }
}

TEST_CASE("spectra are sorted and deterministic") {
  const Tournament g = oracle::random_valid(12, 99);
  const Spectrum a = direct_spectrum(g);
  const Spectrum b = direct_spectrum(g);
  CHECK(a.values == b.values);
  for (std::size_t i = 1; i < a.values.size(); ++i) {
    const bool ordered =
        a.values[i - 1].real() < a.values[i].real() ||
        (a.values[i - 1].real() == a.values[i].real() &&
         a.values[i - 1].imag() <= a.values[i].imag());
    CHECK(ordered);
  }
}

TEST_CASE("one recurrence step from the 3-cycle") {
  // lambda = 1 satisfies mu^2 - 2 mu - 1 = 0, so 1 +- sqrt(2) must appear.
  const Spectrum base = direct_spectrum(make_directed_3_cycle());
  const Spectrum rec = recurrence_spectrum(nonzero_values(base, 1e-7), 1);
  REQUIRE(rec.values.size() == 6);
  CHECK(rec.provenance == SpectrumProvenance::kRecurrence);
  CHECK(min_dist(rec.values, {1.0 + std::sqrt(2.0), 0.0}) < 1e-10);
  CHECK(min_dist(rec.values, {1.0 - std::sqrt(2.0), 0.0}) < 1e-10);

  // No recurrence output can sit at -1/2.
  for (const auto& v : rec.values) {
    CHECK(std::abs(v - std::complex<double>{-0.5, 0.0}) > 1e-9);
  }
}

TEST_CASE("recurrence on an empty non-zero set stays empty") {
  const Spectrum rec = recurrence_spectrum({}, 5);
  CHECK(rec.values.empty());
}

TEST_CASE("branch coincidence at lambda = -1 gives a double root") {
  // lambda^2 + lambda = 0 there, so both signs give mu = -1.
  const Spectrum rec = recurrence_spectrum({{-1.0, 0.0}}, 1);
  REQUIRE(rec.values.size() == 2);
  CHECK(std::abs(rec.values[0] - std::complex<double>{-1.0, 0.0}) < 1e-12);
  CHECK(std::abs(rec.values[1] - std::complex<double>{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("recurrence validation against the direct route") {
  const RecurrenceReport one = validate_recurrence(make_directed_3_cycle(), 1);
  CHECK(one.matched);
  CHECK(one.final_order == 6);
  CHECK(one.max_set_distance < 1e-9);
  CHECK(one.min_distance_to_minus_half > 1e-3);

  const RecurrenceReport nil = validate_recurrence(make_linear_order(4), 3);
  CHECK(nil.matched);
  CHECK(nil.max_set_distance == 0.0);
  CHECK(nil.direct_zero_count == 32);
  CHECK(nil.clusters.empty());

  for (std::uint32_t n = 3; n <= 5; ++n) {
    const Tournament base = oracle::random_valid(n, 71 + n);
    for (std::uint32_t t = 0; t <= 2; ++t) {
      const RecurrenceReport rep = validate_recurrence(base, t);
      CHECK(rep.matched);
      if (t >= 1) CHECK(rep.min_distance_to_minus_half > 1e-8);
    }
  }
}

TEST_CASE("cluster multiplicities cover both routes") {
  const RecurrenceReport rep = validate_recurrence(make_directed_3_cycle(), 2);
  REQUIRE(rep.matched);
  std::uint32_t direct_total = 0, rec_total = 0;
  for (const auto& c : rep.clusters) {
    direct_total += c.direct_multiplicity;
    rec_total += c.recurrence_multiplicity;
  }
  CHECK(direct_total == 12 - rep.direct_zero_count);
  CHECK(rec_total == 12);  // 3 base values, doubled twice
}

TEST_CASE("direct solves are capped") {
  CHECK_THROWS_AS(direct_spectrum(oracle::random_valid(1025, 3)),
                  CapacityError);
}

TEST_CASE("an exhausted reflection budget is a numerical failure") {
  EigOptions opts;
  opts.max_rotations_factor = 0;
  std::vector<double> a(64);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& x : a) x = u(rng);
  CHECK_THROWS_AS(dense_eigenvalues(std::move(a), 8, opts), NumericalError);
}

TEST_SUITE_END();
