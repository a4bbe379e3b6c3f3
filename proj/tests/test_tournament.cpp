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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <doctest.h>

#include "iltt/tournament.hpp"
#include "oracles.hpp"

using namespace iltt;

TEST_SUITE_BEGIN("tournament");

TEST_CASE("linear order points low to high") {
  const Tournament g = make_linear_order(3);
  validate(g);
  CHECK(g.arc(0, 1));
  CHECK(g.arc(0, 2));
  CHECK(g.arc(1, 2));
  CHECK_FALSE(g.arc(2, 0));
}

TEST_CASE("linear order edge cases") {
  const Tournament one = make_linear_order(1);
  validate(one);
  CHECK(one.order() == 1);
  CHECK(one.out_degree(0) == 0);

  const Tournament four = make_linear_order(4);
  validate(four);
  std::uint32_t arcs = 0;
  for (NodeId v = 0; v < 4; ++v) arcs += four.out_degree(v);
  CHECK(arcs == 6);
  CHECK_FALSE(oracle::has_directed_cycle(four));

  CHECK_THROWS_AS(make_linear_order(0), DomainError);
}

TEST_CASE("directed 3-cycle is a rotation") {
  const Tournament g = make_directed_3_cycle();
  validate(g);
  CHECK(g.arc(0, 1));
  CHECK(g.arc(1, 2));
  CHECK(g.arc(2, 0));
  for (NodeId v = 0; v < 3; ++v) {
    CHECK(g.out_degree(v) == 1);
    CHECK(g.in_degree(v) == 1);
  }
  CHECK(oracle::alpha(g) == 0);  // every arc lies on the 3-cycle
}

TEST_CASE("random tournaments are deterministic per (n, seed)") {
  const Tournament a = make_random(5, 42);
  const Tournament b = make_random(5, 42);
  validate(a);
  CHECK(a == b);
  CHECK_FALSE(make_random(5, 43) == a);

  const Tournament single = make_random(1, 99);
  CHECK(single.order() == 1);
  CHECK_THROWS_AS(make_random(0, 1), DomainError);
}

TEST_CASE("random orientation counts behave binomially over 1000 seeds") {
  // Completeness: every instance carries exactly C(8,2) arcs. Per-pair
  // orientation counts stay within 3 sigma of the fair-coin mean.
  const int kSeeds = 1000;
  std::array<int, 28> low_to_high{};
  for (int seed = 0; seed < kSeeds; ++seed) {
    const Tournament g = make_random(8, static_cast<std::uint64_t>(seed));
    std::uint64_t arcs = 0;
    std::size_t pair = 0;
    for (NodeId i = 0; i < 8; ++i) {
      arcs += g.out_degree(i);
      for (NodeId j = i + 1; j < 8; ++j, ++pair) {
        if (g.arc(i, j)) ++low_to_high[pair];
      }
    }
    REQUIRE(arcs == 28);
  }
  const double sigma = std::sqrt(kSeeds * 0.25);
  for (std::size_t pair = 0; pair < 28; ++pair) {
    CHECK(std::abs(low_to_high[pair] - 500.0) <= 3.0 * sigma);
  }
}

TEST_CASE("dual reverses every arc and is an involution") {
  const Tournament c3 = make_directed_3_cycle();
  const Tournament d = dual(c3);
  validate(d);
  CHECK(d.arc(1, 0));
  CHECK(d.arc(2, 1));
  CHECK(d.arc(0, 2));
  CHECK(isomorphic(c3, d).isomorphic);  // cycle reversal is a relabeling

  for (std::uint32_t n : {1u, 2u, 7u, 64u, 65u, 130u}) {
    const Tournament g = oracle::random_valid(n, 1000 + n);
    const Tournament dd = dual(dual(g));
    validate(dual(g));
    CHECK(dd == g);
  }
}

TEST_CASE("dual of a linear order is the reversed linear order") {
  const Tournament l5 = make_linear_order(5);
  const Tournament d = dual(l5);
  const auto iso = isomorphic(l5, d);
  REQUIRE(iso.isomorphic);
  // Index reversal is one witnessing relabeling.
  for (NodeId i = 0; i < 5; ++i) {
    for (NodeId j = i + 1; j < 5; ++j) {
      CHECK(d.arc(4 - i, 4 - j) == l5.arc(i, j));
    }
  }
}

TEST_CASE("induced subtournaments") {
  const Tournament g = oracle::random_valid(9, 7);
  std::vector<NodeId> all(9);
  std::iota(all.begin(), all.end(), 0);
  CHECK(induced(g, all) == g);

  const std::vector<NodeId> pick{4, 1, 7};
  const Tournament sub = induced(g, pick);
  validate(sub);
  CHECK(sub.order() == 3);
  CHECK(sub.arc(0, 1) == g.arc(4, 1));
  CHECK(sub.arc(2, 0) == g.arc(7, 4));

  CHECK_THROWS_AS(induced(g, std::vector<NodeId>{}), DomainError);
  CHECK_THROWS_AS(induced(g, std::vector<NodeId>{1, 1}), DomainError);
  CHECK_THROWS_AS(induced(g, std::vector<NodeId>{9}), DomainError);
}

TEST_CASE("isomorphism on the 3-node classes") {
  const Tournament c3 = make_directed_3_cycle();
  const Tournament l3 = make_linear_order(3);
  CHECK(isomorphic(c3, dual(c3)).isomorphic);
  CHECK_FALSE(isomorphic(c3, l3).isomorphic);
  CHECK_FALSE(isomorphic(c3, make_linear_order(4)).isomorphic);  // orders differ
}

TEST_CASE("isomorphism witnesses map arcs to arcs") {
  std::mt19937_64 rng(11);
  for (std::uint32_t n : {4u, 6u, 8u}) {
    const Tournament g = oracle::random_valid(n, rng());
    // Relabel by a random permutation; must be isomorphic with a valid witness.
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Tournament h = Tournament::build(
        n, [&](std::uint32_t i, std::uint32_t j) { return g.arc(perm[i], perm[j]); });
    // h is g pulled back through perm: h.arc(a, b) == g.arc(perm[a], perm[b]).
    const auto iso = isomorphic(h, g);
    REQUIRE(iso.isomorphic);
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = 0; b < n; ++b) {
        if (a != b) CHECK(g.arc(iso.witness[a], iso.witness[b]) == h.arc(a, b));
      }
    }
    // Reflexive and symmetric.
    CHECK(isomorphic(g, g).isomorphic);
    CHECK(isomorphic(g, h).isomorphic);
  }
}

TEST_CASE("isomorphism order cap") {
  const Tournament big_a = oracle::random_valid(11, 1);
  const Tournament big_b = oracle::random_valid(11, 2);
  CHECK_THROWS_AS(isomorphic(big_a, big_b), DomainError);
}

TEST_CASE("differ_by counts flipped pairs") {
  const Tournament c3 = make_directed_3_cycle();
  const Tournament l3 = make_linear_order(3);
  CHECK(differ_by(c3, c3) == 0);
  CHECK(differ_by(l3, c3) == 1);  // only {0,2} is oriented oppositely
  for (std::uint32_t n : {2u, 5u, 40u}) {
    const Tournament g = oracle::random_valid(n, 50 + n);
    CHECK(differ_by(g, dual(g)) == static_cast<std::uint64_t>(n) * (n - 1) / 2);
    CHECK(differ_by(g, g) == 0);
  }
  CHECK_THROWS_AS(differ_by(c3, make_linear_order(4)), DomainError);
}

TEST_CASE("differ_by zero implies labeled equality") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Tournament g = oracle::random_valid(6, seed);
    const Tournament h = oracle::random_valid(6, seed + 1);
    CHECK((differ_by(g, h) == 0) == (g == h));
  }
}

TEST_CASE("validator rejects broken relations") {
  // A loop bit.
  {
    std::vector<std::uint64_t> rows(2, 0);
    rows[0] = 0b01;  // arc (0,0)
    const Tournament bad = Tournament::from_rows(2, std::move(rows));
    CHECK_THROWS_AS(validate(bad), DomainError);
  }
  // A pair carrying both orientations.
  {
    std::vector<std::uint64_t> rows(2, 0);
    rows[0] = 0b10;
    rows[1] = 0b01;
    const Tournament bad = Tournament::from_rows(2, std::move(rows));
    CHECK_THROWS_AS(validate(bad), DomainError);
  }
  // A missing pair.
  {
    std::vector<std::uint64_t> rows(2, 0);
    const Tournament bad = Tournament::from_rows(2, std::move(rows));
    CHECK_THROWS_AS(validate(bad), DomainError);
  }
  // Dirty padding past the last column.
  {
    std::vector<std::uint64_t> rows(2, 0);
    rows[0] = 0b10 | (std::uint64_t{1} << 40);
    const Tournament bad = Tournament::from_rows(2, std::move(rows));
    CHECK_THROWS_AS(validate(bad), DomainError);
  }
}

TEST_SUITE_END();
