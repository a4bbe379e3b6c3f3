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

#include <doctest.h>

#include "iltt/generate.hpp"
#include "iltt/metrics.hpp"
#include "oracles.hpp"

using namespace iltt;

TEST_SUITE_BEGIN("metrics");

TEST_CASE("3-cycle distances, frozen by hand") {
  // Each node reaches its successor in one step and its predecessor in two.
  const Tournament c3 = make_directed_3_cycle();
  const auto d = all_pairs_distances(c3);
  CHECK(d[0 * 3 + 1] == 1);
  CHECK(d[1 * 3 + 0] == 2);
  CHECK(d[0 * 3 + 0] == 0);
  for (NodeId u = 0; u < 3; ++u) {
    for (NodeId v = 0; v < 3; ++v) {
      if (u != v) CHECK((d[u * 3 + v] == 1 || d[u * 3 + v] == 2));
    }
  }
  const DistanceSummary s = summarize(c3);
  CHECK(s.strong);
  REQUIRE(s.wiener.has_value());
  CHECK(*s.wiener == 9);
  REQUIRE(s.avg_distance.has_value());
  CHECK(s.avg_distance->num == 3);
  CHECK(s.avg_distance->den == 2);
  CHECK(s.avg_distance->value == doctest::Approx(1.5));
  CHECK(s.diameter == 2);
  CHECK(s.alpha == 0);
}

TEST_CASE("distances agree with the reference oracle") {
  for (std::uint32_t n : {1u, 2u, 3u, 9u, 25u, 40u}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Tournament g = oracle::random_valid(n, 5000 + 10 * n + seed);
      const auto mine = all_pairs_distances(g);
      const auto ref = oracle::distances(g);
      REQUIRE(mine.size() == ref.size());
      for (std::size_t i = 0; i < mine.size(); ++i) {
        REQUIRE(mine[i] == (ref[i] == oracle::kInf ? kUnreachable : ref[i]));
      }
      const DistanceSummary s = summarize(g);
      CHECK(s.strong == oracle::strong(g));
      CHECK(s.diameter == oracle::diameter(g));
      if (s.strong) {
        REQUIRE(s.wiener.has_value());
        CHECK(*s.wiener == oracle::wiener(g));
      } else {
        CHECK_FALSE(s.wiener.has_value());
        CHECK_FALSE(s.avg_distance.has_value());
      }
      CHECK(s.alpha == oracle::alpha(g));
    }
  }
}

TEST_CASE("summaries are independent of the worker count") {
  const Tournament g =
      iterate(make_directed_3_cycle(), ModelKind::kIltt, 4).final_tournament();
  const DistanceSummary serial = summarize(g, 1);
  const DistanceSummary parallel = summarize(g, 8);
  CHECK(serial.wiener == parallel.wiener);
  CHECK(serial.diameter == parallel.diameter);
  CHECK(serial.strong == parallel.strong);
  CHECK(serial.alpha == parallel.alpha);
}

TEST_CASE("non-strong summaries omit the Wiener index") {
  const DistanceSummary s = summarize(make_linear_order(3));
  CHECK_FALSE(s.strong);
  CHECK_FALSE(s.wiener.has_value());
  CHECK_FALSE(s.avg_distance.has_value());
  CHECK(s.alpha == 3);  // transitive: no directed 3-cycles at all
  CHECK(s.diameter == 1);

  const DistanceSummary one = summarize(make_linear_order(1));
  CHECK(one.strong);
  CHECK(*one.wiener == 0);
  CHECK_FALSE(one.avg_distance.has_value());
}

TEST_CASE("alpha of a linear order counts every pair") {
  for (std::uint32_t n : {3u, 5u, 9u}) {
    CHECK(count_alpha(make_linear_order(n)) ==
          static_cast<std::uint64_t>(n) * (n - 1) / 2);
  }
  CHECK(count_alpha(make_directed_3_cycle()) == 0);
}

TEST_CASE("strongness and sinks") {
  CHECK(is_strong(make_directed_3_cycle()));
  CHECK_FALSE(is_strong(make_linear_order(2)));
  CHECK_FALSE(is_strong(make_linear_order(6)));
  CHECK(is_strong(make_linear_order(1)));
  CHECK(is_strong(
      iterate(make_directed_3_cycle(), ModelKind::kIltt, 3).final_tournament()));

  CHECK(has_sink(make_linear_order(3)));
  CHECK_FALSE(has_sink(make_directed_3_cycle()));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Tournament g = oracle::random_valid(7, seed);
    if (is_strong(g)) CHECK_FALSE(has_sink(g));
  }
}

TEST_CASE("clone distances after one step") {
  const Tournament copy =
      step(make_directed_3_cycle(), ModelKind::kIltt).tournament;
  const Tournament dual_step =
      step(make_directed_3_cycle(), ModelKind::kIlttDual).tournament;
  for (NodeId x = 0; x < 3; ++x) {
    CHECK(distances_from(copy, x)[3 + x] == 3);
    CHECK(distances_from(copy, 3 + x)[x] == 1);
    CHECK(distances_from(dual_step, x)[3 + x] == 2);
  }
  const DistanceSummary s = summarize(dual_step);
  CHECK(*s.wiener == 45);
  CHECK(s.avg_distance->value == doctest::Approx(1.5));
  CHECK(s.diameter == 2);
}

TEST_CASE("closed-form predictors, frozen values") {
  CHECK(predict_wiener_iltt(3, 9, 0) == 9);
  CHECK(predict_wiener_iltt(3, 9, 1) == 48);   // 4*3 + 4*9
  CHECK(predict_wiener_iltt(3, 9, 2) == 216);
  CHECK(predict_wiener_ilttd(3, 0, 1) == 45);  // 12*C(3,2) + 0 + 9
  CHECK(predict_wiener_ilttd(3, 0, 2) == 198); // 12*C(6,2) + 0 + 18
  CHECK_THROWS_AS(predict_wiener_ilttd(3, 0, 0), DomainError);
}

TEST_CASE("predictor recurrence consistency") {
  for (std::uint32_t n : {3u, 5u, 8u}) {
    for (u128 w0 : {u128{9}, u128{20}, u128{57}}) {
      for (std::uint32_t t = 0; t < 12; ++t) {
        CHECK(predict_wiener_iltt(n, w0, t + 1) ==
              4 * ((static_cast<u128>(n) << t) + predict_wiener_iltt(n, w0, t)));
      }
    }
  }
}

TEST_CASE("measured Wiener indices match both closed forms") {
  std::vector<Tournament> bases{make_directed_3_cycle()};
  for (std::uint32_t n = 3; n <= 5; ++n) {
    for (std::uint64_t seed = 1; bases.size() < 1 + 2 * (n - 2); ++seed) {
      Tournament g = make_random(n, 4000 + 100 * n + seed);
      if (is_strong(g)) bases.push_back(std::move(g));
    }
  }
  for (const Tournament& base : bases) {
    const u128 w0 = *summarize(base).wiener;
    const std::uint64_t a0 = count_alpha(base);
    const GenerationTrace copy =
        iterate(base, ModelKind::kIltt, 2, {kDefaultNodeCap, true});
    const GenerationTrace dual_trace =
        iterate(base, ModelKind::kIlttDual, 2, {kDefaultNodeCap, true});
    for (std::uint32_t t = 1; t <= 2; ++t) {
      CHECK(*summarize(copy.snapshot(t)).wiener ==
            predict_wiener_iltt(base.order(), w0, t));
      CHECK(*summarize(dual_trace.snapshot(t)).wiener ==
            predict_wiener_ilttd(base.order(), a0, t));
    }
  }
}

TEST_CASE("non-strong bases stay non-strong under the copying model") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Tournament base = oracle::random_valid(5, 8800 + seed);
    if (is_strong(base)) continue;
    GenerationTrace trace =
        iterate(base, ModelKind::kIltt, 3, {kDefaultNodeCap, true});
    for (std::uint32_t t = 1; t <= 3; ++t) {
      CHECK_FALSE(is_strong(trace.snapshot(t)));
    }
  }
}

TEST_CASE("distances_from validates its source") {
  CHECK_THROWS_AS(distances_from(make_directed_3_cycle(), 3), DomainError);
}

TEST_SUITE_END();
