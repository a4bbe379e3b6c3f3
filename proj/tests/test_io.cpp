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

#include <cstdio>
#include <fstream>
#include <string>

#include <doctest.h>

#include "iltt/io.hpp"
#include "oracles.hpp"

using namespace iltt;

TEST_SUITE_BEGIN("io");

TEST_CASE("edge list round-trips bit-exactly") {
  for (std::uint32_t n : {1u, 2u, 3u, 17u, 40u, 65u}) {
    const Tournament g = oracle::random_valid(n, 300 + n);
    CHECK(parse_edge_list(to_edge_list(g)) == g);
  }
}

TEST_CASE("edge list tolerates comments, blanks, and a missing header") {
  const Tournament g = parse_edge_list(
      "# a 3-cycle\n"
      "\n"
      "0 1\n"
      "1 2\n"
      "# middle comment\n"
      "2 0\n");
  CHECK(g == make_directed_3_cycle());

  const Tournament with_header = parse_edge_list("n 3\n0 1\n1 2\n2 0\n");
  CHECK(with_header == g);
}

TEST_CASE("edge list parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(line_of("0 1\n1 2\n2 0\n0 1\n") == 4);        // duplicate arc
  CHECK(line_of("0 1\n1 0\n") == 2);                  // both orientations
  CHECK(line_of("n 3\n0 1\n1 2\n2 0\n3 0\n") == 5);   // id out of range
  CHECK(line_of("0 0\n") == 1);                       // loop
  CHECK(line_of("0 1\nx 2\n") == 2);                  // bad token
  CHECK(line_of("0 1 9\n") == 1);                     // trailing tokens
  CHECK(line_of("n 3\n0 1\n1 2\n") == 0);             // missing pair
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("dot export of the 3-cycle is stable") {
  const std::string dot = to_dot(make_directed_3_cycle());
  CHECK(dot ==
        "digraph tournament {\n"
        "  0 -> 1;\n"
        "  2 -> 0;\n"
        "  1 -> 2;\n"
        "}\n");
}

TEST_CASE("dot round-trips and rejects malformed input") {
  for (std::uint32_t n : {2u, 9u, 33u}) {
    const Tournament g = oracle::random_valid(n, 900 + n);
    CHECK(parse_dot(to_dot(g)) == g);
  }
  CHECK_THROWS_AS(parse_dot("graph { 0 -> 1; }\n"), ParseError);
  CHECK_THROWS_AS(parse_dot("digraph t {\n0 -> 1\n}\n"), ParseError);  // no ';'
  CHECK_THROWS_AS(parse_dot("digraph t {\n0 -> 1;\n"), ParseError);  // no '}'
}

TEST_CASE("file reader dispatches on content") {
  const Tournament g = oracle::random_valid(6, 77);
  const std::string edge_path = "io_test_edge.tmp";
  const std::string dot_path = "io_test_dot.tmp";
  {
    std::ofstream(edge_path) << to_edge_list(g);
    std::ofstream(dot_path) << to_dot(g);
  }
  CHECK(read_tournament_file(edge_path) == g);
  CHECK(read_tournament_file(dot_path) == g);
  std::remove(edge_path.c_str());
  std::remove(dot_path.c_str());
  CHECK_THROWS_AS(read_tournament_file("does_not_exist.tmp"), DomainError);
}

TEST_SUITE_END();
