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

#ifndef ILTT_IO_HPP_
#define ILTT_IO_HPP_

#include <string>
#include <string_view>

#include "iltt/tournament.hpp"

namespace iltt {

// Canonical interchange text format:
//   n <order>          (optional header; inferred from max id when absent)
//   u v                (one line per arc, meaning u -> v)
//   # ...              (comment lines ignored)
// Every unordered pair must appear exactly once in exactly one orientation.
// The writer emits the header and then pairs {i, j}, i < j, in lexicographic
// order, each with its actual orientation, so write/parse round-trips are
// bit-exact.
std::string to_edge_list(const Tournament& g);
Tournament parse_edge_list(std::string_view text);

// DOT export ("digraph { u -> v; }"), one edge per arc in the same pair
// order as the edge list. The parser accepts that shape back.
std::string to_dot(const Tournament& g);
Tournament parse_dot(std::string_view text);

// Reads a file and dispatches on content ("digraph" prefix -> DOT).
Tournament read_tournament_file(const std::string& path);

}  // namespace iltt

#endif  // ILTT_IO_HPP_
