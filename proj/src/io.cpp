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

#include "iltt/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace iltt {

namespace {

struct ArcLine {
  std::uint64_t u, v;
  std::size_t line;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<std::uint64_t> parse_u64(std::string_view tok) {
  std::uint64_t value = 0;
  const char* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || p != end) return std::nullopt;
  return value;
}

// Common back-end: assemble and check a tournament from parsed arc lines.
Tournament from_arcs(const std::vector<ArcLine>& arcs,
                     std::optional<std::uint64_t> declared_order) {
  std::uint64_t order = 0;
  if (declared_order) {
    order = *declared_order;
  } else {
    for (const auto& a : arcs) order = std::max({order, a.u + 1, a.v + 1});
  }
  if (order == 0) throw ParseError("parse error: no nodes", 0);
  if (order > kDefaultNodeCap * 4) {
    // Arbitrary hard sanity bound; real cap checks happen downstream.
    throw ParseError("parse error: implausible order " + std::to_string(order),
                     0);
  }
  const auto n = static_cast<std::uint32_t>(order);

  // 0 = unset, 1 = low->high, 2 = high->low; indexed by pair rank.
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
  auto pair_rank = [n](std::uint32_t i, std::uint32_t j) {
    // i < j
    return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
  };

  std::vector<std::uint64_t> rows(
      static_cast<std::size_t>(n) * bits::words_for(n), 0);
  const std::size_t wpr = bits::words_for(n);
  for (const auto& a : arcs) {
    if (a.u >= order || a.v >= order) {
      throw ParseError("parse error: node id out of range", a.line);
    }
    if (a.u == a.v) {
      throw ParseError("parse error: loop arc", a.line);
    }
    const auto u = static_cast<std::uint32_t>(a.u);
    const auto v = static_cast<std::uint32_t>(a.v);
    const std::uint8_t dir = u < v ? 1 : 2;
    auto& slot = seen[pair_rank(std::min(u, v), std::max(u, v))];
    if (slot != 0) {
      throw ParseError(slot == dir
                           ? "parse error: duplicate arc"
                           : "parse error: pair oriented both ways",
                       a.line);
    }
    slot = dir;
    rows[static_cast<std::size_t>(u) * wpr + (v >> 6)] |= std::uint64_t{1}
                                                          << (v & 63);
  }
  for (std::uint8_t s : seen) {
    if (s == 0) {
      throw ParseError("parse error: missing arcs; every pair needs exactly "
                       "one orientation",
                       0);
    }
  }
  return Tournament::from_rows(n, std::move(rows));
}

}  // namespace

std::string to_edge_list(const Tournament& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    for (std::uint32_t j = i + 1; j < g.order(); ++j) {
      if (g.arc(i, j)) {
        out << i << " " << j << "\n";
      } else {
        out << j << " " << i << "\n";
      }
    }
  }
  return out.str();
}

Tournament parse_edge_list(std::string_view text) {
  std::vector<ArcLine> arcs;
  std::optional<std::uint64_t> declared;
  std::size_t line_no = 0;
  bool saw_content = false;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream tok{std::string(line)};
    std::string a, b, rest;
    tok >> a >> b;
    if (tok >> rest) throw ParseError("parse error: trailing tokens", line_no);
    if (!saw_content && a == "n") {
      const auto v = parse_u64(b);
      if (!v) throw ParseError("parse error: bad order in header", line_no);
      declared = *v;
      saw_content = true;
      continue;
    }
    saw_content = true;
    const auto u = parse_u64(a);
    const auto v = parse_u64(b);
    if (!u || !v) throw ParseError("parse error: expected 'u v'", line_no);
    arcs.push_back({*u, *v, line_no});
  }
  return from_arcs(arcs, declared);
}

std::string to_dot(const Tournament& g) {
  std::ostringstream out;
  out << "digraph tournament {\n";
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    for (std::uint32_t j = i + 1; j < g.order(); ++j) {
      if (g.arc(i, j)) {
        out << "  " << i << " -> " << j << ";\n";
      } else {
        out << "  " << j << " -> " << i << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

Tournament parse_dot(std::string_view text) {
  std::vector<ArcLine> arcs;
  std::size_t line_no = 0;
  bool in_body = false;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    if (!in_body) {
      if (line.substr(0, 7) != "digraph" || line.back() != '{') {
        throw ParseError("parse error: expected 'digraph ... {'", line_no);
      }
      in_body = true;
      continue;
    }
    if (line == "}") {
      in_body = false;
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos || line.back() != ';') {
      throw ParseError("parse error: expected 'u -> v;'", line_no);
    }
    const auto u = parse_u64(trim(line.substr(0, arrow)));
    const auto v = parse_u64(trim(line.substr(arrow + 2, line.size() - arrow - 3)));
    if (!u || !v) throw ParseError("parse error: expected 'u -> v;'", line_no);
    arcs.push_back({*u, *v, line_no});
  }
  if (in_body) throw ParseError("parse error: unterminated digraph block", 0);
  return from_arcs(arcs, std::nullopt);
}

Tournament read_tournament_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 7, "digraph") == 0) {
    return parse_dot(text);
  }
  return parse_edge_list(text);
}

}  // namespace iltt
