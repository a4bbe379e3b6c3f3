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

#include "iltt/bitrows.hpp"

#include <array>

namespace iltt::bits {

void copy_shifted(std::span<const std::uint64_t> src, std::uint64_t n_bits,
                  std::span<std::uint64_t> dst, std::uint64_t dst_offset) {
  if (n_bits == 0) return;
  const std::size_t src_words = words_for(n_bits);
  const unsigned shift = static_cast<unsigned>(dst_offset & 63);
  std::size_t d = static_cast<std::size_t>(dst_offset >> 6);
  if (shift == 0) {
    for (std::size_t w = 0; w < src_words; ++w) dst[d + w] |= src[w];
    return;
  }
  for (std::size_t w = 0; w < src_words; ++w) {
    const std::uint64_t v = src[w];
    dst[d + w] |= v << shift;
    const std::uint64_t hi = v >> (kWordBits - shift);
    if (hi) dst[d + w + 1] |= hi;
  }
}

namespace {

// In-place 64x64 bit transpose by recursive block swaps, adjusted for
// bit 0 = column 0 within each word.
void transpose64(std::array<std::uint64_t, 64>& a) {
  std::uint64_t m = 0x00000000FFFFFFFFULL;
  for (unsigned j = 32; j != 0; j >>= 1, m ^= m << j) {
    for (unsigned k = 0; k < 64; k = (k + j + 1) & ~j) {
      const std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & m;
      a[k] ^= t << j;
      a[k | j] ^= t;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> transpose(std::span<const std::uint64_t> bits,
                                     std::uint32_t n, std::size_t wpr) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n) * wpr, 0);
  const std::size_t tiles = words_for(n);
  std::array<std::uint64_t, 64> tile;
  for (std::size_t ti = 0; ti < tiles; ++ti) {
    const std::size_t rows = std::min<std::size_t>(64, n - ti * 64);
    for (std::size_t tj = 0; tj < tiles; ++tj) {
      for (std::size_t k = 0; k < 64; ++k) {
        tile[k] = k < rows ? bits[(ti * 64 + k) * wpr + tj] : 0;
      }
      transpose64(tile);
      const std::size_t cols = std::min<std::size_t>(64, n - tj * 64);
      for (std::size_t k = 0; k < cols; ++k) {
        out[(tj * 64 + k) * wpr + ti] = tile[k];
      }
    }
  }
  return out;
}

}  // namespace iltt::bits
