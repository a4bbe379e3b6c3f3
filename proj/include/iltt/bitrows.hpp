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

#ifndef ILTT_BITROWS_HPP_
#define ILTT_BITROWS_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

// Word-level helpers for the packed boolean adjacency rows. Rows are
// little-endian within a word: bit (j & 63) of word (j >> 6) is column j.
// All routines assume (and preserve) zeroed padding past the last column.
namespace iltt::bits {

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::uint64_t nbits) {
  return static_cast<std::size_t>((nbits + kWordBits - 1) / kWordBits);
}

inline bool get(std::span<const std::uint64_t> row, std::uint64_t j) {
  return (row[j >> 6] >> (j & 63)) & 1u;
}

inline void set(std::span<std::uint64_t> row, std::uint64_t j) {
  row[j >> 6] |= std::uint64_t{1} << (j & 63);
}

inline void clear(std::span<std::uint64_t> row, std::uint64_t j) {
  row[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
}

inline std::uint64_t popcount(std::span<const std::uint64_t> row) {
  std::uint64_t c = 0;
  for (std::uint64_t w : row) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

template <class Fn>
inline void for_each_set_bit(std::span<const std::uint64_t> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t word = row[w];
    while (word) {
      const int b = std::countr_zero(word);
      fn(static_cast<std::uint32_t>(w * kWordBits + static_cast<std::size_t>(b)));
      word &= word - 1;
    }
  }
}

// OR the first n_bits of src into dst starting at bit dst_offset.
// Bits of dst outside the target window are untouched.
void copy_shifted(std::span<const std::uint64_t> src, std::uint64_t n_bits,
                  std::span<std::uint64_t> dst, std::uint64_t dst_offset);

// Transpose a packed n x n bit matrix (row stride wpr words), 64x64 tiles.
std::vector<std::uint64_t> transpose(std::span<const std::uint64_t> bits,
                                     std::uint32_t n, std::size_t wpr);

}  // namespace iltt::bits

#endif  // ILTT_BITROWS_HPP_
