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

#ifndef ILTT_INT128_HPP_
#define ILTT_INT128_HPP_

#include <cstdint>
#include <string>

namespace iltt {

// Wiener indices grow like 4^t * W0, so aggregate counters use 128 bits to
// make overflow impossible at cap sizes while keeping exact integer equality.
using u128 = unsigned __int128;

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

inline bool fits_u64(u128 v) { return v <= static_cast<u128>(UINT64_MAX); }

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace iltt

#endif  // ILTT_INT128_HPP_
