// Copyright 2026 The viewsel Authors.
//
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

#pragma once

#include <bit>
#include <cstdint>
#include <string_view>

namespace viewsel {

/// 64-bit FNV-1a, used for instance and input-file fingerprints.
class Fnv1a {
 public:
  Fnv1a& bytes(std::string_view s) {
    for (unsigned char c : s) {
      state_ ^= c;
      state_ *= 0x100000001b3ULL;
    }
    return *this;
  }

  Fnv1a& u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      state_ ^= (v >> (8 * i)) & 0xffU;
      state_ *= 0x100000001b3ULL;
    }
    return *this;
  }

  Fnv1a& f64(double v) { return u64(std::bit_cast<std::uint64_t>(v)); }

  /// Length-prefixed so that ("ab","c") and ("a","bc") differ.
  Fnv1a& field(std::string_view s) {
    u64(s.size());
    return bytes(s);
  }

  std::uint64_t digest() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace viewsel
