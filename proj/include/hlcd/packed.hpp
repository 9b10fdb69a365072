/*
 * Copyright 2026 The hlcd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

#include "hlcd/gf4.hpp"

namespace hlcd::detail {

/**
 * A vector of up to 64*W GF(4) symbols split into two bit planes: symbol j
 * is lo[j] + hi[j]*w. Addition is plane-wise XOR and the Hamming weight is
 * popcount(lo | hi).
 */
template <std::size_t W>
struct PackedWord {
  std::array<std::uint64_t, W> lo{};
  std::array<std::uint64_t, W> hi{};

  static PackedWord pack(std::span<const Gf4> symbols) {
    PackedWord w;
    for (std::size_t j = 0; j < symbols.size(); ++j) {
      const std::uint8_t b = symbols[j].bits();
      const std::uint64_t bit = std::uint64_t{1} << (j % 64);
      if (b & 1u) w.lo[j / 64] |= bit;
      if (b & 2u) w.hi[j / 64] |= bit;
    }
    return w;
  }

  PackedWord& operator^=(const PackedWord& o) {
    for (std::size_t i = 0; i < W; ++i) {
      lo[i] ^= o.lo[i];
      hi[i] ^= o.hi[i];
    }
    return *this;
  }

  // (a + b w) * w = b + (a + b) w
  PackedWord times_omega() const {
    PackedWord r;
    for (std::size_t i = 0; i < W; ++i) {
      r.lo[i] = hi[i];
      r.hi[i] = lo[i] ^ hi[i];
    }
    return r;
  }

  PackedWord scaled(Gf4 s) const {
    switch (s.bits()) {
      case 0: return PackedWord{};
      case 1: return *this;
      case 2: return times_omega();
      default: return times_omega().times_omega();
    }
  }

  unsigned weight() const {
    unsigned w = 0;
    for (std::size_t i = 0; i < W; ++i) w += static_cast<unsigned>(std::popcount(lo[i] | hi[i]));
    return w;
  }
};

}  // namespace hlcd::detail
