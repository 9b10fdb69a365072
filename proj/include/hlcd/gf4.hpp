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
#include <compare>
#include <cstdint>
#include <ostream>

namespace hlcd {

/**
 * An element of GF(4) = {0, 1, w, w^2}, with w^2 = 1 + w.
 *
 * The element a + b*w is stored as the two-bit value a | (b << 1), so
 * addition is XOR and the digits 0,1,2,3 of the qmat format map directly
 * onto 0, 1, w, w^2 (written "omegabar").
 */
class Gf4 {
 public:
  constexpr Gf4() = default;

  static constexpr Gf4 zero() { return Gf4(0); }
  static constexpr Gf4 one() { return Gf4(1); }
  static constexpr Gf4 omega() { return Gf4(2); }
  static constexpr Gf4 omegabar() { return Gf4(3); }

  // Only the low two bits are used.
  static constexpr Gf4 from_bits(std::uint8_t bits) { return Gf4(bits & 3u); }

  constexpr std::uint8_t bits() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  // Frobenius x -> x^2; swaps w and w^2 and fixes 0 and 1.
  constexpr Gf4 conj() const { return Gf4(kConj[value_]); }

  // Multiplicative inverse; inverse of zero is zero.
  constexpr Gf4 inverse() const { return Gf4(kInv[value_]); }

  friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(a.value_ ^ b.value_); }
  friend constexpr Gf4 operator-(Gf4 a, Gf4 b) { return a + b; }
  friend constexpr Gf4 operator*(Gf4 a, Gf4 b) { return Gf4(kMul[a.value_][b.value_]); }

  constexpr Gf4& operator+=(Gf4 o) { value_ ^= o.value_; return *this; }
  constexpr Gf4& operator*=(Gf4 o) { return *this = *this * o; }

  friend constexpr bool operator==(Gf4, Gf4) = default;
  friend constexpr auto operator<=>(Gf4, Gf4) = default;

  friend std::ostream& operator<<(std::ostream& os, Gf4 x) {
    static constexpr const char* kNames[] = {"0", "1", "w", "w^2"};
    return os << kNames[x.value_];
  }

 private:
  constexpr explicit Gf4(std::uint8_t v) : value_(v) {}

  static constexpr std::uint8_t kMul[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  };
  static constexpr std::uint8_t kInv[4] = {0, 1, 3, 2};
  static constexpr std::uint8_t kConj[4] = {0, 1, 3, 2};

  std::uint8_t value_ = 0;
};

inline constexpr std::array<Gf4, 4> kGf4Elements = {Gf4::zero(), Gf4::one(), Gf4::omega(),
                                                    Gf4::omegabar()};

}  // namespace hlcd
