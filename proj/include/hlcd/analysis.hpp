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
#pragma once

#include <cstddef>
#include <string>

#include "hlcd/bounds.hpp"
#include "hlcd/code.hpp"
#include "hlcd/enumerator.hpp"
#include "hlcd/error.hpp"

namespace hlcd {

/// Entanglement-assisted quantum code [[n, 2k - n + c, d; c]].
struct EaqeccParams {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::size_t d = 0;
  std::size_t c = 0;

  std::string to_string() const {
    return "[[" + std::to_string(n) + "," + std::to_string(dim) + "," + std::to_string(d) + ";" +
           std::to_string(c) + "]]";
  }
  friend bool operator==(const EaqeccParams&, const EaqeccParams&) = default;
};

// c = rank(H H^dagger) with H generating the Hermitian dual; c = 0 for k = n.
inline EaqeccParams eaqecc_params(const LinearCode& code, std::size_t d) {
  const std::size_t n = code.length(), k = code.dimension();
  const std::size_t c = k == n ? 0 : gram_rank(hermitian_dual(code));
  if (2 * k + c < n) throw InvalidArgument("negative EAQECC dimension");
  return {n, 2 * k + c - n, d, c};
}

enum class Optimality { optimal, nearly_optimal, below_bounds, above_table };

inline const char* to_string(Optimality o) {
  switch (o) {
    case Optimality::optimal: return "optimal-LCD";
    case Optimality::nearly_optimal: return "nearly-optimal-LCD";
    case Optimality::below_bounds: return "below-bounds";
    case Optimality::above_table: return "above-table";
  }
  return "?";
}

struct OptimalityVerdict {
  Optimality status;
  std::size_t d_computed;
  std::size_t d_reference;
};

// Compares d against the best-known linear distance for (n, k).
inline OptimalityVerdict classify_optimality(std::size_t n, std::size_t k, std::size_t d,
                                             const BoundsTable& bounds) {
  const BoundsEntry* e = bounds.find(n, k);
  if (!e || !e->linear_best)
    throw InvalidArgument("no best-known distance for (" + std::to_string(n) + "," + std::to_string(k) + ")");
  const std::size_t ref = *e->linear_best;
  Optimality s = Optimality::below_bounds;
  if (d > ref) s = Optimality::above_table;
  else if (d == ref) s = Optimality::optimal;
  else if (d + 1 == ref) s = Optimality::nearly_optimal;
  return {s, d, ref};
}

}  // namespace hlcd
