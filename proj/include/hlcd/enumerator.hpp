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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hlcd/code.hpp"
#include "hlcd/error.hpp"
#include "hlcd/packed.hpp"

namespace hlcd {

/// Exact weight distribution A_0..A_n of an [n,k] code (k = 0 is the zero code).
struct WeightEnumerator {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::uint64_t> coeffs;  // size n + 1

  std::uint64_t operator[](std::size_t i) const { return coeffs.at(i); }

  // Smallest i >= 1 with A_i > 0; nullopt for the zero code.
  std::optional<std::size_t> min_weight() const {
    for (std::size_t i = 1; i < coeffs.size(); ++i)
      if (coeffs[i]) return i;
    return std::nullopt;
  }

  // Returns a description of the first broken normalization rule, or nothing.
  std::optional<std::string> normalization_error() const {
    if (coeffs.size() != n + 1) return "coefficient count is not n + 1";
    if (coeffs[0] != 1) return "A_0 != 1";
    if (2 * k >= 64) return "4^k does not fit in 64 bits";
    unsigned __int128 sum = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      sum += coeffs[i];
      if (i && coeffs[i] % 3) return "A_" + std::to_string(i) + " is not a multiple of 3";
    }
    if (sum != (static_cast<unsigned __int128>(1) << (2 * k))) return "coefficients do not sum to 4^k";
    return std::nullopt;
  }

  void validate() const {
    if (auto err = normalization_error()) throw InvalidArgument("invalid weight enumerator: " + *err);
  }

  // "1 + 63 z^16"
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (!coeffs[i]) continue;
      if (!first) os << " + ";
      first = false;
      os << coeffs[i];
      if (i == 1) os << " z";
      else if (i > 1) os << " z^" << i;
    }
    return first ? "0" : os.str();
  }

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/**
 * Parses "1+207z^14+378z^15" (spaces optional, "z" alone means z^1, a bare
 * number is the constant term) into a length-n coefficient vector.
 */
inline std::vector<std::uint64_t> parse_weight_polynomial(std::string_view text, std::size_t n) {
  std::vector<std::uint64_t> coeffs(n + 1, 0);
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) throw ParseError("empty weight polynomial");
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw ParseError("empty term in weight polynomial '" + std::string(text) + "'");
    const auto zpos = term.find_first_of("zy");
    std::uint64_t coef = 1;
    std::size_t exp = 0;
    try {
      if (zpos == std::string::npos) {
        coef = std::stoull(term);
      } else {
        if (zpos > 0) coef = std::stoull(term.substr(0, zpos));
        exp = 1;
        if (zpos + 1 < term.size()) {
          if (term[zpos + 1] != '^') throw ParseError("bad term '" + term + "'");
          exp = std::stoull(term.substr(zpos + 2));
        }
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad term '" + term + "' in weight polynomial");
    }
    if (exp > n) throw ParseError("exponent " + std::to_string(exp) + " exceeds length " + std::to_string(n));
    coeffs[exp] += coef;
    pos = end + 1;
  }
  return coeffs;
}

inline constexpr std::size_t kDefaultExhaustiveLimit = 13;

struct EnumerationOptions {
  std::size_t limit = kDefaultExhaustiveLimit;  // max dimension enumerated directly
  unsigned threads = 0;                         // 0 = hardware concurrency
};

namespace detail {

// Histogram of weights over one slice: leading row `lead` has coefficient 1,
// rows before it are 0, the `fixed` rows after it take the base-4 digits of
// `prefix`, and the remaining rows are walked in modular 4-ary Gray order.
template <std::size_t W>
void walk_slice(const std::vector<std::array<PackedWord<W>, 4>>& mult, std::size_t lead,
                std::size_t fixed, std::uint64_t prefix, std::vector<std::uint64_t>& hist) {
  const std::size_t k = mult.size();
  PackedWord<W> word = mult[lead][1];
  for (std::size_t t = 0; t < fixed; ++t) {
    const auto digit = static_cast<std::uint8_t>((prefix >> (2 * t)) & 3u);
    word ^= mult[lead + 1 + t][digit];
  }
  const std::size_t first_free = lead + 1 + fixed;
  const std::size_t free = k - first_free;

  // Digit j steps v -> v+1 (mod 4); the codeword moves by (v xor (v+1)) * row.
  std::vector<std::array<PackedWord<W>, 4>> delta(free);
  for (std::size_t j = 0; j < free; ++j)
    for (std::uint8_t v = 0; v < 4; ++v)
      delta[j][v] = mult[first_free + j][v ^ ((v + 1) & 3u)];
  std::vector<std::uint8_t> digits(free, 0);

  ++hist[word.weight()];
  const std::uint64_t steps = std::uint64_t{1} << (2 * free);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto j = static_cast<std::size_t>(std::countr_zero(i) >> 1);
    word ^= delta[j][digits[j]];
    digits[j] = (digits[j] + 1) & 3u;
    ++hist[word.weight()];
  }
}

template <std::size_t W>
std::vector<std::uint64_t> projective_histogram(const Gf4Matrix& gen, unsigned threads) {
  const std::size_t k = gen.rows(), n = gen.cols();
  std::vector<std::array<PackedWord<W>, 4>> mult(k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto base = PackedWord<W>::pack(gen.row(r));
    for (auto s : kGf4Elements) mult[r][s.bits()] = base.scaled(s);
  }

  // Slices: for every leading row, fix up to `split` following digits so
  // there is enough work to share between workers.
  struct Slice {
    std::size_t lead, fixed;
    std::uint64_t prefix;
  };
  std::vector<Slice> slices;
  const std::size_t split = threads > 1 ? 3 : 0;
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::size_t fixed = std::min(split, k - 1 - lead);
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << (2 * fixed)); ++p) slices.push_back({lead, fixed, p});
  }

  auto run = [&](std::size_t worker, std::size_t stride, std::vector<std::uint64_t>& hist) {
    for (std::size_t s = worker; s < slices.size(); s += stride)
      walk_slice<W>(mult, slices[s].lead, slices[s].fixed, slices[s].prefix, hist);
  };

  std::vector<std::vector<std::uint64_t>> partial(std::max(1u, threads),
                                                  std::vector<std::uint64_t>(n + 1, 0));
  if (threads <= 1) {
    run(0, 1, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t, threads, std::ref(partial[t]));
    for (auto& th : pool) th.join();
  }
  // Integer sums: the merged histogram does not depend on the partition.
  std::vector<std::uint64_t> hist(n + 1, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i <= n; ++i) hist[i] += p[i];
  return hist;
}

template <std::size_t... Ws>
std::vector<std::uint64_t> dispatch_histogram(const Gf4Matrix& gen, unsigned threads,
                                              std::index_sequence<Ws...>) {
  const std::size_t words = (gen.cols() + 63) / 64;
  std::vector<std::uint64_t> out;
  const bool hit = ((words == Ws + 1 ? (out = projective_histogram<Ws + 1>(gen, threads), true) : false) || ...);
  if (!hit) throw LimitExceeded("code length " + std::to_string(gen.cols()) + " exceeds 512");
  return out;
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detail

/**
 * Exact weight distribution by exhaustive enumeration of one representative
 * per 1-dimensional subspace ((4^k - 1)/3 codewords), each counted 3 times.
 * Codewords are visited in Gray order so each step costs one row addition.
 */
inline WeightEnumerator enumerate_weights(const LinearCode& c, const EnumerationOptions& opts = {}) {
  if (c.dimension() > opts.limit)
    throw LimitExceeded("dimension " + std::to_string(c.dimension()) + " exceeds the exhaustive limit " +
                        std::to_string(opts.limit));
  if (c.dimension() > 30) throw LimitExceeded("dimension above 30 overflows the enumerator");
  auto hist = detail::dispatch_histogram(c.generator(), detail::resolve_threads(opts.threads),
                                         std::make_index_sequence<8>{});
  WeightEnumerator w{c.length(), c.dimension(), std::move(hist)};
  for (std::size_t i = 1; i < w.coeffs.size(); ++i) w.coeffs[i] *= 3;
  w.coeffs[0] = 1;
  return w;
}

/**
 * Enumerator of the dual code from that of the code:
 *
 *   A'_j = 4^-k sum_i A_i K_j(i),
 *   K_j(i) = sum_s (-1)^s 3^(j-s) C(i,s) C(n-i, j-s).
 *
 * Intermediates use arbitrary-precision integers; the division by 4^k must
 * be exact and every output coefficient nonnegative, else the input was not
 * the enumerator of a linear code. The same identity holds for Hermitian
 * duals since conjugation preserves weights.
 */
inline WeightEnumerator macwilliams_transform(const WeightEnumerator& w) {
  using boost::multiprecision::cpp_int;
  w.validate();
  const std::size_t n = w.n;
  if (2 * (n - w.k) >= 64) throw LimitExceeded("dual enumerator does not fit in 64 bits");

  std::vector<std::vector<cpp_int>> binom(n + 1, std::vector<cpp_int>(n + 1, 0));
  for (std::size_t a = 0; a <= n; ++a) {
    binom[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
  }
  std::vector<cpp_int> pow3(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
  const cpp_int scale = cpp_int(1) << (2 * w.k);

  WeightEnumerator out{n, n - w.k, std::vector<std::uint64_t>(n + 1, 0)};
  for (std::size_t j = 0; j <= n; ++j) {
    cpp_int total = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (!w.coeffs[i]) continue;
      cpp_int kraw = 0;
      for (std::size_t s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        cpp_int term = pow3[j - s] * binom[i][s] * binom[n - i][j - s];
        if (s % 2) kraw -= term;
        else kraw += term;
      }
      total += kraw * w.coeffs[i];
    }
    if (total < 0 || total % scale != 0)
      throw InvalidArgument("MacWilliams transform produced a non-integral or negative A_" + std::to_string(j) +
                            "; input is not a linear code's enumerator");
    out.coeffs[j] = static_cast<std::uint64_t>(total / scale);
  }
  out.validate();
  return out;
}

inline WeightEnumerator zero_code_enumerator(std::size_t n) {
  WeightEnumerator w{n, 0, std::vector<std::uint64_t>(n + 1, 0)};
  w.coeffs[0] = 1;
  return w;
}

// Enumerates the Hermitian dual (n - k <= limit) and transforms back.
inline WeightEnumerator weight_enumerator_via_dual(const LinearCode& c, const EnumerationOptions& opts = {}) {
  const std::size_t n = c.length(), k = c.dimension();
  if (n - k > opts.limit)
    throw LimitExceeded("dual dimension " + std::to_string(n - k) + " exceeds the exhaustive limit " +
                        std::to_string(opts.limit));
  const WeightEnumerator dual = k == n ? zero_code_enumerator(n) : enumerate_weights(hermitian_dual(c), opts);
  return macwilliams_transform(dual);
}

// Picks the cheaper side: primal if k <= n - k, else the dual.
inline WeightEnumerator weight_enumerator(const LinearCode& c, const EnumerationOptions& opts = {}) {
  const std::size_t n = c.length(), k = c.dimension();
  if (std::min(k, n - k) > opts.limit)
    throw LimitExceeded("min(k, n-k) = " + std::to_string(std::min(k, n - k)) +
                        " exceeds the exhaustive limit " + std::to_string(opts.limit));
  return k <= n - k ? enumerate_weights(c, opts) : weight_enumerator_via_dual(c, opts);
}

inline std::size_t min_distance(const LinearCode& c, const EnumerationOptions& opts = {}) {
  return *weight_enumerator(c, opts).min_weight();
}

}  // namespace hlcd
