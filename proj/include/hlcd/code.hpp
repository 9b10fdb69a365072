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
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlcd/error.hpp"
#include "hlcd/matrix.hpp"

namespace hlcd {

/**
 * A linear [n,k] code over GF(4), held by its reduced row-echelon generator.
 *
 * Two codes with the same row space compare equal. The zero code is not
 * representable; operations that would produce it throw.
 */
class LinearCode {
 public:
  // Accepts row-dependent input; throws on an all-zero (or empty) matrix.
  static LinearCode from_generator(const Gf4Matrix& m, std::string label = {}) {
    if (m.rows() == 0 || m.cols() == 0) throw InvalidArgument("generator matrix is empty");
    Gf4Matrix basis = row_basis(m);
    if (basis.rows() == 0) throw InvalidArgument("generator matrix is all zero");
    return LinearCode(std::move(basis), std::move(label));
  }

  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return gen_.rows(); }
  const Gf4Matrix& generator() const { return gen_; }
  const std::string& label() const { return label_; }

  LinearCode with_label(std::string label) const { return LinearCode(gen_, std::move(label)); }

  // Labels are not part of the code's identity.
  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

 private:
  LinearCode(Gf4Matrix canonical, std::string label)
      : gen_(std::move(canonical)), label_(std::move(label)) {}

  Gf4Matrix gen_;
  std::string label_;
};

/// Sorted, duplicate-free set of 1-based coordinates.
class CoordSet {
 public:
  CoordSet() = default;

  explicit CoordSet(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end())
      throw InvalidArgument("coordinate set has duplicates");
    if (!idx_.empty() && idx_.front() == 0)
      throw InvalidArgument("coordinates are 1-based; 0 is not a coordinate");
  }

  CoordSet(std::initializer_list<std::size_t> indices)
      : CoordSet(std::vector<std::size_t>(indices)) {}

  const std::vector<std::size_t>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }

  void check_within(std::size_t n) const {
    if (!idx_.empty() && idx_.back() > n)
      throw InvalidArgument("coordinate " + std::to_string(idx_.back()) +
                            " out of range for length " + std::to_string(n));
  }

  std::vector<std::size_t> zero_based() const {
    std::vector<std::size_t> out(idx_.size());
    std::transform(idx_.begin(), idx_.end(), out.begin(), [](std::size_t i) { return i - 1; });
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < idx_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(idx_[i]);
    }
    return s + "}";
  }

 private:
  std::vector<std::size_t> idx_;
};

// Euclidean dual generator (plain null space). Zero rows when k = n.
inline Gf4Matrix euclidean_dual_generator(const LinearCode& c) { return null_space(c.generator()); }

/**
 * Hermitian dual {x : sum x_i conj(y_i) = 0 for all y in C}, computed as the
 * plain null space of the entrywise-conjugated generator. Throws for k = n.
 */
inline LinearCode hermitian_dual(const LinearCode& c) {
  if (c.dimension() == c.length())
    throw InvalidArgument("hermitian dual of the full space is the zero code");
  return LinearCode::from_generator(null_space(c.generator().conjugate()));
}

// rank(G G^dagger); independent of the chosen generator.
inline std::size_t gram_rank(const LinearCode& c) {
  const auto& g = c.generator();
  return rank(g * g.conj_transpose());
}

inline bool is_lcd(const LinearCode& c) { return gram_rank(c) == c.dimension(); }
inline bool is_self_orthogonal(const LinearCode& c) { return gram_rank(c) == 0; }

// dim(C intersect C^perp_h) = k + (n - k) - rank [G ; H].
inline std::size_t hull_dimension(const LinearCode& c) {
  const std::size_t n = c.length(), k = c.dimension();
  if (k == n) return 0;
  const Gf4Matrix h = hermitian_dual(c).generator();
  return k + (n - k) - rank(vstack(c.generator(), h));
}

/**
 * Deletes the coordinates in `s`. The dimension may drop; the result
 * reports its true k. Throws when `s` covers every coordinate or when
 * every codeword is supported inside `s`.
 */
inline LinearCode puncture(const LinearCode& c, const CoordSet& s) {
  s.check_within(c.length());
  if (s.size() >= c.length()) throw InvalidArgument("cannot puncture every coordinate");
  if (s.empty()) return c;
  const auto drop = s.zero_based();
  Gf4Matrix reduced = c.generator().delete_columns(drop);
  if (reduced.is_zero()) throw InvalidArgument("puncturing leaves only the zero code");
  return LinearCode::from_generator(reduced, c.label());
}

/**
 * Codewords vanishing on `s`, with `s` deleted.
 *
 * Uses shorten(C, S) = E(puncture(E(C), S)) with E the Euclidean dual;
 * shortening only depends on supports, so no conjugation is involved.
 */
inline LinearCode shorten(const LinearCode& c, const CoordSet& s) {
  s.check_within(c.length());
  if (s.size() >= c.length()) throw InvalidArgument("cannot shorten on every coordinate");
  if (s.empty()) return c;
  const std::size_t m = c.length() - s.size();

  const Gf4Matrix dual = euclidean_dual_generator(c);
  Gf4Matrix punctured = dual.rows() ? row_basis(dual.delete_columns(s.zero_based()))
                                    : Gf4Matrix(0, m);
  if (punctured.rows() == m) throw InvalidArgument("shortening leaves only the zero code");
  if (punctured.rows() == 0) return LinearCode::from_generator(Gf4Matrix::identity(m), c.label());
  return LinearCode::from_generator(null_space(punctured), c.label());
}

// Appends a coordinate making every generator row sum to zero (plain sum).
inline LinearCode extend_parity(const LinearCode& c) {
  const auto& g = c.generator();
  Gf4Matrix parity(g.rows(), 1);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Gf4 sum;
    for (Gf4 x : g.row(i)) sum += x;
    parity(i, 0) = sum;
  }
  return LinearCode::from_generator(hstack(g, parity), c.label());
}

// The [k+m, k] code generated by [I_k | A].
inline LinearCode identity_augment(const Gf4Matrix& a, std::string label = {}) {
  if (a.rows() == 0) throw InvalidArgument("identity_augment needs at least one row");
  return LinearCode::from_generator(hstack(Gf4Matrix::identity(a.rows()), a), std::move(label));
}

// Code generated by the selected rows (1-based) of the canonical generator.
inline LinearCode row_subcode(const LinearCode& c, const std::vector<std::size_t>& rows) {
  if (rows.empty()) throw InvalidArgument("row selection is empty");
  std::vector<std::size_t> zero_based;
  for (auto r : rows) {
    if (r == 0 || r > c.dimension())
      throw InvalidArgument("row " + std::to_string(r) + " out of range for dimension " +
                            std::to_string(c.dimension()));
    zero_based.push_back(r - 1);
  }
  return LinearCode::from_generator(c.generator().select_rows(zero_based), c.label());
}

inline constexpr std::size_t kDefaultSimplexLengthLimit = 512;

// The printed S_2 generator: rows (0 1 1 1 1) and (1 0 1 w w^2).
inline Gf4Matrix simplex_seed() { return Gf4Matrix::from_digits({{0, 1, 1, 1, 1}, {1, 0, 1, 2, 3}}); }

/**
 * Generator of the [(4^k - 1)/3, k, 4^(k-1)] simplex code, built by
 *
 *   S_k = [ S_{k-1}  0  S_{k-1}  S_{k-1}    S_{k-1}     ]
 *         [ 0 ... 0  1  1 ... 1  w ... w    w^2 ... w^2 ]
 */
inline Gf4Matrix simplex_matrix(std::size_t k, std::size_t length_limit = kDefaultSimplexLengthLimit) {
  if (k < 2) throw InvalidArgument("simplex code needs k >= 2");
  std::size_t len = 5;
  for (std::size_t i = 2; i < k; ++i) {
    len = 4 * len + 1;
    if (len > length_limit) break;
  }
  if (len > length_limit)
    throw InvalidArgument("simplex(" + std::to_string(k) + ") exceeds the length limit " +
                          std::to_string(length_limit));

  Gf4Matrix s = simplex_seed();
  for (std::size_t level = 3; level <= k; ++level) {
    const std::size_t prev = s.cols();
    Gf4Matrix next(level, 4 * prev + 1);
    const Gf4 last_row[4] = {Gf4::zero(), Gf4::one(), Gf4::omega(), Gf4::omegabar()};
    for (std::size_t block = 0; block < 4; ++block) {
      // Block 0 occupies columns [0, prev); the lone unit column sits at prev.
      const std::size_t offset = block == 0 ? 0 : prev + 1 + (block - 1) * prev;
      for (std::size_t j = 0; j < prev; ++j) {
        for (std::size_t i = 0; i + 1 < level; ++i) next(i, offset + j) = s(i, j);
        next(level - 1, offset + j) = last_row[block];
      }
    }
    next(level - 1, prev) = Gf4::one();
    s = std::move(next);
  }
  return s;
}

inline LinearCode simplex(std::size_t k, std::size_t length_limit = kDefaultSimplexLengthLimit) {
  return LinearCode::from_generator(simplex_matrix(k, length_limit), "simplex-" + std::to_string(k));
}

/**
 * Column permutation and optional entrywise Frobenius. perm is 1-based:
 * column i of the result is column perm[i] of C.
 */
inline LinearCode permute_and_conjugate(const LinearCode& c, const std::vector<std::size_t>& perm,
                                        bool frobenius) {
  const std::size_t n = c.length();
  if (perm.size() != n) throw InvalidArgument("permutation length does not match the code length");
  std::vector<std::size_t> cols(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] == 0 || perm[i] > n || seen[perm[i] - 1])
      throw InvalidArgument("invalid coordinate permutation");
    seen[perm[i] - 1] = true;
    cols[i] = perm[i] - 1;
  }
  Gf4Matrix g = c.generator().select_columns(cols);
  if (frobenius) g = g.conjugate();
  return LinearCode::from_generator(g, c.label());
}

}  // namespace hlcd
