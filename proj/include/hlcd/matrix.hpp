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
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlcd/error.hpp"
#include "hlcd/gf4.hpp"

namespace hlcd {

/**
 * Dense row-major matrix over GF(4).
 *
 * A matrix with zero rows is allowed (it is what null_space returns for a
 * full-column-rank input); it still remembers its column count.
 */
class Gf4Matrix {
 public:
  Gf4Matrix() = default;

  Gf4Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Gf4Matrix(std::size_t rows, std::size_t cols, std::vector<Gf4> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw InvalidArgument("matrix entry count " + std::to_string(data_.size()) +
                            " does not match " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
    }
  }

  // Builds from digit rows (0,1,2,3 = 0,1,w,w^2); rows must not be ragged.
  static Gf4Matrix from_digits(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> tmp;
    for (const auto& r : rows) tmp.emplace_back(r);
    return from_digits(tmp);
  }

  static Gf4Matrix from_digits(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    Gf4Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidArgument("ragged digit rows");
      for (std::size_t j = 0; j < cols; ++j) {
        const int d = rows[i][j];
        if (d < 0 || d > 3) throw InvalidArgument("digit out of range: " + std::to_string(d));
        m(i, j) = Gf4::from_bits(static_cast<std::uint8_t>(d));
      }
    }
    return m;
  }

  static Gf4Matrix identity(std::size_t n) {
    Gf4Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Gf4::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Gf4& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Gf4 operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Gf4> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Gf4> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<Gf4>& entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Gf4 x) { return x.is_zero(); });
  }

  Gf4Matrix transpose() const {
    Gf4Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Entrywise Frobenius.
  Gf4Matrix conjugate() const {
    Gf4Matrix c = *this;
    for (auto& x : c.data_) x = x.conj();
    return c;
  }

  Gf4Matrix conj_transpose() const { return transpose().conjugate(); }

  // Keeps the listed columns (0-based), in the given order.
  Gf4Matrix select_columns(std::span<const std::size_t> cols) const {
    Gf4Matrix out(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
    return out;
  }

  Gf4Matrix select_rows(std::span<const std::size_t> rows) const {
    Gf4Matrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
      std::copy_n(row(rows[i]).begin(), cols_, out.row(i).begin());
    return out;
  }

  // Drops the listed columns (0-based, any order, duplicates ignored).
  Gf4Matrix delete_columns(std::span<const std::size_t> drop) const {
    std::vector<bool> gone(cols_, false);
    for (auto c : drop) gone.at(c) = true;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!gone[j]) keep.push_back(j);
    return select_columns(keep);
  }

  friend Gf4Matrix hstack(const Gf4Matrix& a, const Gf4Matrix& b) {
    if (a.rows_ != b.rows_) throw InvalidArgument("hstack: row counts differ");
    Gf4Matrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::copy_n(a.row(i).begin(), a.cols_, out.row(i).begin());
      std::copy_n(b.row(i).begin(), b.cols_, out.row(i).begin() + a.cols_);
    }
    return out;
  }

  friend Gf4Matrix vstack(const Gf4Matrix& a, const Gf4Matrix& b) {
    if (a.rows_ == 0) return b;
    if (b.rows_ == 0) return a;
    if (a.cols_ != b.cols_) throw InvalidArgument("vstack: column counts differ");
    std::vector<Gf4> data = a.data_;
    data.insert(data.end(), b.data_.begin(), b.data_.end());
    return {a.rows_ + b.rows_, a.cols_, std::move(data)};
  }

  friend Gf4Matrix operator*(const Gf4Matrix& a, const Gf4Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: inner dimensions differ");
    Gf4Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      auto dst = out.row(i);
      for (std::size_t t = 0; t < a.cols_; ++t) {
        const Gf4 f = a(i, t);
        if (f.is_zero()) continue;
        auto src = b.row(t);
        for (std::size_t j = 0; j < b.cols_; ++j) dst[j] += f * src[j];
      }
    }
    return out;
  }

  friend bool operator==(const Gf4Matrix&, const Gf4Matrix&) = default;

  // Rows of digits, one row per line.
  friend std::ostream& operator<<(std::ostream& os, const Gf4Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (j) os << ' ';
        os << static_cast<int>(m(i, j).bits());
      }
      os << '\n';
    }
    return os;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gf4> data_;
};

struct RrefResult {
  Gf4Matrix reduced;  // same shape as the input; zero rows sink to the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // 0-based pivot column of each nonzero row
};

/**
 * Reduced row-echelon form by Gauss-Jordan elimination.
 *
 * Columns are scanned left to right; the pivot row is the first row at or
 * below the current one with a nonzero entry in that column, and it is
 * scaled so the pivot becomes 1. The result is unique for a given row space.
 */
inline RrefResult rref(Gf4Matrix m) {
  RrefResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(r).begin());
    const Gf4 inv = m(r, c).inverse();
    for (auto& x : m.row(r)) x *= inv;
    auto pivot_row = m.row(r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Gf4 f = m(i, c);
      if (f.is_zero()) continue;
      auto dst = m.row(i);
      for (std::size_t j = c; j < m.cols(); ++j) dst[j] += f * pivot_row[j];
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(m);
  return res;
}

inline std::size_t rank(const Gf4Matrix& m) { return rref(m).rank; }

/**
 * Basis of the right kernel {x : M x^T = 0} (plain transpose, no
 * conjugation), returned as the rows of a (cols - rank) x cols matrix.
 */
inline Gf4Matrix null_space(const Gf4Matrix& m) {
  const auto [reduced, r, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  Gf4Matrix basis(n - r, n);
  std::size_t out = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    // x_free = 1; each pivot variable equals the (negated = same) coefficient.
    basis(out, free) = Gf4::one();
    for (std::size_t i = 0; i < r; ++i) basis(out, pivots[i]) = reduced(i, free);
    ++out;
  }
  return basis;
}

// First `rank` rows of the rref: a canonical basis of the row space.
inline Gf4Matrix row_basis(const Gf4Matrix& m) {
  auto res = rref(m);
  std::vector<std::size_t> keep(res.rank);
  for (std::size_t i = 0; i < res.rank; ++i) keep[i] = i;
  return res.reduced.select_rows(keep);
}

}  // namespace hlcd
