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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hlcd/gf4.hpp"
#include "hlcd/matrix.hpp"
#include "oracles.hpp"

using hlcd::Gf4;
using hlcd::Gf4Matrix;

namespace {

const Gf4 O = Gf4::zero(), I = Gf4::one(), W = Gf4::omega(), WB = Gf4::omegabar();

TEST(Gf4, AdditionExamples) {
  EXPECT_EQ(I + I, O);
  EXPECT_EQ(I + W, WB);
  EXPECT_EQ(W + W, O);
}

TEST(Gf4, MultiplicationExamples) {
  EXPECT_EQ(W * W * W, I);
  EXPECT_EQ(W * WB, I);
  EXPECT_EQ(W * W, WB);
  for (auto x : hlcd::kGf4Elements) EXPECT_EQ(O * x, O);
}

TEST(Gf4, ConjugationExamples) {
  EXPECT_EQ(W.conj(), WB);
  EXPECT_EQ(I.conj(), I);
  EXPECT_EQ(WB.conj().conj(), WB);
}

TEST(Gf4, FieldAxiomsExhaustive) {
  for (auto a : hlcd::kGf4Elements) {
    EXPECT_EQ(a + a, O);
    EXPECT_EQ(a + O, a);
    EXPECT_EQ(a * I, a);
    EXPECT_EQ(a.conj(), a * a);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ(a.conj() == a, a == O || a == I);
    if (a != O) EXPECT_EQ(a * a.inverse(), I);
    for (auto b : hlcd::kGf4Elements) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
      EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
      for (auto c : hlcd::kGf4Elements) {
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

TEST(Gf4, Printing) {
  std::ostringstream os;
  os << O << ' ' << I << ' ' << W << ' ' << WB;
  EXPECT_EQ(os.str(), "0 1 w w^2");
}

Gf4Matrix s2() { return hlcd::simplex_seed(); }

TEST(Matrix, ConjTransposeExamples) {
  Gf4Matrix m(1, 2, {W, I});
  Gf4Matrix want(2, 1, {WB, I});
  EXPECT_EQ(m.conj_transpose(), want);
  EXPECT_EQ(s2().conj_transpose().conj_transpose(), s2());
  EXPECT_TRUE((s2() * s2().conj_transpose()).is_zero());
  EXPECT_EQ((s2() * s2().conj_transpose()).rows(), 2u);
}

TEST(Matrix, ConjTransposeOfProduct) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto a = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
    auto b = oracle::random_matrix(rng, a.cols(), 1 + rng() % 6);
    EXPECT_EQ((a * b).conj_transpose(), b.conj_transpose() * a.conj_transpose());
  }
}

TEST(Matrix, RejectsBadShapes) {
  EXPECT_THROW(Gf4Matrix(2, 2, {I, I, I}), hlcd::InvalidArgument);
  EXPECT_THROW(Gf4Matrix::from_digits({{1, 0}, {1}}), hlcd::InvalidArgument);
  EXPECT_THROW(Gf4Matrix::from_digits({{4}}), hlcd::InvalidArgument);
}

TEST(Rref, Examples) {
  auto r = hlcd::rref(Gf4Matrix::identity(3));
  EXPECT_EQ(r.reduced, Gf4Matrix::identity(3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(hlcd::rank(s2()), 2u);
  EXPECT_EQ(hlcd::rank(s2() * s2().conj_transpose()), 0u);
}

TEST(Rref, PivotIsFirstNonzeroRowScaledToOne) {
  auto m = Gf4Matrix::from_digits({{0, 1}, {2, 3}, {3, 0}});
  auto r = hlcd::rref(m);
  EXPECT_EQ(r.reduced, Gf4Matrix::from_digits({{1, 0}, {0, 1}, {0, 0}}));
}

bool is_reduced(const hlcd::RrefResult& r) {
  const auto& m = r.reduced;
  for (std::size_t i = 0; i < r.rank; ++i) {
    const std::size_t p = r.pivots[i];
    if (i && p <= r.pivots[i - 1]) return false;
    for (std::size_t j = 0; j < p; ++j)
      if (!m(i, j).is_zero()) return false;
    for (std::size_t t = 0; t < m.rows(); ++t)
      if (m(t, p) != (t == i ? I : O)) return false;
  }
  for (std::size_t i = r.rank; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

TEST(Rref, RandomProperties) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto m = oracle::random_matrix(rng, 1 + rng() % 20, 1 + rng() % 30);
    if (t % 4 == 0) m = vstack(m, m);  // force dependent rows
    auto r = hlcd::rref(m);
    EXPECT_TRUE(is_reduced(r));
    EXPECT_EQ(hlcd::rref(r.reduced).reduced, r.reduced);
    EXPECT_EQ(r.rank, hlcd::rank(m.conj_transpose()));
    EXPECT_EQ(r.rank, hlcd::rank(m.transpose()));
    // Row equivalent: stacking adds no rank.
    EXPECT_EQ(hlcd::rank(vstack(m, r.reduced)), r.rank);
  }
}

TEST(NullSpace, Examples) {
  auto b = hlcd::null_space(Gf4Matrix::from_digits({{1, 1}}));
  EXPECT_EQ(b, Gf4Matrix::from_digits({{1, 1}}));
  auto e = hlcd::null_space(Gf4Matrix::identity(2));
  EXPECT_EQ(e.rows(), 0u);
  EXPECT_EQ(e.cols(), 2u);
  EXPECT_EQ(hlcd::null_space(hlcd::simplex_matrix(3)).rows(), 18u);
}

TEST(NullSpace, RandomKernelProperty) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    auto m = oracle::random_matrix(rng, 1 + rng() % 20, 1 + rng() % 30);
    auto b = hlcd::null_space(m);
    EXPECT_EQ(b.rows(), m.cols() - hlcd::rank(m));
    EXPECT_EQ(hlcd::rank(b), b.rows());
    if (b.rows()) EXPECT_TRUE((m * b.transpose()).is_zero());
  }
}

}  // namespace
