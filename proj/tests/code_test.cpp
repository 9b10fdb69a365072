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

#include <numeric>
#include <random>

#include "hlcd/hlcd.hpp"
#include "oracles.hpp"

using hlcd::CoordSet;
using hlcd::Gf4Matrix;
using hlcd::LinearCode;

namespace {

LinearCode code(std::initializer_list<std::initializer_list<int>> rows) {
  return LinearCode::from_generator(Gf4Matrix::from_digits(rows));
}

TEST(LinearCode, FromGenerator) {
  auto s2 = LinearCode::from_generator(hlcd::simplex_seed());
  EXPECT_EQ(s2.length(), 5u);
  EXPECT_EQ(s2.dimension(), 2u);
  auto full = LinearCode::from_generator(Gf4Matrix::identity(4));
  EXPECT_EQ(full.dimension(), 4u);
  auto line = code({{1, 2}, {1, 2}});
  EXPECT_EQ(line.length(), 2u);
  EXPECT_EQ(line.dimension(), 1u);
  EXPECT_THROW(code({{0, 0}}), hlcd::InvalidArgument);
  EXPECT_THROW(LinearCode::from_generator(Gf4Matrix(0, 3)), hlcd::InvalidArgument);
}

TEST(LinearCode, CanonicalFormDecidesEquality) {
  EXPECT_EQ(code({{1, 0, 1}, {0, 1, 2}}), code({{1, 1, 3}, {0, 2, 3}}));
  EXPECT_FALSE(code({{1, 0, 1}}) == code({{1, 0, 2}}));
}

TEST(CoordSet, Validation) {
  EXPECT_EQ(CoordSet({3, 1}).to_string(), "{1,3}");
  EXPECT_THROW(CoordSet({0, 1}), hlcd::InvalidArgument);
  EXPECT_THROW(CoordSet({2, 2}), hlcd::InvalidArgument);
  EXPECT_THROW(CoordSet({4}).check_within(3), hlcd::InvalidArgument);
}

TEST(HermitianDual, Examples) {
  EXPECT_EQ(hlcd::hermitian_dual(code({{1, 0}})), code({{0, 1}}));
  auto d = hlcd::hermitian_dual(oracle::load_code("g_6_21"));
  EXPECT_EQ(d.length(), 21u);
  EXPECT_EQ(d.dimension(), 15u);
  EXPECT_EQ(hlcd::min_distance(d), 5u);
  auto s2 = hlcd::simplex(2);
  auto s2d = hlcd::hermitian_dual(s2);
  EXPECT_EQ(hlcd::rank(vstack(s2d.generator(), s2.generator())), s2d.dimension());
  EXPECT_THROW(hlcd::hermitian_dual(LinearCode::from_generator(Gf4Matrix::identity(3))), hlcd::InvalidArgument);
}

TEST(GramRank, Examples) {
  EXPECT_EQ(hlcd::gram_rank(LinearCode::from_generator(Gf4Matrix::identity(5))), 5u);
  EXPECT_EQ(hlcd::gram_rank(hlcd::simplex(3)), 0u);
  EXPECT_EQ(hlcd::gram_rank(oracle::load_code("g_7_19")), 7u);
}

TEST(Lcd, Examples) {
  EXPECT_TRUE(hlcd::is_lcd(oracle::load_code("g_7_20")));
  EXPECT_FALSE(hlcd::is_lcd(hlcd::simplex(2)));
  auto a15 = hlcd::load_qmat(oracle::data_path("matrices/a_15.qmat")).matrix;
  EXPECT_FALSE(hlcd::is_lcd(hlcd::identity_augment(a15)));
  EXPECT_TRUE(hlcd::is_self_orthogonal(hlcd::simplex(4)));
  EXPECT_FALSE(hlcd::is_self_orthogonal(LinearCode::from_generator(Gf4Matrix::identity(2))));
  EXPECT_FALSE(hlcd::is_self_orthogonal(oracle::load_code("g_8_25")));
}

TEST(Hull, Examples) {
  EXPECT_EQ(hlcd::hull_dimension(hlcd::simplex(2)), 2u);
  EXPECT_EQ(hlcd::hull_dimension(oracle::load_code("g_7_20")), 0u);
  EXPECT_EQ(hlcd::hull_dimension(oracle::load_code("g_7_24")), 1u);
  EXPECT_EQ(hlcd::hull_dimension(LinearCode::from_generator(Gf4Matrix::identity(3))), 0u);
}

// Intersection computed directly: C and its dual are both null spaces, so
// their meet is the null space of the stacked check matrices.
std::size_t direct_hull(const LinearCode& c) {
  if (c.dimension() == c.length()) return 0;
  const Gf4Matrix check_c = hlcd::euclidean_dual_generator(c);          // x in C  <=> check_c x = 0
  const Gf4Matrix check_d = c.generator().conjugate();                   // x in C^h <=> conj(G) x = 0
  return hlcd::null_space(vstack(check_c, check_d)).rows();
}

TEST(Hull, MatchesDirectIntersectionOnCorpusMatrices) {
  for (const char* id : {"g_6_21", "g_6_24", "g_7_20", "g_8_25", "g_7_24", "g_7_25", "g_7_19", "g_6_25", "s_2"}) {
    auto c = oracle::load_code(id);
    EXPECT_EQ(hlcd::hull_dimension(c), direct_hull(c)) << id;
    EXPECT_EQ(hlcd::hull_dimension(c), c.dimension() - hlcd::gram_rank(c)) << id;
  }
}

TEST(Puncture, Examples) {
  auto g719 = oracle::load_code("g_7_19");
  EXPECT_EQ(hlcd::puncture(g719, CoordSet{}), g719);
  auto p = hlcd::puncture(g719, CoordSet{1});
  EXPECT_EQ(p.length(), 18u);
  EXPECT_EQ(p.dimension(), 7u);
  EXPECT_EQ(hlcd::min_distance(p), 9u);
  EXPECT_TRUE(hlcd::is_lcd(p));
  EXPECT_THROW(hlcd::puncture(code({{1, 1}}), CoordSet{1, 2}), hlcd::InvalidArgument);
  EXPECT_THROW(hlcd::puncture(code({{1, 1}}), CoordSet{3}), hlcd::InvalidArgument);
  // Dimension drop is reported, not an error.
  auto dropped = hlcd::puncture(code({{1, 0, 0}, {0, 1, 0}}), CoordSet{2});
  EXPECT_EQ(dropped.dimension(), 1u);
  EXPECT_THROW(hlcd::puncture(code({{1, 0, 0}}), CoordSet{1}), hlcd::InvalidArgument);
}

TEST(Shorten, Examples) {
  auto g825 = oracle::load_code("g_8_25");
  EXPECT_EQ(hlcd::shorten(g825, CoordSet{}), g825);
  auto s = hlcd::shorten(g825, CoordSet{2});
  EXPECT_EQ(s.length(), 24u);
  EXPECT_EQ(s.dimension(), 7u);
  EXPECT_EQ(hlcd::min_distance(s), 12u);
  auto a10 = hlcd::load_qmat(oracle::data_path("matrices/a_10_t.qmat")).matrix;
  auto t = hlcd::shorten(hlcd::identity_augment(a10), CoordSet{1, 2, 3, 4, 5});
  EXPECT_EQ(t.length(), 25u);
  EXPECT_EQ(t.dimension(), 15u);
  EXPECT_EQ(hlcd::min_distance(t), 6u);
  EXPECT_TRUE(hlcd::is_lcd(t));
  EXPECT_THROW(hlcd::shorten(code({{1, 1, 0}}), CoordSet{1}), hlcd::InvalidArgument);
  // Full space shortened stays full.
  auto full = hlcd::shorten(LinearCode::from_generator(Gf4Matrix::identity(4)), CoordSet{2});
  EXPECT_EQ(full, LinearCode::from_generator(Gf4Matrix::identity(3)));
}

TEST(Shorten, MatchesDirectEliminationOnRandomCodes) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    auto c = oracle::random_code(rng, 14);
    if (c.length() < 2) continue;
    auto s = oracle::random_coords(rng, c.length());
    auto want = oracle::direct_shorten(c, s);
    if (want.rows() == 0) {
      EXPECT_THROW(hlcd::shorten(c, s), hlcd::InvalidArgument);
      continue;
    }
    EXPECT_EQ(hlcd::shorten(c, s).generator(), want);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Extend, Examples) {
  EXPECT_EQ(hlcd::extend_parity(code({{1, 1}})), code({{1, 1, 0}}));
  EXPECT_EQ(hlcd::extend_parity(code({{1, 0}})), code({{1, 0, 1}}));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto c = oracle::random_code(rng, 12);
    auto e = hlcd::extend_parity(c);
    EXPECT_EQ(e.dimension(), c.dimension());
    EXPECT_EQ(hlcd::puncture(e, CoordSet{e.length()}), c);
  }
}

TEST(IdentityAugment, Examples) {
  auto a12 = hlcd::load_qmat(oracle::data_path("matrices/a_12_t.qmat")).matrix;
  auto c = hlcd::identity_augment(a12);
  EXPECT_EQ(c.length(), 30u);
  EXPECT_EQ(c.dimension(), 18u);
  hlcd::EnumerationOptions wide{15, 0};
  EXPECT_EQ(hlcd::min_distance(c, wide), 8u);
  auto z = hlcd::identity_augment(Gf4Matrix(4, 1));
  EXPECT_EQ(z.length(), 5u);
  EXPECT_EQ(z.dimension(), 4u);
  EXPECT_EQ(hlcd::min_distance(z), 1u);
}

TEST(RowSubcode, Examples) {
  auto g825 = oracle::load_code("g_8_25");
  EXPECT_EQ(hlcd::row_subcode(g825, {1, 2, 3, 4, 5, 6, 7, 8}), g825);
  auto sub = hlcd::row_subcode(g825, {1, 2, 3, 4, 5, 6, 7});
  EXPECT_EQ(sub.dimension(), 7u);
  EXPECT_EQ(hlcd::min_distance(sub), 12u);
  auto one = hlcd::row_subcode(LinearCode::from_generator(Gf4Matrix::identity(3)), {2});
  EXPECT_EQ(one, code({{0, 1, 0}}));
  EXPECT_THROW(hlcd::row_subcode(g825, {}), hlcd::InvalidArgument);
  EXPECT_THROW(hlcd::row_subcode(g825, {9}), hlcd::InvalidArgument);
}

TEST(Simplex, Family) {
  for (std::size_t k = 2; k <= 5; ++k) {
    auto s = hlcd::simplex(k);
    const std::size_t n = ((std::size_t{1} << (2 * k)) - 1) / 3;
    EXPECT_EQ(s.length(), n);
    EXPECT_EQ(s.dimension(), k);
    EXPECT_TRUE(hlcd::is_self_orthogonal(s));
    auto w = hlcd::enumerate_weights(s);
    const std::size_t d = std::size_t{1} << (2 * (k - 1));
    EXPECT_EQ(w[d], (std::uint64_t{1} << (2 * k)) - 1);
    EXPECT_EQ(*w.min_weight(), d);
  }
  EXPECT_EQ(hlcd::simplex(2).generator(), hlcd::row_basis(hlcd::simplex_seed()));
  EXPECT_THROW(hlcd::simplex(1), hlcd::InvalidArgument);
  EXPECT_THROW(hlcd::simplex(6), hlcd::InvalidArgument);
  EXPECT_NO_THROW(hlcd::simplex(6, 1365));
}

// Each simplex column is one projective point: no two columns are proportional.
TEST(Simplex, ColumnsAreDistinctProjectivePoints) {
  auto m = hlcd::simplex_matrix(3);
  for (std::size_t a = 0; a < m.cols(); ++a)
    for (std::size_t b = a + 1; b < m.cols(); ++b) {
      auto pair = m.select_columns(std::vector<std::size_t>{a, b});
      EXPECT_EQ(hlcd::rank(pair), 2u) << a << "," << b;
    }
}

TEST(PermuteAndConjugate, Examples) {
  auto g720 = oracle::load_code("g_7_20");
  std::vector<std::size_t> id(20);
  std::iota(id.begin(), id.end(), 1);
  EXPECT_EQ(hlcd::permute_and_conjugate(g720, id, false), g720);
  auto fro = hlcd::permute_and_conjugate(g720, id, true);
  EXPECT_EQ(hlcd::enumerate_weights(fro), hlcd::enumerate_weights(g720));
  std::mt19937_64 rng(5);
  std::shuffle(id.begin(), id.end(), rng);
  auto perm = hlcd::permute_and_conjugate(g720, id, true);
  EXPECT_TRUE(hlcd::is_lcd(perm));
  EXPECT_EQ(hlcd::enumerate_weights(perm).coeffs, hlcd::enumerate_weights(g720).coeffs);
  EXPECT_THROW(hlcd::permute_and_conjugate(g720, {1, 1}, false), hlcd::InvalidArgument);
}

TEST(Properties, RandomCodes) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    auto c = oracle::random_code(rng, 20);
    const std::size_t g = hlcd::gram_rank(c);
    EXPECT_EQ(hlcd::is_lcd(c), hlcd::hull_dimension(c) == 0);
    EXPECT_EQ(hlcd::is_lcd(c), g == c.dimension());
    EXPECT_EQ(hlcd::hull_dimension(c), c.dimension() - g);
    EXPECT_EQ(hlcd::hull_dimension(c), direct_hull(c));
    if (c.dimension() == c.length()) continue;
    auto d = hlcd::hermitian_dual(c);
    EXPECT_EQ(c.dimension() + d.dimension(), c.length());
    EXPECT_TRUE((c.generator() * d.generator().conj_transpose()).is_zero());
    EXPECT_EQ(hlcd::hermitian_dual(d), c);
  }
}

}  // namespace
