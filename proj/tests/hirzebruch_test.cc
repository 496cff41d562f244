// Copyright 2026 The Torelli Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torelli/hirzebruch.h"

#include <random>

#include "gtest/gtest.h"
#include "torelli/errors.h"

namespace torelli::hirzebruch {
namespace {

// Gram matrix oracle: [[E.E, E.F], [F.E, F.F]] = [[-n, 1], [1, 0]].
std::int64_t GramPairing(const DivisorClass& u, const DivisorClass& v) {
  const std::int64_t gram[2][2] = {{-u.n, 1}, {1, 0}};
  const std::int64_t x[2] = {u.a, u.b};
  const std::int64_t y[2] = {v.a, v.b};
  std::int64_t s = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) s += x[i] * gram[i][j] * y[j];
  }
  return s;
}

TEST(Intersect, Examples) {
  EXPECT_EQ(intersect(directrix(3), directrix(3)), -3);
  EXPECT_EQ(intersect(fiber(3), fiber(3)), 0);
  EXPECT_EQ(intersect(directrix(5), fiber(5)), 1);
  const DivisorClass c = hyperelliptic_class(2);
  EXPECT_EQ(intersect(c, c), 12);
  try {
    intersect(directrix(2), directrix(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSurfaceMismatch);
  }
}

TEST(Intersect, MatchesGramMatrix) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> n_dist(1, 20);
  std::uniform_int_distribution<std::int64_t> c_dist(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    const int n = n_dist(rng);
    const DivisorClass u{n, c_dist(rng), c_dist(rng)};
    const DivisorClass v{n, c_dist(rng), c_dist(rng)};
    const DivisorClass w{n, c_dist(rng), c_dist(rng)};
    EXPECT_EQ(intersect(u, v), GramPairing(u, v));
    EXPECT_EQ(intersect(u, v), intersect(v, u));
    EXPECT_EQ(intersect(u + w, v), intersect(u, v) + intersect(w, v));
  }
}

TEST(CanonicalClass, Examples) {
  EXPECT_EQ(canonical_class(3), (DivisorClass{3, -2, -5}));
  EXPECT_EQ(canonical_class(1), (DivisorClass{1, -2, -3}));
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(intersect(canonical_class(n), fiber(n)), -2);
}

TEST(AdjunctionGenus, Examples) {
  EXPECT_EQ(adjunction_genus(hyperelliptic_class(5)), 5);
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(adjunction_genus(directrix(n)), 0);
    EXPECT_EQ(adjunction_genus(fiber(n)), 0);
  }
  // C.C + K.C is even for every class on F_n.
  for (int n = 1; n <= 6; ++n) {
    for (int a = -4; a <= 4; ++a) {
      for (int b = -4; b <= 4; ++b) {
        const DivisorClass c{n, a, b};
        const std::int64_t twice = intersect(canonical_class(n) + c, c);
        ASSERT_EQ(twice % 2, 0);
        EXPECT_EQ(adjunction_genus(c), (twice + 2) / 2);
      }
    }
  }
}

TEST(HyperellipticClass, Examples) {
  EXPECT_EQ(hyperelliptic_class(2), (DivisorClass{3, 2, 6}));
  EXPECT_EQ(hyperelliptic_class(3), (DivisorClass{4, 2, 8}));
  EXPECT_EQ(adjunction_genus(hyperelliptic_class(3)), 3);
  for (int g = 2; g <= 50; ++g) {
    const DivisorClass c = hyperelliptic_class(g);
    EXPECT_EQ(intersect(c, directrix(g + 1)), 0);
    EXPECT_EQ(intersect(c, fiber(g + 1)), 2);
  }
}

TEST(LinearSystemDim, Examples) {
  EXPECT_EQ(linear_system_dim(2).h0, 12);
  EXPECT_EQ(linear_system_dim(2).proj_dim, 11);
  EXPECT_EQ(linear_system_dim(0).h0, 6);
  EXPECT_EQ(linear_system_dim(0).proj_dim, 5);
  EXPECT_EQ(linear_system_dim(7).h0, 27);
  EXPECT_EQ(linear_system_dim(7).proj_dim, 26);
}

TEST(HgDimension, ConsistencyTriangle) {
  EXPECT_EQ(hg_dimension(2), 3);
  EXPECT_EQ(hg_dimension(3), 5);
  for (int g = 2; g <= 50; ++g) {
    const DivisorClass c = hyperelliptic_class(g);
    EXPECT_EQ(intersect(c, c), 4 * g + 4);
    EXPECT_EQ(adjunction_genus(c), g);
    EXPECT_EQ(linear_system_dim(g).h0 - 1 - aut_dim(g + 1), hg_dimension(g));
    EXPECT_EQ(hg_dimension(g), 2 * g - 1);
    EXPECT_EQ(hg_dimension(g), (3 * g - 3) - (g - 2));
  }
}

}  // namespace
}  // namespace torelli::hirzebruch
