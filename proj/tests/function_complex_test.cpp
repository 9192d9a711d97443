// Copyright 2026 The cylpath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cylpath/function_complex.hpp"

#include <gtest/gtest.h>

#include "cylpath/enumerate.hpp"
#include "cylpath/errors.hpp"
#include "oracles.hpp"

namespace cylpath {
namespace {

std::shared_ptr<ProductCache> fresh_cache() { return std::make_shared<ProductCache>(); }

TEST(FunctionComplex, EdgeToEdgeLevelSizesMatchUpsetOracle) {
  const auto d1 = standard_simplex(1);
  const auto fc = FunctionComplex::materialize(d1, d1, 2, fresh_cache());
  const std::uint64_t expected[] = {3, 6, 10};
  for (int n = 0; n <= 2; ++n) {
    const auto grid = oracle::poset_product(oracle::chain(1), oracle::chain(n));
    ASSERT_EQ(oracle::count_upsets(grid), expected[n]);
    EXPECT_EQ(fc->carrier()->level_size(n), expected[n]) << "level " << n;
    EXPECT_EQ(fc->maps(n).size(), expected[n]);
  }
}

TEST(FunctionComplex, LevelsAreInBijectionWithEnumeratedMaps) {
  // The dense oracle is exponential; keep X x Delta[n] small.
  const auto cache = fresh_cache();
  const auto y = standard_simplex(1);
  const std::pair<SSetPtr, int> cases[] = {{boundary_simplex(1), 2}, {standard_simplex(1), 1}};
  for (const auto& [x, level] : cases) {
    const auto fc = FunctionComplex::materialize(x, y, level, cache);
    for (int n = 0; n <= level; ++n) {
      EXPECT_EQ(fc->carrier()->level_size(n),
                oracle::count_maps_dense(*cache->cylinder(x, n), *y));
      for (const auto& s : fc->carrier()->level(n)) {
        EXPECT_EQ(fc->element(fc->underlying(s)), s);
      }
    }
  }
}

TEST(FunctionComplex, PointSourceIsLevelwiseTheTarget) {
  const auto y = standard_simplex(1);
  const auto fc = FunctionComplex::materialize(standard_simplex(0), y, 2, fresh_cache());
  for (int n = 0; n <= 2; ++n) {
    EXPECT_EQ(fc->carrier()->level_size(n), y->level_size(n));
  }
  EXPECT_EQ(fc->carrier()->count(0), 2u);
  EXPECT_EQ(fc->carrier()->count(1), 1u);
  EXPECT_EQ(fc->carrier()->count(2), 0u);
}

TEST(FunctionComplex, PointTargetHasOneSimplexPerLevel) {
  const auto fc =
      FunctionComplex::materialize(standard_simplex(1), standard_simplex(0), 2, fresh_cache());
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(fc->carrier()->level_size(n), 1u);
}

TEST(FunctionComplex, CarrierIsValid) {
  const auto cache = fresh_cache();
  for (const auto& x : {standard_simplex(0), standard_simplex(1), boundary_simplex(2)}) {
    for (const auto& y : {standard_simplex(1), boundary_simplex(2), horn(2, 1)}) {
      const auto fc = FunctionComplex::materialize(x, y, 2, cache);
      EXPECT_TRUE(validate_sset(*fc->carrier()).ok()) << fc->carrier()->name();
    }
  }
}

TEST(FunctionComplex, OperatorActionIsPrecomposition) {
  const auto cache = fresh_cache();
  const auto d1 = standard_simplex(1);
  const auto fc = FunctionComplex::materialize(d1, boundary_simplex(2), 2, cache);
  const auto& c = *fc->carrier();
  for (int n = 0; n <= 2; ++n) {
    for (const auto& s : c.level(n)) {
      for (int m = 0; m <= 2; ++m) {
        for (const auto& theta : monotone_maps(m, n)) {
          const auto expected = compose(fc->underlying(s), cache->restriction(d1, theta));
          EXPECT_TRUE(same_map(fc->underlying(act(c, s, theta)), expected));
        }
      }
    }
  }
}

TEST(FunctionComplex, ApplyAndEvaluateAgreeWithUnderlyingMap) {
  const auto cache = fresh_cache();
  const auto d1 = standard_simplex(1);
  const auto fc = FunctionComplex::materialize(d1, d1, 2, cache);
  for (int n = 0; n <= 2; ++n) {
    const auto p = cache->cylinder(d1, n);
    for (const auto& s : fc->carrier()->level(n)) {
      const auto f = fc->underlying(s);
      for (int m = 0; m <= 3; ++m) {
        for (const auto& q : p->level(m)) EXPECT_EQ(fc->apply(s, q), f(q));
      }
      for (const auto& x : d1->level(n)) {
        EXPECT_EQ(fc->evaluate(s, x), f(pair(*p, x, standard_simplex_ref(MonotoneMap::identity(n)))));
      }
    }
  }
}

TEST(FunctionComplex, DegenerateSimplicesAboveTheLevelAreFound) {
  const auto cache = fresh_cache();
  const auto d1 = standard_simplex(1);
  const auto fc = FunctionComplex::materialize(d1, d1, 1, cache);
  for (const auto& s : fc->carrier()->level(1)) {
    const auto up = degeneracy(*fc->carrier(), s, 0);
    EXPECT_EQ(fc->element(fc->underlying(up)), up);
  }
  // Some 2-simplex of F(D1,D1) is nondegenerate, hence unknown at level 1.
  std::size_t unknown = 0;
  for (const auto& f : enumerate_maps(cache->cylinder(d1, 2), d1)) {
    if (!fc->find(f)) ++unknown;
  }
  EXPECT_EQ(unknown, 1u);
}

TEST(FunctionComplex, ExactComplexOfEdgeIntoEdgeIsTheTwoSimplex) {
  const auto d1 = standard_simplex(1);
  const auto fc = FunctionComplex::materialize_exact(d1, d1, fresh_cache());
  const auto& c = *fc->carrier();
  EXPECT_TRUE(c.is_exact());
  EXPECT_EQ(c.count(0), 3u);
  EXPECT_EQ(c.count(1), 3u);
  EXPECT_EQ(c.count(2), 1u);
  EXPECT_EQ(c.top_dim(), 2);
  EXPECT_TRUE(is_poset_nerve(c));
  EXPECT_TRUE(validate_sset(c).ok());
}

TEST(FunctionComplex, ExactNeedsAPosetNerve) {
  EXPECT_THROW(
      FunctionComplex::materialize_exact(standard_simplex(1), boundary_simplex(2), fresh_cache()),
      std::invalid_argument);
}

TEST(FunctionComplex, TruncatedTargetReportsTheRequiredDimension) {
  const auto y = truncate(standard_simplex(1), 2);
  try {
    FunctionComplex::materialize(standard_simplex(1), y, 2, fresh_cache());
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.required(), 3);
    EXPECT_EQ(e.available(), 2);
  }
}

TEST(FunctionComplex, TruncatedSourceIsRejected) {
  EXPECT_THROW(FunctionComplex::materialize(truncate(standard_simplex(1), 1),
                                            standard_simplex(1), 0, fresh_cache()),
               std::invalid_argument);
}

TEST(PosetNerve, RecognizesNerves) {
  EXPECT_TRUE(is_poset_nerve(*standard_simplex(0)));
  EXPECT_TRUE(is_poset_nerve(*standard_simplex(3)));
  EXPECT_TRUE(is_poset_nerve(*product(standard_simplex(1), standard_simplex(1))));
  EXPECT_TRUE(is_poset_nerve(*boundary_simplex(1)));
  EXPECT_FALSE(is_poset_nerve(*boundary_simplex(2)));
  EXPECT_FALSE(is_poset_nerve(*horn(2, 1)));
  EXPECT_FALSE(is_poset_nerve(*truncate(standard_simplex(1), 1)));
}

}  // namespace
}  // namespace cylpath
