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

#include "cylpath/monotone.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

namespace cylpath {
namespace {

TEST(MonotoneMap, RejectsNonMonotoneValues) {
  EXPECT_THROW(MonotoneMap(2, {0, 2, 1}), std::invalid_argument);
  EXPECT_THROW(MonotoneMap(1, {0, 2}), std::invalid_argument);
  EXPECT_THROW(MonotoneMap(kMaxDim + 1, {0}), std::invalid_argument);
}

TEST(MonotoneMap, CofacesAndCodegeneracies) {
  EXPECT_EQ(MonotoneMap::coface(2, 1).values(), (std::vector<int>{0, 2}));
  EXPECT_EQ(MonotoneMap::codegeneracy(1, 0).values(), (std::vector<int>{0, 0, 1}));
  EXPECT_TRUE(MonotoneMap::coface(3, 0).is_injective());
  EXPECT_TRUE(MonotoneMap::codegeneracy(3, 2).is_surjective());
  EXPECT_EQ(MonotoneMap::collapse(3).values(), (std::vector<int>{0, 0, 0, 0}));
}

TEST(MonotoneMap, CosimplicialIdentities) {
  for (int n = 2; n <= 5; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int i = 0; i < j; ++i) {
        // delta_j delta_i = delta_i delta_{j-1} on [n-2] -> [n]
        EXPECT_EQ(compose(MonotoneMap::coface(n, j), MonotoneMap::coface(n - 1, i)),
                  compose(MonotoneMap::coface(n, i), MonotoneMap::coface(n - 1, j - 1)));
      }
    }
    for (int j = 0; j < n; ++j) {
      // sigma_j delta_j = sigma_j delta_{j+1} = id
      EXPECT_TRUE(compose(MonotoneMap::codegeneracy(n - 1, j), MonotoneMap::coface(n, j))
                      .is_identity());
      EXPECT_TRUE(
          compose(MonotoneMap::codegeneracy(n - 1, j), MonotoneMap::coface(n, j + 1))
              .is_identity());
    }
  }
}

TEST(MonotoneMap, CompositionIsAssociativeOnRandomTriples) {
  std::mt19937 rng(7);
  auto random_map = [&](int n, int m) {
    const auto all = monotone_maps(n, m);
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  };
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> dim(0, 5);
    const int a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng);
    const auto f = random_map(a, b);
    const auto g = random_map(b, c);
    const auto h = random_map(c, d);
    EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
    EXPECT_EQ(compose(f, MonotoneMap::identity(a)), f);
    EXPECT_EQ(compose(MonotoneMap::identity(b), f), f);
  }
}

TEST(MonotoneMap, EnumerationMatchesBruteForce) {
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const auto maps = monotone_maps(n, m);
      const auto seqs = oracle::monotone_sequences(n, m);
      ASSERT_EQ(maps.size(), seqs.size()) << n << " " << m;
      std::set<std::vector<int>> a, b(seqs.begin(), seqs.end());
      for (const auto& f : maps) a.insert(f.values());
      EXPECT_EQ(a, b);
      EXPECT_TRUE(std::is_sorted(maps.begin(), maps.end(), [](auto& x, auto& y) {
        return x.values() < y.values();
      }));
      EXPECT_EQ(maps.size(), binomial(n + m + 1, n + 1));
    }
  }
}

TEST(MonotoneMap, ConstantMapFactorsThroughAVertex) {
  const auto f = factor_monotone(MonotoneMap(1, {0, 0}));
  EXPECT_EQ(f.surjection, MonotoneMap::collapse(1));
  EXPECT_EQ(f.injection, MonotoneMap::vertex(1, 0));
  const auto id = factor_monotone(MonotoneMap::identity(2));
  EXPECT_TRUE(id.surjection.is_identity());
  EXPECT_TRUE(id.injection.is_identity());
}

TEST(MonotoneMap, FactorizationIsTheUniqueEpiMonoPair) {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& f : monotone_maps(n, m)) {
        const auto fac = factor_monotone(f);
        EXPECT_TRUE(fac.surjection.is_surjective());
        EXPECT_TRUE(fac.injection.is_injective());
        EXPECT_EQ(compose(fac.injection, fac.surjection), f);
        // Search all (surjection, injection) pairs through every [k].
        int found = 0;
        for (int k = 0; k <= std::min(n, m); ++k) {
          for (const auto& s : monotone_maps(n, k)) {
            if (!s.is_surjective()) continue;
            for (const auto& i : monotone_maps(k, m)) {
              if (i.is_injective() && compose(i, s) == f) ++found;
            }
          }
        }
        EXPECT_EQ(found, 1) << to_string(f);
      }
    }
  }
}

TEST(MonotoneMap, SurjectionRankIsThePositionInLexicographicOrder) {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      std::vector<MonotoneMap> lex;
      for (const auto& f : monotone_maps(n, m)) {
        if (f.is_surjective()) lex.push_back(f);
      }
      ASSERT_EQ(lex.size(), binomial(n, m));
      for (std::uint64_t r = 0; r < lex.size(); ++r) {
        EXPECT_EQ(surjection_rank(lex[r]), r);
        EXPECT_EQ(surjection_unrank(n, m, r), lex[r]);
      }
      EXPECT_EQ(surjections(n, m), lex);
    }
  }
}

}  // namespace
}  // namespace cylpath
