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

#include "cylpath/simplicial_set.hpp"

#include <gtest/gtest.h>

#include <set>

#include "cylpath/errors.hpp"
#include "oracles.hpp"

namespace cylpath {
namespace {

std::vector<SSetPtr> zoo() {
  return {standard_simplex(0), standard_simplex(1), standard_simplex(2),
          standard_simplex(3), boundary_simplex(1), boundary_simplex(2),
          horn(2, 1),          horn(3, 0)};
}

TEST(StandardSimplex, NondegenerateCounts) {
  const auto d2 = standard_simplex(2);
  EXPECT_EQ(d2->count(0), 3u);
  EXPECT_EQ(d2->count(1), 3u);
  EXPECT_EQ(d2->count(2), 1u);
  EXPECT_EQ(d2->count(3), 0u);
  EXPECT_EQ(d2->label(d2->first(1)), "01");
  EXPECT_EQ(standard_simplex(2), d2);
}

TEST(StandardSimplex, TerminalObjectHasOneSimplexPerLevel) {
  const auto pt = standard_simplex(0);
  for (int m = 0; m <= 5; ++m) EXPECT_EQ(pt->level_size(m), 1u);
}

TEST(StandardSimplex, LevelSizesAreMonotoneMapCounts) {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 4; ++m) {
      EXPECT_EQ(standard_simplex(n)->level_size(m), oracle::monotone_sequences(m, n).size());
    }
  }
  const auto d1 = standard_simplex(1);
  EXPECT_EQ(d1->level_size(0), 2u);
  EXPECT_EQ(d1->level_size(1), 3u);
  EXPECT_EQ(d1->level_size(2), 4u);
}

TEST(StandardSimplex, RefsRoundTripThroughOperators) {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& theta : monotone_maps(m, n)) {
        const SimplexRef s = standard_simplex_ref(theta);
        EXPECT_EQ(standard_simplex_operator(n, s), theta);
      }
    }
  }
}

TEST(EilenbergZilber, DenseIndexIsABijection) {
  for (const auto& x : zoo()) {
    for (int n = 0; n <= 4; ++n) {
      const auto level = x->level(n);
      ASSERT_EQ(level.size(), x->level_size(n));
      std::set<SimplexRef> seen(level.begin(), level.end());
      EXPECT_EQ(seen.size(), level.size());
      for (std::uint64_t k = 0; k < level.size(); ++k) {
        EXPECT_EQ(x->index_of(level[k]), k);
        EXPECT_EQ(x->simplex_at(n, k), level[k]);
      }
      std::uint64_t expected = 0;
      for (int d = 0; d <= n; ++d) expected += x->count(d) * binomial(n, d);
      EXPECT_EQ(level.size(), expected);
    }
  }
}

TEST(EilenbergZilber, EveryActionResultIsCanonical) {
  // Every n-simplex s . theta has exactly one canonical form, so the images
  // of all (s, theta) land in level(n') and cover it.
  for (const auto& x : zoo()) {
    for (int n = 0; n <= 3; ++n) {
      std::set<SimplexRef> hit;
      for (const auto& s : x->level(n)) {
        for (const auto& theta : monotone_maps(n, n)) {
          const auto r = act(*x, s, theta);
          EXPECT_TRUE(r.deg.is_surjective());
          EXPECT_EQ(r.deg.target_dim(), x->dim(r.base));
          hit.insert(r);
        }
      }
      EXPECT_EQ(hit.size(), x->level_size(n));
    }
  }
}

TEST(Act, IdentityAndFaceOfEdge) {
  const auto d1 = standard_simplex(1);
  const SimplexRef top = d1->nondegenerate(2);
  EXPECT_EQ(act(*d1, top, MonotoneMap::identity(1)), top);
  EXPECT_EQ(face(*d1, top, 0), d1->nondegenerate(1));
  EXPECT_EQ(d1->label(face(*d1, top, 0).base), "1");
}

TEST(Act, IsFunctorialUpToDimensionThree) {
  for (const auto& x : zoo()) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& s : x->level(n)) {
        for (int n1 = 0; n1 <= 3; ++n1) {
          for (const auto& theta : monotone_maps(n1, n)) {
            const auto once = act(*x, s, theta);
            for (int n2 = 0; n2 <= 2; ++n2) {
              for (const auto& theta2 : monotone_maps(n2, n1)) {
                EXPECT_EQ(act(*x, once, theta2), act(*x, s, compose(theta, theta2)));
              }
            }
          }
        }
      }
    }
  }
}

TEST(Act, AgreesWithStepwiseSingleOperators) {
  // theta = delta_i . sigma_j and sigma_j . delta_i as two separate steps.
  const auto d2 = standard_simplex(2);
  for (int n = 1; n <= 2; ++n) {
    for (const auto& s : d2->level(n)) {
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j < n; ++j) {
          const auto fi = MonotoneMap::coface(n, i);
          const auto sj = MonotoneMap::codegeneracy(n - 1, j);
          EXPECT_EQ(act(*d2, act(*d2, s, fi), sj), act(*d2, s, compose(fi, sj)));
          EXPECT_EQ(face(*d2, degeneracy(*d2, s, j), i),
                    act(*d2, s, compose(MonotoneMap::codegeneracy(n, j),
                                        MonotoneMap::coface(n + 1, i))));
        }
      }
    }
  }
}

TEST(ValidateSset, AcceptsFixturesAndEmpty) {
  for (const auto& x : zoo()) EXPECT_TRUE(validate_sset(*x).ok()) << x->name();
  const auto empty = SimplicialSetBuilder("empty").build();
  EXPECT_TRUE(validate_sset(*empty).ok());
  EXPECT_EQ(empty->top_dim(), -1);
  EXPECT_EQ(empty->level_size(3), 0u);
}

TEST(ValidateSset, SwappedFaceIsReportedWithSimplexAndIndices) {
  const auto d2 = standard_simplex(2);
  const auto bad = with_swapped_faces(d2, d2->first(2), 0, 1);
  const auto report = validate_sset(*bad);
  ASSERT_FALSE(report.ok());
  const auto* f = report.first_failure();
  EXPECT_EQ(f->anchor, "sset.face-identities");
  EXPECT_NE(f->witness.find("simplex 012"), std::string::npos) << f->witness;
  EXPECT_NE(f->witness.find("(i,j)=(0,2)"), std::string::npos) << f->witness;
}

TEST(Builder, RejectsStructuralErrors) {
  {
    SimplicialSetBuilder b("missing");
    b.add_simplex(0, "a");
    b.add_simplex(1, "e");
    b.set_face(1, 0, {0, MonotoneMap::identity(0)});
    EXPECT_THROW(b.build(), std::invalid_argument);
  }
  {
    SimplicialSetBuilder b("dup");
    b.add_simplex(0, "a");
    b.add_simplex(0, "a");
    EXPECT_THROW(b.build(), std::invalid_argument);
  }
  {
    SimplicialSetBuilder b("deg");
    b.add_simplex(0, "a");
    b.add_simplex(1, "e");
    b.add_simplex(2, "t");
    b.set_faces(1, {{0, MonotoneMap::identity(0)}, {0, MonotoneMap::identity(0)}});
    // A face of a 2-simplex must be 1-dimensional.
    const SimplexRef v{0, MonotoneMap::identity(0)};
    b.set_faces(2, {v, v, v});
    EXPECT_THROW(b.build(), std::invalid_argument);
  }
  {
    SimplicialSetBuilder b("above", 0);
    EXPECT_THROW(b.add_simplex(1, "e"), std::invalid_argument);
  }
}

TEST(Builder, SortsByDimensionStably) {
  SimplicialSetBuilder b("loop");
  const auto e = b.add_simplex(1, "e");
  const auto v = b.add_simplex(0, "v");
  b.set_faces(e, {{v, MonotoneMap::identity(0)}, {v, MonotoneMap::identity(0)}});
  const auto x = b.build();
  EXPECT_EQ(b.final_id(v), 0u);
  EXPECT_EQ(b.final_id(e), 1u);
  EXPECT_EQ(x->label(0), "v");
  EXPECT_TRUE(validate_sset(*x).ok());
  // The loop has one simplex per degeneracy of the edge plus the vertex.
  EXPECT_EQ(x->level_size(2), 1u + 2u);
}

TEST(Fixtures, BoundaryAndHornCounts) {
  const auto b2 = boundary_simplex(2);
  EXPECT_EQ(b2->count(0), 3u);
  EXPECT_EQ(b2->count(1), 3u);
  EXPECT_EQ(b2->count(2), 0u);
  const auto h = horn(2, 1);
  EXPECT_EQ(h->count(1), 2u);
  EXPECT_FALSE(h->find("02").has_value());
  EXPECT_TRUE(h->find("01").has_value());
  const auto b1 = boundary_simplex(1);
  EXPECT_EQ(b1->size(), 2u);
}

TEST(Fixtures, DisjointUnionAndTruncate) {
  const auto u = disjoint_union(standard_simplex(1), standard_simplex(0), "u");
  EXPECT_EQ(u->count(0), 3u);
  EXPECT_EQ(u->count(1), 1u);
  EXPECT_TRUE(validate_sset(*u).ok());
  const auto t = truncate(standard_simplex(2), 1);
  EXPECT_EQ(t->trunc_dim(), 1);
  EXPECT_EQ(t->size(), 6u);
  EXPECT_THROW(t->level(2), TruncationError);
  try {
    t->level_size(3);
    FAIL();
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.required(), 3);
    EXPECT_EQ(e.available(), 1);
  }
}

}  // namespace
}  // namespace cylpath
