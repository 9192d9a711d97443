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

#include "cylpath/simplicial_map.hpp"

#include <gtest/gtest.h>

#include "cylpath/enumerate.hpp"
#include "cylpath/errors.hpp"

namespace cylpath {
namespace {

TEST(SimplicialMap, IdentityIsNeutral) {
  const auto d1 = standard_simplex(1);
  const auto d2 = standard_simplex(2);
  for (const auto& f : enumerate_maps(d1, d2)) {
    EXPECT_TRUE(same_map(compose(f, identity_map(d1)), f));
    EXPECT_TRUE(same_map(compose(identity_map(d2), f), f));
  }
}

TEST(SimplicialMap, CompositionIsAssociative) {
  const auto a = standard_simplex(1), b = boundary_simplex(2), c = standard_simplex(2);
  const auto fs = enumerate_maps(a, b);
  const auto gs = enumerate_maps(b, c);
  const auto hs = enumerate_maps(c, a);
  for (const auto& f : fs) {
    for (std::size_t j = 0; j < gs.size(); j += 7) {
      for (const auto& h : hs) {
        EXPECT_TRUE(same_map(compose(h, compose(gs[j], f)), compose(compose(h, gs[j]), f)));
      }
    }
  }
}

TEST(SimplicialMap, ComposeRejectsMismatchedObjects) {
  const auto d1 = standard_simplex(1);
  const auto copy = relabel(d1, "other", "o").copy;
  EXPECT_THROW(compose(identity_map(d1), identity_map(copy)), DomainMismatch);
}

TEST(SimplicialMap, ValidateReportsFaceIncompatibility) {
  const auto d1 = standard_simplex(1);
  auto f = identity_map(d1);
  f.assign[0] = d1->nondegenerate(1);  // vertex 0 -> 1, edge still 01
  const auto r = validate_map(f);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure()->anchor, "map.face-compatibility");
  EXPECT_NE(r.first_failure()->witness.find("d_1 of 01"), std::string::npos)
      << r.first_failure()->witness;
}

TEST(SimplicialMap, MapsEqualGivesTheFirstDifference) {
  const auto d1 = standard_simplex(1);
  const auto maps = enumerate_maps(d1, d1);
  const auto w = maps_equal(maps[0], maps[1]);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->rfind("at 1 (dim 0)", 0), 0u) << *w;
  EXPECT_FALSE(maps_equal(maps[1], maps[1]).has_value());
}

TEST(SimplicialMap, IsoDetection) {
  const auto d1 = standard_simplex(1);
  for (const auto& f : enumerate_maps(d1, d1)) {
    EXPECT_EQ(is_iso(f), f.at(2).is_nondegenerate());
  }
  const auto r = relabel(boundary_simplex(2), "b2'", "r");
  EXPECT_TRUE(validate_sset(*r.copy).ok());
  EXPECT_TRUE(same_map(compose(r.from, r.to), identity_map(r.to.dom)));
  const auto inv = inverse_of(r.to);
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE(same_map(*inv, r.from));
  // Automorphisms of the boundary of Delta[2] preserve the vertex order, so
  // the only one is the identity.
  int autos = 0;
  for (const auto& f : enumerate_maps(r.copy, r.copy)) autos += is_iso(f);
  EXPECT_EQ(autos, 1);
}

TEST(SimplicialMap, ConstantMapsAreMaps) {
  const auto d2 = standard_simplex(2);
  const auto c = constant_map(d2, standard_simplex(1), 1);
  EXPECT_TRUE(validate_map(c).ok());
  EXPECT_THROW(constant_map(d2, d2, d2->first(1)), std::invalid_argument);
}

TEST(SimplicialMap, ApplyingAboveTheBoundThrows) {
  const auto d1 = standard_simplex(1);
  auto f = identity_map(d1);
  f.bound = 0;
  f.assign.resize(2);
  EXPECT_EQ(f(SimplexRef{0, MonotoneMap::collapse(3)}).dim(), 3);
  EXPECT_THROW(f(d1->nondegenerate(2)), TruncationError);
}

}  // namespace
}  // namespace cylpath
