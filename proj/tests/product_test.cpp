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

#include "cylpath/product.hpp"

#include <gtest/gtest.h>

#include "cylpath/enumerate.hpp"
#include "cylpath/errors.hpp"
#include "oracles.hpp"

namespace cylpath {
namespace {

TEST(Product, SquareHasFourFiveTwoNondegenerateSimplices) {
  const auto d1 = standard_simplex(1);
  const auto sq = product(d1, d1);
  EXPECT_EQ(sq->name(), "delta1*delta1");
  EXPECT_EQ(sq->count(0), 4u);
  EXPECT_EQ(sq->count(1), 5u);
  EXPECT_EQ(sq->count(2), 2u);
  EXPECT_EQ(sq->count(3), 0u);
  EXPECT_EQ(sq->level_size(1), 9u);
  EXPECT_TRUE(validate_sset(*sq).ok());
}

TEST(Product, LevelsArePairsOfSimplices) {
  const std::vector<SSetPtr> objs{standard_simplex(0), standard_simplex(1),
                                  standard_simplex(2), boundary_simplex(2), horn(2, 0)};
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      const auto p = product(x, y);
      EXPECT_TRUE(validate_sset(*p).ok()) << p->name();
      for (int n = 0; n <= 3; ++n) {
        EXPECT_EQ(p->level_size(n), x->level_size(n) * y->level_size(n));
        for (const auto& a : x->level(n)) {
          for (const auto& b : y->level(n)) {
            const auto s = pair(*p, a, b);
            EXPECT_EQ(left_of(*p, s), a);
            EXPECT_EQ(right_of(*p, s), b);
          }
        }
      }
    }
  }
}

TEST(Product, UnitLaw) {
  const auto x = boundary_simplex(2);
  const auto xp = product(x, standard_simplex(0));
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(xp->level_size(n), x->level_size(n));
  const auto iso = canonical_iso(IsoKind::unit_r, xp, x);
  EXPECT_TRUE(is_iso(iso.forward));
  EXPECT_TRUE(same_map(compose(iso.forward, iso.inverse), identity_map(x)));
  EXPECT_TRUE(same_map(compose(iso.inverse, iso.forward), identity_map(xp)));
}

TEST(Product, DiagonalOfTheEdgeIsTheNondegenerateDiagonal) {
  const auto d1 = standard_simplex(1);
  const auto sq = product(d1, d1);
  const auto diag = diagonal(d1, sq);
  const auto e = diag.at(2);
  EXPECT_TRUE(e.is_nondegenerate());
  EXPECT_EQ(sq->label(e.base), "(01,01)");
  EXPECT_EQ(sq->label(diag.at(0).base), "(0,0)");
}

TEST(Product, ProjectionsSplitTheDiagonal) {
  for (const auto& x : {standard_simplex(2), boundary_simplex(2)}) {
    const auto xx = product(x, x);
    const auto diag = diagonal(x, xx);
    EXPECT_TRUE(same_map(compose(pr1(xx), diag), identity_map(x)));
    EXPECT_TRUE(same_map(compose(pr2(xx), diag), identity_map(x)));
    EXPECT_TRUE(validate_map(diag).ok());
  }
}

TEST(Product, SwapIsAnInvolution) {
  const auto d1 = standard_simplex(1);
  const auto d2 = standard_simplex(2);
  const auto a = product(d1, d2);
  const auto b = product(d2, d1);
  const auto s = canonical_iso(IsoKind::swap, a, b);
  EXPECT_TRUE(same_map(compose(s.inverse, s.forward), identity_map(a)));
  const auto sq = product(d1, d1);
  const auto t = canonical_iso(IsoKind::swap, sq, sq);
  EXPECT_TRUE(same_map(compose(t.forward, t.forward), identity_map(sq)));
  const auto inv = inverse_of(t.forward);
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE(same_map(*inv, t.forward));
}

TEST(Product, AssociatorPentagonCommutes) {
  const auto a = standard_simplex(1), b = standard_simplex(1);
  const auto c = standard_simplex(0), d = standard_simplex(1);
  const auto ab = product(a, b), cd = product(c, d), bc = product(b, c);
  const auto ab_c = product(ab, c), bc_d = product(bc, d);
  const auto a_bc = product(a, bc);
  const auto c_d = cd;
  const auto ab_c__d = product(ab_c, d);       // ((AB)C)D
  const auto ab__cd = product(ab, c_d);        // (AB)(CD)
  const auto b_cd = product(b, c_d);
  const auto a__b_cd = product(a, b_cd);       // A(B(CD))
  const auto a_bc__d = product(a_bc, d);       // (A(BC))D
  const auto a__bc_d = product(a, bc_d);       // A((BC)D)

  const auto top1 = canonical_iso(IsoKind::assoc, ab_c__d, ab__cd).forward;
  const auto top2 = canonical_iso(IsoKind::assoc, ab__cd, a__b_cd).forward;
  const auto assoc_abc = canonical_iso(IsoKind::assoc, ab_c, a_bc).forward;
  const auto low1 = product_map(assoc_abc, identity_map(d), ab_c__d, a_bc__d);
  const auto low2 = canonical_iso(IsoKind::assoc, a_bc__d, a__bc_d).forward;
  const auto assoc_bcd = canonical_iso(IsoKind::assoc, bc_d, b_cd).forward;
  const auto low3 = product_map(identity_map(a), assoc_bcd, a__bc_d, a__b_cd);
  EXPECT_FALSE(maps_equal(compose(top2, top1), compose(low3, compose(low2, low1))));
}

TEST(Product, UniversalPropertyByCounting) {
  const std::vector<SSetPtr> objs{standard_simplex(0), standard_simplex(1),
                                  boundary_simplex(1), horn(2, 1)};
  for (const auto& t : objs) {
    for (const auto& x : objs) {
      for (const auto& y : objs) {
        const auto p = product(x, y);
        EXPECT_EQ(count_maps(t, p), count_maps(t, x) * count_maps(t, y));
      }
    }
  }
}

TEST(Product, PairingRoundTrips) {
  const auto t = standard_simplex(1);
  const auto x = standard_simplex(1);
  const auto y = boundary_simplex(2);
  const auto p = product(x, y);
  for (const auto& f : enumerate_maps(t, x)) {
    for (const auto& g : enumerate_maps(t, y)) {
      const auto h = pairing(f, g, p);
      EXPECT_TRUE(same_map(compose(pr1(p), h), f));
      EXPECT_TRUE(same_map(compose(pr2(p), h), g));
    }
  }
  for (const auto& h : enumerate_maps(t, p)) {
    EXPECT_TRUE(same_map(pairing(compose(pr1(p), h), compose(pr2(p), h), p), h));
  }
}

TEST(Product, TruncatedFactorsGiveATruncatedProduct) {
  const auto t = truncate(standard_simplex(2), 1);
  const auto p = product(t, standard_simplex(1));
  EXPECT_EQ(p->trunc_dim(), 1);
  EXPECT_EQ(p->top_dim(), 1);
  EXPECT_THROW(p->level(2), TruncationError);
}

TEST(Product, ShapeMismatchIsRejected) {
  const auto d1 = standard_simplex(1);
  const auto d2 = standard_simplex(2);
  EXPECT_THROW(canonical_iso(IsoKind::swap, product(d1, d2), product(d1, d2)), DomainMismatch);
  EXPECT_THROW(canonical_iso(IsoKind::unit_r, product(d1, d2), d1), DomainMismatch);
  EXPECT_THROW(product_parts(*d1), std::invalid_argument);
}

}  // namespace
}  // namespace cylpath
