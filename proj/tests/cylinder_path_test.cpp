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

#include "cylpath/cylinder_path.hpp"

#include <gtest/gtest.h>

#include "cylpath/enumerate.hpp"
#include "cylpath/errors.hpp"
#include "cylpath/product.hpp"

namespace cylpath {
namespace {

class CylinderPath : public ::testing::Test {
 protected:
  Enrichment e{2, 1};
  SSetPtr d0 = standard_simplex(0);
  SSetPtr d1 = standard_simplex(1);
  std::vector<SSetPtr> small = {d0, d1};
};

TEST_F(CylinderPath, CanonicalCylindersSatisfyTheirDefinition) {
  for (const auto& x : small) {
    for (const auto& k : small) {
      const auto s = canonical_cylinder(e, x, k, small);
      const auto report = check_structure_def(e, s);
      EXPECT_TRUE(report.ok()) << format_text(report);
      EXPECT_EQ(report.records().size(), 2u * 3u * 2u);
    }
  }
}

TEST_F(CylinderPath, CanonicalPathsSatisfyTheirDefinition) {
  for (const auto& x : small) {
    for (const auto& k : small) {
      const auto s = canonical_path(e, x, k, small);
      const auto report = check_structure_def(e, s);
      EXPECT_TRUE(report.ok()) << format_text(report);
      EXPECT_EQ(report.records().size(), 2u * 3u * 2u);
    }
  }
}

TEST_F(CylinderPath, PointParameterGivesBackX) {
  const auto s = canonical_cylinder(e, d1, d0, {});
  EXPECT_TRUE(is_iso(canonical_iso(IsoKind::unit_r, s.obj, d1).forward));
  const auto p = canonical_path(e, d1, d0, {});
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(p.obj->level_size(n), d1->level_size(n));
}

TEST_F(CylinderPath, PathObjectOfTheEdgeIsATriangle) {
  const auto p = canonical_path(e, d1, d1, {d0});
  const auto d2 = standard_simplex(2);
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(p.obj->level_size(n), d2->level_size(n));
  const auto point = canonical_path(e, d0, d1, {});
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(point.obj->level_size(n), 1u);
}

TEST_F(CylinderPath, EmptyProbeSetPassesVacuously) {
  const auto report = check_structure_def(e, canonical_cylinder(e, d1, d1, {}));
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.records().empty());
}

TEST_F(CylinderPath, ConstantAlphaIsCaught) {
  const auto s = with_constant_alpha(canonical_cylinder(e, d1, d1, {d1}));
  const auto report = check_structure_def(e, s);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.first_failure()->anchor, "cyl.def-square");
  EXPECT_FALSE(report.first_failure()->witness.empty());
}

TEST_F(CylinderPath, MissingProbesAndLargeParametersAreRejected) {
  const auto s = canonical_cylinder(e, d1, d1, {d0});
  EXPECT_THROW(s.phi_for(d1), ProbeMissing);
  try {
    canonical_cylinder(e, d1, standard_simplex(2), {});
    FAIL() << "expected a truncation error";
  } catch (const TruncationError& err) {
    EXPECT_EQ(err.required(), 2);
    EXPECT_EQ(err.available(), 1);
  }
}

TEST_F(CylinderPath, TensorOnParameterIsProductWithIdentity) {
  std::vector<CylinderStructure> cyl;
  for (const auto& k : small) cyl.push_back(canonical_cylinder(e, d1, k, {}));
  std::vector<SSetPtr> objs;
  for (const auto& c : cyl) objs.push_back(c.obj);
  for (const auto& k : small) cyl.push_back(canonical_cylinder(e, d1, k, objs));
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const auto& ck = cyl[2 + a];
      const auto& cl = cyl[2 + b];
      for (const auto& u : enumerate_maps(ck.k, cl.k)) {
        const auto d = derived_tensor_on_sset(e, ck, cl, u);
        EXPECT_TRUE(d.report.ok()) << format_text(d.report);
        EXPECT_EQ(d.solutions, 1u);
        EXPECT_TRUE(same_map(d.map, product_map(identity_map(d1), u, ck.obj, cl.obj)));
      }
    }
  }
}

TEST_F(CylinderPath, TensorOnObjectIsProductWithIdentity) {
  std::vector<SSetPtr> objs;
  for (const auto& x : small) objs.push_back(e.product(x, d1));
  std::vector<CylinderStructure> cyl;
  for (const auto& x : small) cyl.push_back(canonical_cylinder(e, x, d1, objs));
  for (const auto& cx : cyl) {
    for (const auto& cy : cyl) {
      for (const auto& u : enumerate_maps(cx.x, cy.x)) {
        const auto d = derived_tensor_on_object(e, cx, cy, u);
        EXPECT_TRUE(d.report.ok()) << format_text(d.report);
        EXPECT_TRUE(same_map(d.map, product_map(u, identity_map(d1), cx.obj, cy.obj)));
      }
    }
  }
}

TEST_F(CylinderPath, CotensorOnParameterIsPrecomposition) {
  std::vector<SSetPtr> objs;
  for (const auto& k : small) objs.push_back(e.hom_exact(k, d1)->carrier());
  std::vector<PathStructure> path;
  for (const auto& k : small) path.push_back(canonical_path(e, d1, k, objs));
  for (const auto& pk : path) {
    for (const auto& pl : path) {
      for (const auto& u : enumerate_maps(pk.k, pl.k)) {
        const auto d = derived_cotensor_on_sset(e, pk, pl, u);
        EXPECT_TRUE(d.report.ok()) << format_text(d.report);
        const auto oracle = hom_action_pre(*e.hom_exact(pl.k, d1), *e.hom_exact(pk.k, d1), u);
        EXPECT_TRUE(same_map(d.map, oracle));
      }
    }
  }
}

TEST_F(CylinderPath, CotensorOnObjectIsPostcomposition) {
  std::vector<SSetPtr> objs;
  for (const auto& x : small) objs.push_back(e.hom_exact(d1, x)->carrier());
  std::vector<PathStructure> path;
  for (const auto& x : small) path.push_back(canonical_path(e, x, d1, objs));
  for (const auto& py : path) {
    for (const auto& px : path) {
      for (const auto& u : enumerate_maps(py.x, px.x)) {
        const auto d = derived_cotensor_on_object(e, py, px, u);
        EXPECT_TRUE(d.report.ok()) << format_text(d.report);
        const auto oracle = hom_action_post(*e.hom_exact(d1, py.x), *e.hom_exact(d1, px.x), u);
        EXPECT_TRUE(same_map(d.map, oracle));
      }
    }
  }
}

TEST_F(CylinderPath, SkippingTildeBreaksTheDefiningCondition) {
  const auto ck = canonical_cylinder(e, d1, d0, {e.product(d1, d1)});
  const auto cl = canonical_cylinder(e, d1, d1, {});
  const auto u = enumerate_maps(d0, d1).back();
  const auto d = derived_tensor_on_sset(e, ck, cl, u, SolverVariant::skip_tilde);
  EXPECT_FALSE(d.report.ok());
}

TEST_F(CylinderPath, ComparisonOfAStructureWithItselfIsTheIdentity) {
  const auto obj = e.product(d1, d1);
  const auto s = canonical_cylinder(e, d1, d1, {obj});
  const auto d = uniqueness_solve(e, s, s);
  EXPECT_TRUE(d.report.ok()) << format_text(d.report);
  EXPECT_TRUE(same_map(d.map, identity_map(obj)));
}

TEST_F(CylinderPath, ShuffledCylinderRecoversTheSwap) {
  const auto obj = e.product(d1, d1);
  const auto s = canonical_cylinder(e, d1, d1, {d0, d1, obj});
  const auto rho = canonical_iso(IsoKind::swap, obj, obj).forward;
  const auto t = shuffle_structure(e, s, rho);
  EXPECT_TRUE(check_structure_def(e, t).ok());
  const auto d = uniqueness_solve(e, s, t);
  EXPECT_TRUE(d.report.ok()) << format_text(d.report);
  EXPECT_EQ(d.solutions, 1u);
  EXPECT_TRUE(same_map(d.map, rho));

  const auto back = shuffle_structure(e, t, *inverse_of(rho));
  EXPECT_EQ(back.obj, s.obj);
  EXPECT_TRUE(same_map(back.alpha, s.alpha));
  for (std::size_t i = 0; i < s.phi.size(); ++i) EXPECT_TRUE(same_map(back.phi[i], s.phi[i]));
}

TEST_F(CylinderPath, ShuffledPathRecoversTheRelabelling) {
  const auto obj = e.hom_exact(d1, d1)->carrier();
  const auto copy = relabel(obj, "copy", "c");
  const auto s = canonical_path(e, d1, d1, {d0, obj, copy.copy});
  const auto t = shuffle_structure(e, s, copy.to);
  EXPECT_TRUE(check_structure_def(e, t).ok());
  const auto d = uniqueness_solve(e, s, t);
  EXPECT_TRUE(d.report.ok()) << format_text(d.report);
  EXPECT_EQ(d.solutions, 1u);
  EXPECT_TRUE(same_map(d.map, copy.to));
  EXPECT_THROW(shuffle_structure(e, s, constant_map(obj, obj, 0)), std::invalid_argument);
}

}  // namespace
}  // namespace cylpath
