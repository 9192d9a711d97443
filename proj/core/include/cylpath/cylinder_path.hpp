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

// Cylinder and path structures of X over K, and the morphisms they induce.
//
// A cylinder structure is an object X (.) K with alpha : K -> F(X, X (.) K)
// and, for each probe Y, a bijection
//   phi_Y : F(X (.) K, Y) -> F(K, F(X, Y))
// such that ub(alpha(k), g) = ev(k, phi_Y(g)) for all k in K_n and g in
// F(X (.) K, Y)_n. A path structure is an object X^K with
// beta : K -> F(X^K, X) and bijections psi_Y : F(Y, X^K) -> F(K, F(Y, X))
// such that ub(f, beta(k)) = ev(k, psi_Y(f)).
//
// Levels: structures live in an Enrichment e with dim K <= e.parameter_dim().
// alpha and beta land in e.hom(..) complexes; phi_Y and psi_Y are maps of
// carriers known up to e.level() with codomain e.nested_hom(K, ..).
//
// The derived morphisms are solved from their defining conditions through
// the level-0 inverse of phi or psi, then certified unique by filtering
// every map between the two objects on the same condition.

#ifndef CYLPATH_CYLINDER_PATH_HPP_
#define CYLPATH_CYLINDER_PATH_HPP_

#include <cstddef>
#include <vector>

#include "cylpath/enrichment.hpp"
#include "cylpath/report.hpp"

namespace cylpath {

struct CylinderStructure {
  SSetPtr x;
  SSetPtr k;
  SSetPtr obj;
  SimplicialMap alpha;  // K -> F(X, obj)
  std::vector<SSetPtr> probes;
  std::vector<SimplicialMap> phi;  // phi[i] : F(obj, Y) -> F(K, F(X, Y)), Y = probes[i]

  // Throws ProbeMissing.
  const SimplicialMap& phi_for(const SSetPtr& y) const;
};

struct PathStructure {
  SSetPtr x;
  SSetPtr k;
  SSetPtr obj;
  SimplicialMap beta;  // K -> F(obj, X)
  std::vector<SSetPtr> probes;
  std::vector<SimplicialMap> psi;  // psi[i] : F(Y, obj) -> F(K, F(Y, X)), Y = probes[i]

  const SimplicialMap& psi_for(const SSetPtr& y) const;
};

// X x K, with alpha(k) = id_X x yoneda(k) and phi_Y(g) the curried form of
// g . assoc^-1 : X x (K x Delta[n]) -> Y. Throws TruncationError when
// dim K exceeds e.parameter_dim().
CylinderStructure canonical_cylinder(Enrichment& e, const SSetPtr& x, const SSetPtr& k,
                                     const std::vector<SSetPtr>& probes);
// The exact carrier of F(K, X), with beta(k) = ev . (yoneda(k) x id) . swap
// and psi_Y(f) the curried form of sharp(f) read on Y x (K x Delta[n]).
// X must be a poset nerve.
PathStructure canonical_path(Enrichment& e, const SSetPtr& x, const SSetPtr& k,
                             const std::vector<SSetPtr>& probes);

// The defining square for every probe and level <= e.level(), plus
// levelwise bijectivity of phi or psi. Anchors cyl.def-square,
// cyl.phi-bijective, path.def-square, path.psi-bijective.
VerificationReport check_structure_def(Enrichment& e, const CylinderStructure& s);
VerificationReport check_structure_def(Enrichment& e, const PathStructure& s);

// Deliberate breakage of the derived-morphism solver, for mutation testing.
enum class SolverVariant {
  standard,
  // Inverts phi_0 or psi_0 at the first vertex of its codomain instead of
  // at the tilde of the defining composite.
  skip_tilde
};

struct DerivedMorphism {
  SimplicialMap map;
  // Defining condition of the solution, agreement of the tilde form of
  // the condition with the map form on every candidate, and the count of
  // candidates satisfying it.
  VerificationReport report;
  std::size_t solutions = 0;
};

// X (.) u : X (.) K -> X (.) L for u : K -> L, from F(X, f) alpha_K = alpha_L u.
// Needs cl.obj among ck's probes.
DerivedMorphism derived_tensor_on_sset(Enrichment& e, const CylinderStructure& ck,
                                       const CylinderStructure& cl, const SimplicialMap& u,
                                       SolverVariant variant = SolverVariant::standard);
// u (.) K : X (.) K -> Y (.) K for u : X -> Y, from
// F(X, f) alpha_X = F(u, Y (.) K) alpha_Y. Needs cy.obj among cx's probes.
// The report also carries the levelwise square
//   ub(alpha_X(k), sigma^* f~) = ub(sigma^* u~, alpha_Y(k)).
DerivedMorphism derived_tensor_on_object(Enrichment& e, const CylinderStructure& cx,
                                         const CylinderStructure& cy, const SimplicialMap& u,
                                         SolverVariant variant = SolverVariant::standard);
// X^u : X^L -> X^K for u : K -> L, from F(f, X) beta_K = beta_L u.
// Needs pl.obj among pk's probes.
DerivedMorphism derived_cotensor_on_sset(Enrichment& e, const PathStructure& pk,
                                         const PathStructure& pl, const SimplicialMap& u,
                                         SolverVariant variant = SolverVariant::standard);
// u^K : Y^K -> X^K for u : Y -> X, from F(f, X) beta_X = F(Y^K, u) beta_Y.
// Needs py.obj among px's probes. The report also carries
//   ub(beta_Y(k), sigma^* u~) = ub(sigma^* f~, beta_X(k)).
DerivedMorphism derived_cotensor_on_object(Enrichment& e, const PathStructure& py,
                                           const PathStructure& px, const SimplicialMap& u,
                                           SolverVariant variant = SolverVariant::standard);

// The comparison isomorphism between two structures on the same (X, K):
// f : obj1 -> obj2 with alpha2 = F(X, f) alpha1, or with
// beta1 = F(f, X) beta2 for paths. Each object must be a probe of the
// other structure. The report certifies that f is an isomorphism and the
// only map satisfying its condition.
DerivedMorphism uniqueness_solve(Enrichment& e, const CylinderStructure& s1,
                                 const CylinderStructure& s2);
DerivedMorphism uniqueness_solve(Enrichment& e, const PathStructure& s1,
                                 const PathStructure& s2);

// Transport along an isomorphism rho : s.obj -> obj':
// alpha' = F(X, rho) alpha and phi'_Y = phi_Y F(rho, Y), or
// beta' = F(rho^-1, X) beta and psi'_Y = psi_Y F(Y, rho^-1).
// Throws std::invalid_argument when rho is not an isomorphism.
CylinderStructure shuffle_structure(Enrichment& e, const CylinderStructure& s,
                                    const SimplicialMap& rho);
PathStructure shuffle_structure(Enrichment& e, const PathStructure& s, const SimplicialMap& rho);

// s with alpha replaced by the constant map at alpha(first vertex of K).
CylinderStructure with_constant_alpha(const CylinderStructure& s);

}  // namespace cylpath

#endif  // CYLPATH_CYLINDER_PATH_HPP_
