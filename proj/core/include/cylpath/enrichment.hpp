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

// The simplicial enrichment of finite simplicial sets.
//
// An Enrichment owns the caches that make object identity work: one
// X x Delta[n] per (X, n), one F(X, Y) per (X, Y, level). Complexes come in
// two tiers. hom(X, Y) is materialized at level() + parameter_dim(), so a
// parameter object K of dimension <= parameter_dim() can map into it at
// levels <= level(); nested_hom(K, C) is materialized at level(). When
// parameter_dim() is 0 the two tiers coincide.
//
// The operations take the complexes they act on explicitly. Equality of
// simplices of a complex is equality of canonical forms, which is
// equality of underlying maps.

#ifndef CYLPATH_ENRICHMENT_HPP_
#define CYLPATH_ENRICHMENT_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "cylpath/function_complex.hpp"
#include "cylpath/report.hpp"

namespace cylpath {

class Enrichment {
 public:
  explicit Enrichment(int level, int parameter_dim = 0);

  int level() const { return level_; }
  int parameter_dim() const { return parameter_dim_; }
  int outer_level() const { return level_ + parameter_dim_; }

  ProductCache& products() { return *cache_; }
  SSetPtr product(const SSetPtr& x, const SSetPtr& y) { return cache_->product(x, y); }

  FunctionComplexPtr hom(const SSetPtr& x, const SSetPtr& y) {
    return hom_at(x, y, outer_level());
  }
  FunctionComplexPtr nested_hom(const SSetPtr& k, const SSetPtr& c) {
    return hom_at(k, c, level_);
  }
  FunctionComplexPtr hom_at(const SSetPtr& x, const SSetPtr& y, int level);
  // Exact F(K, X) for a poset nerve X; see FunctionComplex.
  FunctionComplexPtr hom_exact(const SSetPtr& k, const SSetPtr& x);
  // The complex whose carrier is c, or null.
  FunctionComplexPtr complex_of(const SSetPtr& c) const;

 private:
  int level_;
  int parameter_dim_;
  std::shared_ptr<ProductCache> cache_;
  mutable std::recursive_mutex mu_;
  std::map<std::tuple<const FiniteSimplicialSet*, const FiniteSimplicialSet*, int>,
           FunctionComplexPtr>
      homs_;
  std::map<const FiniteSimplicialSet*, FunctionComplexPtr> by_carrier_;
};

// Deliberate breakage of the composition, for mutation testing.
enum class UbVariant {
  standard,
  // Uses (id, vertex 0) in place of the diagonal of Delta[n].
  without_diagonal
};

// The composite of f in F(X,Y)_n and g in F(Y,Z)_n, as an n-simplex of
// F(X,Z): its underlying map is (x, t) -> g(f(x, t), t), evaluated
// simplex by simplex.
SimplexRef ub(const FunctionComplex& fxy, const FunctionComplex& fyz,
              const FunctionComplex& fxz, const SimplexRef& f, const SimplexRef& g,
              UbVariant variant = UbVariant::standard);
// The same composite built literally as
// g . (f x id) . assoc^-1 . (id_X x diagonal) from product maps.
SimplexRef ub_literal(const FunctionComplex& fxy, const FunctionComplex& fyz,
                      const FunctionComplex& fxz, const SimplexRef& f, const SimplexRef& g);

// ub_literal with its g-independent factors memoized: assoc^-1 . (id x
// diagonal) per (X, n) and (f x id) . assoc^-1 . (id x diagonal) per f.
class UbLiteral {
 public:
  SimplexRef operator()(const FunctionComplex& fxy, const FunctionComplex& fyz,
                        const FunctionComplex& fxz, const SimplexRef& f, const SimplexRef& g);

 private:
  const SimplicialMap& head(const FunctionComplex& fxz, int n);

  std::map<std::pair<const FiniteSimplicialSet*, int>, SimplicialMap> head_;
  std::map<std::pair<const FiniteSimplicialSet*, SimplexRef>, SimplicialMap> with_f_;
};

// The 0-simplex f . r_X of F(X, Y), with r_X : X x Delta[0] -> X.
SimplexRef tilde(const FunctionComplex& fxy, const SimplicialMap& f);
SimplicialMap untilde(const FunctionComplex& fxy, const SimplexRef& s);
// sigma^* of a 0-simplex: the totally degenerate n-simplex on it.
SimplexRef degenerate_to(const FunctionComplex& fc, const SimplexRef& vertex, int n);

// F(u, Y) : F(X, Y) -> F(Z, Y) for u : Z -> X, as a map of carriers;
// from = F(X, Y), to = F(Z, Y).
SimplicialMap hom_action_pre(const FunctionComplex& from, const FunctionComplex& to,
                             const SimplicialMap& u);
// F(X, v) : F(X, Y) -> F(X, Z) for v : Y -> Z; from = F(X, Y), to = F(X, Z).
SimplicialMap hom_action_post(const FunctionComplex& from, const FunctionComplex& to,
                              const SimplicialMap& v);
// Single-simplex versions of the two actions.
SimplexRef hom_pre_at(const FunctionComplex& from, const FunctionComplex& to,
                      const SimplicialMap& u, const SimplexRef& s);
SimplexRef hom_post_at(const FunctionComplex& from, const FunctionComplex& to,
                       const SimplicialMap& v, const SimplexRef& s);

// ev : X x F(X, Y) -> Y, (x, F) -> F(x, id_n).
SimplicialMap ev(const FunctionComplex& fxy);

// The currying bijection sSet(K, F(X, Y)) -> sSet(X x K, Y), as the
// composite ev . (id_X x u).
SimplicialMap sharp(const FunctionComplex& fxy, const SimplicialMap& u);
// The same map through (x, k) -> u(k)(x, id).
SimplicialMap sharp_pointwise(const FunctionComplex& fxy, const SimplicialMap& u);
// Its inverse: k -> g . (id_X x yoneda(k)).
SimplicialMap sharp_inv(const FunctionComplex& fxy, const SimplicialMap& g,
                        const SSetPtr& k_obj);

// Every enrichment law, exhaustively over the fixture objects and all
// simplices up to `level`:
//   enrich.hom-functor        F(-,-) preserves identities and composites
//   enrich.ub-simplicial      ub commutes with faces and degeneracies
//   enrich.ub-literal         ub agrees with its literal composite
//   enrich.tilde-bijection    tilde : sSet(X,Y) -> F(X,Y)_0 is bijective
//   enrich.tilde-natural      tilde(v f u) = F(u,Z) F(Y,v) tilde(f)
//   enrich.ub-assoc           ub(ub(f,g),h) = ub(f,ub(g,h))
//   enrich.ub-unit-post       F(X,g)_n(f) = ub(f, sigma^* tilde(g))
//   enrich.ub-unit-pre        F(f,Z)_n(g) = ub(sigma^* tilde(f), g)
//   enrich.tilde-composition  ub_0(tilde f, tilde g) = tilde(g f)
VerificationReport check_enrichment_axioms(const std::vector<SSetPtr>& fixtures, int level,
                                           UbVariant variant = UbVariant::standard);

}  // namespace cylpath

#endif  // CYLPATH_ENRICHMENT_HPP_
