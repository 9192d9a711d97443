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

// The function complex F(X, Y): its n-simplices are the maps X x Delta[n] -> Y
// and theta acts by precomposition with id_X x Delta[theta].
//
// Levels 0..L are materialized by enumeration. A map is degenerate iff it
// is s_j of some map one level down, which is tested by membership in the
// images of the precompositions with id_X x Delta[sigma_j]; the remaining
// maps are the nondegenerate simplices of a carrier FiniteSimplicialSet,
// truncated at L.
//
// When Y is the nerve of a poset and X is exact, F(X, Y) is itself the nerve
// of the poset of maps X -> Y under the pointwise order. Then the carrier
// has no nondegenerate simplices past the first level without any, and
// materialize_exact() returns an exact carrier.

#ifndef CYLPATH_FUNCTION_COMPLEX_HPP_
#define CYLPATH_FUNCTION_COMPLEX_HPP_

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cylpath/product.hpp"
#include "cylpath/simplicial_map.hpp"

namespace cylpath {

struct AssignmentHash {
  std::size_t operator()(const std::vector<SimplexRef>& a) const;
};

class FunctionComplex {
 public:
  // Materializes levels 0..level. Throws TruncationError (required
  // dimension dim X + level) when Y is not stored that far.
  static std::shared_ptr<const FunctionComplex> materialize(
      const SSetPtr& x, const SSetPtr& y, int level,
      const std::shared_ptr<ProductCache>& cache);
  // Exact carrier; requires an exact x and is_poset_nerve(*y), else throws
  // std::invalid_argument.
  static std::shared_ptr<const FunctionComplex> materialize_exact(
      const SSetPtr& x, const SSetPtr& y, const std::shared_ptr<ProductCache>& cache);

  const SSetPtr& source() const { return x_; }
  const SSetPtr& target() const { return y_; }
  const SSetPtr& carrier() const { return carrier_; }
  // Highest materialized level.
  int level() const { return static_cast<int>(levels_.size()) - 1; }
  ProductCache& cache() const { return *cache_; }
  // X x Delta[n], shared by all function complexes out of X built on the
  // same cache.
  SSetPtr cylinder(int n) const { return cache_->cylinder(x_, n); }

  // The map X x Delta[n] -> Y of an n-simplex of the carrier. Works in any
  // dimension for which the simplex can be written down.
  SimplicialMap underlying(const SimplexRef& s) const;
  // The n-simplex with the given underlying map (whose domain must be
  // cylinder(n)). Above the materialized level only degenerate simplices
  // can be found; throws TruncationError when none matches and the carrier
  // is truncated.
  SimplexRef element(const SimplicialMap& f) const;
  std::optional<SimplexRef> find(const SimplicialMap& f) const;

  // The value of s's underlying map on a simplex p of X x Delta[dim s],
  // computed without building the map.
  SimplexRef apply(const SimplexRef& s, const SimplexRef& p) const;
  // s's underlying map at (x, id_n) for x in X_n, n = dim s.
  SimplexRef evaluate(const SimplexRef& s, const SimplexRef& x) const;

  // Level n in dense carrier order: maps()[k] is the underlying map of
  // carrier().simplex_at(n, k).
  const std::vector<SimplicialMap>& maps(int n) const;

 private:
  struct Level {
    std::vector<SimplicialMap> maps;
    std::unordered_map<std::vector<SimplexRef>, std::uint64_t, AssignmentHash> index;
  };

  FunctionComplex() = default;
  static std::shared_ptr<const FunctionComplex> build(const SSetPtr& x, const SSetPtr& y,
                                                      int level, bool exact,
                                                      const std::shared_ptr<ProductCache>& cache);

  SSetPtr x_;
  SSetPtr y_;
  SSetPtr carrier_;
  std::shared_ptr<ProductCache> cache_;
  std::vector<Level> levels_;
};

using FunctionComplexPtr = std::shared_ptr<const FunctionComplex>;

// True when y is exact and isomorphic to the nerve of a poset: the vertices
// with u <= v iff there is an edge from u to v (or u = v) form a partial
// order, and the nondegenerate simplices are exactly the strict chains,
// each once.
bool is_poset_nerve(const FiniteSimplicialSet& y);

}  // namespace cylpath

#endif  // CYLPATH_FUNCTION_COMPLEX_HPP_
