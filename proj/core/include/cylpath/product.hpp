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

// Binary products of finite simplicial sets.
//
// An n-simplex of X x Y is a pair (a, b) of n-simplices. Writing
// a = (ba, ea) and b = (bb, eb) in canonical form, the pair is
// nondegenerate iff t -> (ea(t), eb(t)) is injective. A product object
// remembers its factors, so pair() and the projections work on it directly.
//
// Products are never flattened: (X x Y) x Z and X x (Y x Z) are different
// objects related by canonical_iso(IsoKind::assoc, ...).

#ifndef CYLPATH_PRODUCT_HPP_
#define CYLPATH_PRODUCT_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cylpath/simplicial_map.hpp"
#include "cylpath/simplicial_set.hpp"

namespace cylpath {

struct ProductKey {
  SimplexRef left;
  SimplexRef right;
  friend bool operator==(const ProductKey&, const ProductKey&) = default;
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const {
    SimplexRefHash h;
    return h(k.left) * 0x9e3779b97f4a7c15ULL ^ h(k.right);
  }
};

struct ProductData {
  SSetPtr left;
  SSetPtr right;
  // Components of each nondegenerate simplex.
  std::vector<SimplexRef> left_part;
  std::vector<SimplexRef> right_part;
  std::unordered_map<ProductKey, SimplexId, ProductKeyHash> index;
};

// X x Y, named "X*Y" unless a name is given. Truncated at the smaller of
// the two truncations.
SSetPtr product(const SSetPtr& x, const SSetPtr& y, std::string name = {});

// The product data of p; throws std::invalid_argument when p is no product.
const ProductData& product_parts(const FiniteSimplicialSet& p);
inline const SSetPtr& left_factor(const FiniteSimplicialSet& p) {
  return product_parts(p).left;
}
inline const SSetPtr& right_factor(const FiniteSimplicialSet& p) {
  return product_parts(p).right;
}

// The simplex (a, b) of p in canonical form; a and b must have equal
// dimension.
SimplexRef pair(const FiniteSimplicialSet& p, const SimplexRef& a, const SimplexRef& b);
// The components of an arbitrary simplex of p.
SimplexRef left_of(const FiniteSimplicialSet& p, const SimplexRef& s);
SimplexRef right_of(const FiniteSimplicialSet& p, const SimplexRef& s);

SimplicialMap pr1(const SSetPtr& p);
SimplicialMap pr2(const SSetPtr& p);
// (f, g) : T -> X x Y, for p = X x Y.
SimplicialMap pairing(const SimplicialMap& f, const SimplicialMap& g, const SSetPtr& p);
// f x g : A x B -> C x D between the given product objects.
SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g,
                          const SSetPtr& dom, const SSetPtr& cod);
// x -> (x, x), for xx = X x X.
SimplicialMap diagonal(const SSetPtr& x, const SSetPtr& xx);

enum class IsoKind {
  assoc,  // (X x Y) x Z -> X x (Y x Z)
  swap,   // X x Y -> Y x X
  unit_r  // X x Delta[0] -> X
};

struct CanonicalIso {
  SimplicialMap forward;
  SimplicialMap inverse;
};

// The canonical isomorphism source -> target of the given kind. The
// operands are read off the product structure of source and target, which
// must line up (same factor objects), else DomainMismatch.
CanonicalIso canonical_iso(IsoKind kind, const SSetPtr& source, const SSetPtr& target);

// Memoizes products by the identity of their factors, so that every
// X x Delta[n] used by the function complexes out of X is one object. Holds
// strong references to everything it has built. Thread-safe.
class ProductCache {
 public:
  SSetPtr product(const SSetPtr& x, const SSetPtr& y);
  SSetPtr cylinder(const SSetPtr& x, int n) { return product(x, standard_simplex(n)); }
  // id_X x Delta[theta] : X x Delta[m] -> X x Delta[n] for theta : [m] -> [n].
  // The reference stays valid for the lifetime of the cache.
  const SimplicialMap& restriction(const SSetPtr& x, const MonotoneMap& theta);

 private:
  using Key = std::pair<const FiniteSimplicialSet*, const FiniteSimplicialSet*>;
  std::recursive_mutex mu_;
  std::map<Key, SSetPtr> products_;
  std::map<std::pair<const FiniteSimplicialSet*, MonotoneMap>, std::unique_ptr<SimplicialMap>>
      restrictions_;
};

}  // namespace cylpath

#endif  // CYLPATH_PRODUCT_HPP_
