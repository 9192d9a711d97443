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

// Simplicial maps between finite simplicial sets.
//
// A map is its value on every nondegenerate simplex of the domain, in id
// order. Values on degenerate simplices follow from f(x . eta) = f(x) . eta.
// A map may be known only up to some dimension (`bound`), which happens
// when the domain is itself a truncated object.

#ifndef CYLPATH_SIMPLICIAL_MAP_HPP_
#define CYLPATH_SIMPLICIAL_MAP_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cylpath/report.hpp"
#include "cylpath/simplicial_set.hpp"

namespace cylpath {

struct SimplicialMap {
  SSetPtr dom;
  SSetPtr cod;
  // Largest dimension on which the map is known; kExact when total.
  int bound = kExact;
  // One entry per nondegenerate simplex of dom of dimension <= bound.
  std::vector<SimplexRef> assign;

  // Image of an arbitrary simplex of dom. Throws TruncationError when its
  // nondegenerate base lies above `bound`.
  SimplexRef operator()(const SimplexRef& s) const;
  // Image of a nondegenerate simplex.
  const SimplexRef& at(SimplexId id) const { return assign[id]; }
};

struct SimplicialMapHash {
  std::size_t operator()(const SimplicialMap& f) const;
};

// Builds the map whose value on nondegenerate simplex `id` is value(id).
// The bound defaults to the truncation of dom.
inline constexpr int kDomainBound = -1;
SimplicialMap make_map(SSetPtr dom, SSetPtr cod,
                       const std::function<SimplexRef(SimplexId)>& value,
                       int bound = kDomainBound);

SimplicialMap identity_map(const SSetPtr& x);
// The map sending everything to (degeneracies of) vertex v of y.
SimplicialMap constant_map(const SSetPtr& x, const SSetPtr& y, SimplexId v);

// g o f. Throws DomainMismatch unless f.cod and g.dom are the same object.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// The map Delta[n] -> K classifying the n-simplex k.
SimplicialMap yoneda(const SSetPtr& k_obj, const SimplexRef& k);

// Empty when f and g have the same domain and codomain and agree on every
// nondegenerate simplex of dimension <= level (and <= both bounds).
// Otherwise the first disagreement, in id order.
std::optional<std::string> maps_equal(const SimplicialMap& f,
                                      const SimplicialMap& g,
                                      int level = kExact);
inline bool same_map(const SimplicialMap& f, const SimplicialMap& g,
                     int level = kExact) {
  return !maps_equal(f, g, level);
}

// Dimension and face compatibility of every assignment.
VerificationReport validate_map(const SimplicialMap& f);

// The two-sided inverse when f is a bijection on nondegenerate simplices
// (then it is a bijection on every level).
std::optional<SimplicialMap> inverse_of(const SimplicialMap& f);
inline bool is_iso(const SimplicialMap& f) { return inverse_of(f).has_value(); }

// "label" for nondegenerate simplices, "label@0,0,1" otherwise.
std::string format_simplex(const FiniteSimplicialSet& x, const SimplexRef& s);
// "{a->b, ...}" over nondegenerate simplices.
std::string format_map(const SimplicialMap& f);

// An isomorphic copy of x under a new name with labels prefixed by `prefix`,
// together with the isomorphisms in both directions.
struct Relabelling {
  SSetPtr copy;
  SimplicialMap to;    // x -> copy
  SimplicialMap from;  // copy -> x
};
Relabelling relabel(const SSetPtr& x, std::string name, const std::string& prefix);

}  // namespace cylpath

#endif  // CYLPATH_SIMPLICIAL_MAP_HPP_
