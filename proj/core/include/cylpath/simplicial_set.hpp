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

// Finite simplicial sets in Eilenberg-Zilber canonical form.
//
// A FiniteSimplicialSet stores only its nondegenerate simplices and, for each
// of them, its faces. Every simplex, degenerate or not, is then written
// uniquely as a SimplexRef: a nondegenerate base simplex together with a
// surjection [n] ->> [dim base]. Operators act on SimplexRefs through act().
//
// Objects are immutable once built and are shared through SSetPtr. Identity
// of objects is pointer identity: two separately built copies of Delta[1]
// are isomorphic but distinct objects.

#ifndef CYLPATH_SIMPLICIAL_SET_HPP_
#define CYLPATH_SIMPLICIAL_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cylpath/monotone.hpp"
#include "cylpath/report.hpp"

namespace cylpath {

using SimplexId = std::uint32_t;

// trunc_dim of an object whose stored data is complete in all dimensions.
inline constexpr int kExact = std::numeric_limits<int>::max();

struct SimplexRef {
  SimplexId base = 0;
  MonotoneMap deg;  // surjection [dim()] ->> [dim of base]

  int dim() const { return deg.source_dim(); }
  bool is_nondegenerate() const { return deg.is_identity(); }

  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

struct SimplexRefHash {
  std::size_t operator()(const SimplexRef& s) const {
    return s.deg.hash() * 31 + s.base;
  }
};

struct ProductData;

class FiniteSimplicialSet {
 public:
  const std::string& name() const { return name_; }
  int trunc_dim() const { return trunc_dim_; }
  bool is_exact() const { return trunc_dim_ == kExact; }
  // Highest dimension holding a nondegenerate simplex, -1 when empty.
  int top_dim() const { return static_cast<int>(first_.size()) - 2; }

  // Number of nondegenerate simplices.
  std::size_t size() const { return dims_.size(); }
  std::size_t count(int d) const;
  // Nondegenerate ids are contiguous per dimension, increasing with it.
  SimplexId first(int d) const;
  // Number of nondegenerate simplices of dimension <= d.
  std::size_t count_up_to(int d) const;

  int dim(SimplexId id) const { return dims_[id]; }
  const std::string& label(SimplexId id) const { return labels_[id]; }
  std::optional<SimplexId> find(std::string_view label) const;
  // Faces d_0 .. d_n of a nondegenerate n-simplex, n > 0.
  std::span<const SimplexRef> faces(SimplexId id) const;

  SimplexRef nondegenerate(SimplexId id) const {
    return {id, MonotoneMap::identity(dims_[id])};
  }

  // Dense per-level indexing of all n-simplices, ordered by
  // (base id, degeneracy values). Throws TruncationError above trunc_dim.
  std::uint64_t level_size(int n) const;
  std::uint64_t index_of(const SimplexRef& s) const;
  SimplexRef simplex_at(int n, std::uint64_t index) const;
  std::vector<SimplexRef> level(int n) const;

  // Non-null when this object was built by product().
  const ProductData* product_data() const { return product_.get(); }

  // Throws TruncationError unless dimension n is faithfully stored.
  void require_level(int n, std::string_view context) const;

 private:
  friend class SimplicialSetBuilder;

  FiniteSimplicialSet() = default;

  std::string name_;
  int trunc_dim_ = kExact;
  std::vector<int> dims_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> face_offset_;  // size() + 1 entries
  std::vector<SimplexRef> faces_;
  std::vector<SimplexId> first_;           // first_[d], plus a sentinel
  std::unordered_map<std::string, SimplexId> by_label_;
  std::shared_ptr<const ProductData> product_;
};

using SSetPtr = std::shared_ptr<const FiniteSimplicialSet>;

// Collects simplices in any order; build() sorts them by dimension (stably)
// and checks the structural invariants: every face present, of the right
// dimension, with a surjective degeneracy onto an existing simplex. The
// simplicial identities are *not* enforced here; validate_sset reports them.
class SimplicialSetBuilder {
 public:
  explicit SimplicialSetBuilder(std::string name, int trunc_dim = kExact);

  // Returns a provisional id valid for set_face on this builder.
  SimplexId add_simplex(int dim, std::string label);
  void set_face(SimplexId simplex, int i, SimplexRef face);
  void set_faces(SimplexId simplex, std::vector<SimplexRef> faces);

  // Id a provisional id received in the built object.
  SimplexId final_id(SimplexId provisional) const;

  // Marks the object as a product; used by product().
  void attach(std::shared_ptr<const ProductData> product) {
    product_ = std::move(product);
  }

  // Throws std::invalid_argument on structural violations.
  SSetPtr build();

 private:
  std::string name_;
  int trunc_dim_;
  std::vector<int> dims_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::optional<SimplexRef>>> faces_;
  std::vector<SimplexId> remap_;
  std::shared_ptr<const ProductData> product_;
};

// The canonical form of the simplex s . theta for theta : [n'] -> [dim s].
SimplexRef act(const FiniteSimplicialSet& x, const SimplexRef& s,
               const MonotoneMap& theta);
SimplexRef face(const FiniteSimplicialSet& x, const SimplexRef& s, int i);
SimplexRef degeneracy(const FiniteSimplicialSet& x, const SimplexRef& s, int j);
// Vertex v of s, as a 0-simplex id.
SimplexId vertex_of(const FiniteSimplicialSet& x, const SimplexRef& s, int v);

// Field invariants plus d_i d_j = d_{j-1} d_i for all i < j on every stored
// nondegenerate simplex. Failures name the simplex and (i, j).
VerificationReport validate_sset(const FiniteSimplicialSet& x);

// Delta[n]; repeated calls return the same object. Nondegenerate m-simplices
// are the injections [m] -> [n], labelled by their vertex lists ("013").
SSetPtr standard_simplex(int n);
// Id in standard_simplex(n) of the nondegenerate simplex `injection`.
SimplexId standard_simplex_id(const MonotoneMap& injection);
// The simplex theta : [m] -> [n] of Delta[n], in canonical form.
SimplexRef standard_simplex_ref(const MonotoneMap& theta);
// Inverses of the two above.
MonotoneMap standard_simplex_injection(int n, SimplexId id);
MonotoneMap standard_simplex_operator(int n, const SimplexRef& s);

// Boundary of Delta[n] and the horn Lambda^k[n]; both exact.
SSetPtr boundary_simplex(int n);
SSetPtr horn(int n, int k);
// Disjoint union, labels prefixed "l." and "r.".
SSetPtr disjoint_union(const SSetPtr& x, const SSetPtr& y, std::string name);
// The same data under a new name and truncation (which must not exceed the
// source's), keeping ids.
SSetPtr truncate(const SSetPtr& x, int trunc_dim);
// A copy of x in which faces i and j of simplex `id` trade places. Used to
// build deliberately broken inputs; the result usually violates the
// simplicial identities.
SSetPtr with_swapped_faces(const SSetPtr& x, SimplexId id, int i, int j);

}  // namespace cylpath

#endif  // CYLPATH_SIMPLICIAL_SET_HPP_
