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

// Weakly increasing maps between finite ordinals [n] = {0, ..., n}.
//
// These are the operators of the simplex category. Every simplicial
// operator in the library (faces, degeneracies, the collapse [n] -> [0])
// is a MonotoneMap, and simplices carry their degeneracy part as one.

#ifndef CYLPATH_MONOTONE_HPP_
#define CYLPATH_MONOTONE_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cylpath {

// Largest ordinal index supported by the fixed-capacity representation.
inline constexpr int kMaxDim = 15;

class MonotoneMap {
 public:
  // The identity of [0].
  MonotoneMap() = default;

  // Map [values.size()-1] -> [target_dim]. Throws std::invalid_argument
  // unless the values are weakly increasing and within range.
  MonotoneMap(int target_dim, std::span<const int> values);
  MonotoneMap(int target_dim, std::initializer_list<int> values);

  // As the constructor, without validation; the caller guarantees a
  // weakly increasing list within range.
  static MonotoneMap unchecked(int target_dim, std::span<const int> values);

  static MonotoneMap identity(int n);
  // delta_i : [n-1] -> [n], the injection that skips i.
  static MonotoneMap coface(int n, int i);
  // sigma_j : [n+1] -> [n], the surjection that repeats j.
  static MonotoneMap codegeneracy(int n, int j);
  // The unique map [n] -> [0].
  static MonotoneMap collapse(int n);
  // The vertex v : [0] -> [n].
  static MonotoneMap vertex(int n, int v);

  int source_dim() const { return src_; }
  int target_dim() const { return tgt_; }
  int operator()(int i) const { return v_[static_cast<std::size_t>(i)]; }
  std::vector<int> values() const;

  bool is_surjective() const;
  bool is_injective() const;
  bool is_identity() const;

  std::size_t hash() const;

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  std::uint8_t src_ = 0;
  std::uint8_t tgt_ = 0;
  // Entries past src_ stay zero so defaulted comparison is structural.
  std::array<std::uint8_t, kMaxDim + 1> v_{};

  friend MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);
  friend struct EpiMonoFactorization factor_monotone(const MonotoneMap& f);
  friend MonotoneMap surjection_unrank(int n, int m, std::uint64_t rank);
};

// g o f. Throws std::invalid_argument when f's target is not g's source.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

struct EpiMonoFactorization {
  MonotoneMap surjection;
  MonotoneMap injection;
};

// The unique factorization f = injection o surjection.
EpiMonoFactorization factor_monotone(const MonotoneMap& f);

// All maps [n] -> [m] (resp. surjective, injective ones), in
// lexicographic order of their value lists.
std::vector<MonotoneMap> monotone_maps(int n, int m);
std::vector<MonotoneMap> surjections(int n, int m);
std::vector<MonotoneMap> injections(int n, int m);

std::uint64_t binomial(int n, int k);

// Position of a surjection [n] ->> [m] in surjections(n, m).
std::uint64_t surjection_rank(const MonotoneMap& s);
// Inverse of surjection_rank.
MonotoneMap surjection_unrank(int n, int m, std::uint64_t rank);

// "0,0,1" style value list.
std::string to_string(const MonotoneMap& f);

}  // namespace cylpath

#endif  // CYLPATH_MONOTONE_HPP_
