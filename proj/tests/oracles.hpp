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

// Brute-force reference implementations used only by tests. None of them
// shares code with the library beyond the FiniteSimplicialSet accessors.

#ifndef CYLPATH_TESTS_ORACLES_HPP_
#define CYLPATH_TESTS_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cylpath/simplicial_set.hpp"

namespace cylpath::oracle {

// Every weakly increasing sequence of length n+1 in {0..m}, by scanning
// all (m+1)^(n+1) sequences.
inline std::vector<std::vector<int>> monotone_sequences(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(n + 1), 0);
  while (true) {
    bool increasing = true;
    for (std::size_t i = 1; i < v.size(); ++i) increasing &= v[i - 1] <= v[i];
    if (increasing) out.push_back(v);
    std::size_t k = 0;
    while (k < v.size() && v[k] == m) v[k++] = 0;
    if (k == v.size()) break;
    ++v[k];
  }
  return out;
}

// A finite poset on {0..size-1} given by its order relation.
struct Poset {
  int size = 0;
  std::function<bool(int, int)> leq;
};

inline Poset chain(int n) {
  return {n + 1, [](int a, int b) { return a <= b; }};
}

inline Poset poset_product(const Poset& p, const Poset& q) {
  const int qs = q.size;
  return {p.size * q.size, [p, q, qs](int a, int b) {
            return p.leq(a / qs, b / qs) && q.leq(a % qs, b % qs);
          }};
}

// Number of order-preserving maps p -> q, by scanning all functions.
inline std::uint64_t count_order_maps(const Poset& p, const Poset& q) {
  std::vector<int> f(static_cast<std::size_t>(p.size), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int a = 0; a < p.size && ok; ++a) {
      for (int b = 0; b < p.size && ok; ++b) {
        if (p.leq(a, b)) ok = q.leq(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]);
      }
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < f.size() && f[k] == q.size - 1) f[k++] = 0;
    if (k == f.size()) break;
    ++f[k];
  }
  return count;
}

// Number of upward closed subsets of p, by scanning all subsets.
inline std::uint64_t count_upsets(const Poset& p) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size); ++mask) {
    bool closed = true;
    for (int a = 0; a < p.size && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < p.size && closed; ++b) {
        if (p.leq(a, b) && !(mask >> b & 1)) closed = false;
      }
    }
    if (closed) ++count;
  }
  return count;
}

// All n-simplices of y as (base, degeneracy values), built from
// monotone_sequences rather than the library's surjection ranking.
inline std::vector<std::pair<SimplexId, std::vector<int>>> dense_level(
    const FiniteSimplicialSet& y, int n) {
  std::vector<std::pair<SimplexId, std::vector<int>>> out;
  for (SimplexId b = 0; b < y.size(); ++b) {
    const int m = y.dim(b);
    if (m > n) continue;
    for (auto& v : monotone_sequences(n, m)) {
      bool onto = v.front() == 0 && v.back() == m;
      for (std::size_t i = 1; i < v.size(); ++i) onto &= v[i] - v[i - 1] <= 1;
      if (onto) out.emplace_back(b, v);
    }
  }
  return out;
}

// Face d_i of (base, values) in y, computed by walking stored faces of the
// base one index at a time.
inline std::pair<SimplexId, std::vector<int>> dense_face(const FiniteSimplicialSet& y,
                                                         SimplexId base,
                                                         std::vector<int> deg, int i) {
  deg.erase(deg.begin() + i);
  // Now deg : [n-1] -> [m] may miss values; drop missing ones through faces.
  while (true) {
    const int m = y.dim(base);
    int missing = -1;
    for (int v = m; v >= 0 && missing < 0; --v) {
      bool hit = false;
      for (int d : deg) hit |= d == v;
      if (!hit) missing = v;
    }
    if (missing < 0) return {base, deg};
    const SimplexRef& f = y.faces(base)[static_cast<std::size_t>(missing)];
    // f = (fb, fdeg) with fdeg : [m-1] ->> [dim fb]; reindex deg through it.
    std::vector<int> next;
    for (int d : deg) next.push_back(f.deg(d < missing ? d : d - 1));
    base = f.base;
    deg = std::move(next);
  }
}

// Number of simplicial maps x -> y: every choice of an equal-dimensional
// simplex of y for every nondegenerate simplex of x, kept when all faces
// agree.
inline std::uint64_t count_maps_dense(const FiniteSimplicialSet& x,
                                      const FiniteSimplicialSet& y) {
  using Simplex = std::pair<SimplexId, std::vector<int>>;
  std::vector<std::vector<Simplex>> choices;
  for (SimplexId id = 0; id < x.size(); ++id) choices.push_back(dense_level(y, x.dim(id)));
  for (const auto& c : choices) {
    if (c.empty()) return 0;
  }
  std::vector<std::size_t> pick(x.size(), 0);
  // Image of x's simplex s = (b, eta) under the current pick.
  auto image = [&](const SimplexRef& s) {
    const Simplex& yb = choices[s.base][pick[s.base]];
    std::vector<int> v;
    for (int t = 0; t <= s.dim(); ++t) v.push_back(yb.second[static_cast<std::size_t>(s.deg(t))]);
    return Simplex{yb.first, v};
  };
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (SimplexId id = 0; id < x.size() && ok; ++id) {
      const int m = x.dim(id);
      for (int i = 0; i < m + 1 && m > 0 && ok; ++i) {
        const Simplex& y_x = choices[id][pick[id]];
        const auto lhs = dense_face(y, y_x.first, y_x.second, i);
        const auto rhs = image(x.faces(id)[static_cast<std::size_t>(i)]);
        // rhs may itself be non-canonical only in its degeneracy, which is
        // already a value list over rhs.first; lhs is canonical too.
        ok = lhs == rhs;
      }
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < pick.size() && pick[k] + 1 == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
    ++pick[k];
  }
  return count;
}

}  // namespace cylpath::oracle

#endif  // CYLPATH_TESTS_ORACLES_HPP_
