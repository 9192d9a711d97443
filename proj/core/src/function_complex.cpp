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

#include "cylpath/function_complex.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "cylpath/enumerate.hpp"
#include "cylpath/errors.hpp"

namespace cylpath {

std::size_t AssignmentHash::operator()(const std::vector<SimplexRef>& a) const {
  std::size_t h = a.size();
  SimplexRefHash rh;
  for (const auto& s : a) h = (h * 1000003u) ^ rh(s);
  return h;
}

FunctionComplexPtr FunctionComplex::materialize(const SSetPtr& x, const SSetPtr& y, int level,
                                                const std::shared_ptr<ProductCache>& cache) {
  if (level < 0) throw std::invalid_argument("negative function complex level");
  return build(x, y, level, false, cache);
}

FunctionComplexPtr FunctionComplex::materialize_exact(const SSetPtr& x, const SSetPtr& y,
                                                      const std::shared_ptr<ProductCache>& cache) {
  if (!is_poset_nerve(*y)) {
    throw std::invalid_argument("exact function complex needs a poset nerve as target, " +
                                y->name() + " is not one");
  }
  return build(x, y, 0, true, cache);
}

FunctionComplexPtr FunctionComplex::build(const SSetPtr& x, const SSetPtr& y, int level,
                                          bool exact,
                                          const std::shared_ptr<ProductCache>& cache) {
  if (!x->is_exact()) {
    throw std::invalid_argument("function complex out of the truncated object " + x->name());
  }
  const std::string name = "F(" + x->name() + "," + y->name() + ")";
  struct Raw {
    std::vector<SimplicialMap> maps;
    std::unordered_map<std::vector<SimplexRef>, std::uint32_t, AssignmentHash> index;
    std::vector<std::optional<SimplexRef>> ref;
  };
  std::vector<Raw> raw;
  SimplicialSetBuilder builder(name, exact ? kExact : level);

  for (int n = 0; exact || n <= level; ++n) {
    const SSetPtr p = cache->cylinder(x, n);
    if (p->top_dim() > y->trunc_dim()) {
      throw TruncationError("function complex " + name + " at level " + std::to_string(n),
                            p->top_dim(), y->trunc_dim());
    }
    Raw r;
    r.maps = enumerate_maps(p, y);
    r.ref.resize(r.maps.size());
    for (std::uint32_t k = 0; k < r.maps.size(); ++k) r.index.emplace(r.maps[k].assign, k);

    if (n > 0) {
      const Raw& prev = raw.back();
      for (int j = 0; j < n; ++j) {
        const auto sigma = MonotoneMap::codegeneracy(n - 1, j);
        const SimplicialMap& restrict = cache->restriction(x, sigma);
        for (std::uint32_t k = 0; k < prev.maps.size(); ++k) {
          const auto h = compose(prev.maps[k], restrict);
          const std::uint32_t idx = r.index.at(h.assign);
          const SimplexRef& below = *prev.ref[k];
          const SimplexRef s{below.base, compose(below.deg, sigma)};
          if (r.ref[idx] && *r.ref[idx] != s) {
            throw std::logic_error("degeneracy images disagree in " + name);
          }
          r.ref[idx] = s;
        }
      }
    }
    std::size_t fresh = 0;
    for (std::uint32_t k = 0; k < r.maps.size(); ++k) {
      if (r.ref[k]) continue;
      const SimplexId id =
          builder.add_simplex(n, std::to_string(n) + "." + std::to_string(fresh++));
      r.ref[k] = SimplexRef{id, MonotoneMap::identity(n)};
      for (int i = 0; n > 0 && i <= n; ++i) {
        const auto h = compose(r.maps[k], cache->restriction(x, MonotoneMap::coface(n, i)));
        const Raw& prev = raw.back();
        builder.set_face(id, i, *prev.ref[prev.index.at(h.assign)]);
      }
    }
    raw.push_back(std::move(r));
    if (exact && fresh == 0) break;
  }

  auto fc = std::shared_ptr<FunctionComplex>(new FunctionComplex());
  fc->x_ = x;
  fc->y_ = y;
  fc->cache_ = cache;
  fc->carrier_ = builder.build();
  fc->levels_.resize(raw.size());
  for (std::size_t n = 0; n < raw.size(); ++n) {
    Raw& r = raw[n];
    Level& lv = fc->levels_[n];
    if (r.maps.size() != fc->carrier_->level_size(static_cast<int>(n))) {
      throw std::logic_error("level " + std::to_string(n) + " of " + name +
                             " does not match its canonical forms");
    }
    lv.maps.resize(r.maps.size());
    for (std::uint32_t k = 0; k < r.maps.size(); ++k) {
      const std::uint64_t dense = fc->carrier_->index_of(*r.ref[k]);
      lv.index.emplace(r.maps[k].assign, dense);
      lv.maps[dense] = std::move(r.maps[k]);
    }
  }
  return fc;
}

const std::vector<SimplicialMap>& FunctionComplex::maps(int n) const {
  if (n < 0 || n > level()) {
    throw TruncationError("level of " + carrier_->name(), n, level());
  }
  return levels_[static_cast<std::size_t>(n)].maps;
}

SimplicialMap FunctionComplex::underlying(const SimplexRef& s) const {
  const int k = carrier_->dim(s.base);
  const SimplicialMap& base =
      levels_[static_cast<std::size_t>(k)].maps[carrier_->index_of(carrier_->nondegenerate(s.base))];
  if (s.deg.is_identity()) return base;
  return compose(base, cache_->restriction(x_, s.deg));
}

std::optional<SimplexRef> FunctionComplex::find(const SimplicialMap& f) const {
  if (f.cod != y_) return std::nullopt;
  const auto* data = f.dom->product_data();
  if (!data || data->left != x_ || data->right->top_dim() < 0) return std::nullopt;
  const int n = data->right->top_dim();
  if (f.dom != cylinder(n)) return std::nullopt;
  if (n <= level()) {
    const Level& lv = levels_[static_cast<std::size_t>(n)];
    auto it = lv.index.find(f.assign);
    if (it == lv.index.end()) return std::nullopt;
    return carrier_->simplex_at(n, it->second);
  }
  // Above the materialized level: f must be s_j of its own j-th face.
  for (int j = 0; j < n; ++j) {
    const auto h = compose(f, cache_->restriction(x_, MonotoneMap::coface(n, j)));
    const auto sigma = MonotoneMap::codegeneracy(n - 1, j);
    if (!same_map(compose(h, cache_->restriction(x_, sigma)), f)) continue;
    if (auto r = find(h)) return SimplexRef{r->base, compose(r->deg, sigma)};
  }
  return std::nullopt;
}

SimplexRef FunctionComplex::element(const SimplicialMap& f) const {
  if (f.cod != y_) {
    throw DomainMismatch("map into " + f.cod->name() + " is not a simplex of " +
                         carrier_->name());
  }
  const auto* data = f.dom->product_data();
  if (!data || data->left != x_ || f.dom != cylinder(data->right->top_dim())) {
    throw DomainMismatch("map out of " + f.dom->name() + " is not a simplex of " +
                         carrier_->name());
  }
  if (auto r = find(f)) return *r;
  const int n = data->right->top_dim();
  if (n > level() && !carrier_->is_exact()) {
    throw TruncationError("nondegenerate simplex of " + carrier_->name(), n, level());
  }
  throw std::logic_error("map " + format_map(f) + " has no simplex in " + carrier_->name());
}

SimplexRef FunctionComplex::apply(const SimplexRef& s, const SimplexRef& p) const {
  const int n = s.dim();
  const int k = carrier_->dim(s.base);
  const SSetPtr pn = cylinder(n);
  const SimplexRef t = right_of(*pn, p);
  const SimplexRef t2 =
      standard_simplex_ref(compose(s.deg, standard_simplex_operator(n, t)));
  const SSetPtr pk = cylinder(k);
  const SimplexRef q = pair(*pk, left_of(*pn, p), t2);
  const SimplicialMap& base =
      levels_[static_cast<std::size_t>(k)].maps[carrier_->index_of(carrier_->nondegenerate(s.base))];
  return base(q);
}

SimplexRef FunctionComplex::evaluate(const SimplexRef& s, const SimplexRef& x) const {
  const int k = carrier_->dim(s.base);
  const SimplexRef q = pair(*cylinder(k), x, standard_simplex_ref(s.deg));
  const SimplicialMap& base =
      levels_[static_cast<std::size_t>(k)].maps[carrier_->index_of(carrier_->nondegenerate(s.base))];
  return base(q);
}

bool is_poset_nerve(const FiniteSimplicialSet& y) {
  if (!y.is_exact()) return false;
  const std::size_t v = y.count(0);
  std::vector<std::vector<char>> rel(v, std::vector<char>(v, 0));
  for (SimplexId e = y.first(1); e < y.first(2); ++e) {
    const SimplexRef s = y.nondegenerate(e);
    const SimplexId a = vertex_of(y, s, 0);
    const SimplexId b = vertex_of(y, s, 1);
    if (a == b || rel[a][b]) return false;
    rel[a][b] = 1;
  }
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = 0; b < v; ++b) {
      if (rel[a][b] && rel[b][a]) return false;
      for (std::size_t c = 0; c < v && rel[a][b]; ++c) {
        if (rel[b][c] && !rel[a][c]) return false;
      }
    }
  }
  std::set<std::vector<SimplexId>> chains;
  for (SimplexId id = 0; id < y.size(); ++id) {
    const SimplexRef s = y.nondegenerate(id);
    std::vector<SimplexId> c;
    for (int i = 0; i <= y.dim(id); ++i) c.push_back(vertex_of(y, s, i));
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (!rel[c[i - 1]][c[i]]) return false;
    }
    if (!chains.insert(c).second) return false;
  }
  // Number of strict chains starting at each vertex.
  std::vector<std::uint64_t> from(v, 0);
  std::vector<char> done(v, 0);
  std::function<std::uint64_t(std::size_t)> count = [&](std::size_t a) -> std::uint64_t {
    if (done[a]) return from[a];
    std::uint64_t total = 1;
    for (std::size_t b = 0; b < v; ++b) {
      if (rel[a][b]) total += count(b);
    }
    done[a] = 1;
    return from[a] = total;
  };
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < v; ++a) total += count(a);
  return total == y.size();
}

}  // namespace cylpath
