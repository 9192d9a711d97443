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

#include "cylpath/simplicial_set.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cylpath/errors.hpp"

namespace cylpath {

// ---------------------------------------------------------------------------
// FiniteSimplicialSet

std::size_t FiniteSimplicialSet::count(int d) const {
  if (d < 0 || d > top_dim()) return 0;
  return first_[static_cast<std::size_t>(d) + 1] - first_[static_cast<std::size_t>(d)];
}

SimplexId FiniteSimplicialSet::first(int d) const {
  if (d < 0) return 0;
  if (d > top_dim()) return static_cast<SimplexId>(size());
  return first_[static_cast<std::size_t>(d)];
}

std::size_t FiniteSimplicialSet::count_up_to(int d) const {
  if (d < 0) return 0;
  return first(d + 1);
}

std::optional<SimplexId> FiniteSimplicialSet::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::span<const SimplexRef> FiniteSimplicialSet::faces(SimplexId id) const {
  const auto b = face_offset_[id];
  const auto e = face_offset_[id + 1];
  return {faces_.data() + b, e - b};
}

void FiniteSimplicialSet::require_level(int n, std::string_view context) const {
  if (n > trunc_dim_) {
    throw TruncationError(std::string(context) + ": " + name_ +
                              " is truncated at dimension " +
                              std::to_string(trunc_dim_),
                          n, trunc_dim_);
  }
}

std::uint64_t FiniteSimplicialSet::level_size(int n) const {
  require_level(n, "level_size");
  std::uint64_t total = 0;
  for (int d = 0; d <= std::min(n, top_dim()); ++d) total += count(d) * binomial(n, d);
  return total;
}

std::uint64_t FiniteSimplicialSet::index_of(const SimplexRef& s) const {
  const int n = s.dim();
  const int d = dims_[s.base];
  std::uint64_t offset = 0;
  for (int e = 0; e < d; ++e) offset += count(e) * binomial(n, e);
  offset += static_cast<std::uint64_t>(s.base - first(d)) * binomial(n, d);
  return offset + surjection_rank(s.deg);
}

SimplexRef FiniteSimplicialSet::simplex_at(int n, std::uint64_t index) const {
  for (int d = 0; d <= std::min(n, top_dim()); ++d) {
    const std::uint64_t per = binomial(n, d);
    const std::uint64_t block = count(d) * per;
    if (index < block) {
      const auto base = static_cast<SimplexId>(first(d) + index / per);
      return {base, surjection_unrank(n, d, index % per)};
    }
    index -= block;
  }
  throw std::out_of_range("simplex index out of range in " + name_);
}

std::vector<SimplexRef> FiniteSimplicialSet::level(int n) const {
  require_level(n, "level");
  std::vector<SimplexRef> out;
  out.reserve(level_size(n));
  for (int d = 0; d <= std::min(n, top_dim()); ++d) {
    const auto surj = surjections(n, d);
    for (SimplexId b = first(d); b < first(d + 1); ++b) {
      for (const auto& s : surj) out.push_back({b, s});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Builder

SimplicialSetBuilder::SimplicialSetBuilder(std::string name, int trunc_dim)
    : name_(std::move(name)), trunc_dim_(trunc_dim) {
  if (trunc_dim < 0) throw std::invalid_argument("negative truncation");
}

SimplexId SimplicialSetBuilder::add_simplex(int dim, std::string label) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("bad simplex dimension");
  if (dim > trunc_dim_) {
    throw std::invalid_argument("simplex " + label + " of dimension " +
                                std::to_string(dim) + " exceeds truncation " +
                                std::to_string(trunc_dim_));
  }
  dims_.push_back(dim);
  labels_.push_back(std::move(label));
  faces_.emplace_back(static_cast<std::size_t>(dim > 0 ? dim + 1 : 0));
  return static_cast<SimplexId>(dims_.size() - 1);
}

void SimplicialSetBuilder::set_face(SimplexId simplex, int i, SimplexRef face) {
  if (simplex >= dims_.size()) throw std::invalid_argument("unknown simplex id");
  auto& slots = faces_[simplex];
  if (i < 0 || static_cast<std::size_t>(i) >= slots.size()) {
    throw std::invalid_argument("face index " + std::to_string(i) +
                                " out of range for " + labels_[simplex]);
  }
  slots[static_cast<std::size_t>(i)] = face;
}

void SimplicialSetBuilder::set_faces(SimplexId simplex, std::vector<SimplexRef> faces) {
  for (std::size_t i = 0; i < faces.size(); ++i) {
    set_face(simplex, static_cast<int>(i), faces[i]);
  }
}

SimplexId SimplicialSetBuilder::final_id(SimplexId provisional) const {
  if (remap_.empty()) throw std::logic_error("final_id before build()");
  return remap_.at(provisional);
}

SSetPtr SimplicialSetBuilder::build() {
  const std::size_t n = dims_.size();
  std::vector<SimplexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](SimplexId a, SimplexId b) { return dims_[a] < dims_[b]; });
  remap_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) remap_[order[k]] = static_cast<SimplexId>(k);

  auto x = std::shared_ptr<FiniteSimplicialSet>(new FiniteSimplicialSet());
  x->name_ = name_;
  x->trunc_dim_ = trunc_dim_;
  x->dims_.reserve(n);
  x->labels_.reserve(n);
  x->face_offset_.reserve(n + 1);
  x->face_offset_.push_back(0);
  for (std::size_t k = 0; k < n; ++k) {
    const SimplexId old = order[k];
    const int d = dims_[old];
    x->dims_.push_back(d);
    x->labels_.push_back(labels_[old]);
    if (!x->by_label_.emplace(labels_[old], static_cast<SimplexId>(k)).second) {
      throw std::invalid_argument("duplicate simplex label " + labels_[old]);
    }
    for (std::size_t i = 0; i < faces_[old].size(); ++i) {
      const auto& f = faces_[old][i];
      if (!f) {
        throw std::invalid_argument("simplex " + labels_[old] + " is missing face " +
                                    std::to_string(i));
      }
      if (f->base >= n) {
        throw std::invalid_argument("face " + std::to_string(i) + " of " +
                                    labels_[old] + " names an unknown simplex");
      }
      const int target_dim = dims_[f->base];
      if (f->deg.source_dim() != d - 1 || f->deg.target_dim() != target_dim ||
          !f->deg.is_surjective()) {
        throw std::invalid_argument(
            "face " + std::to_string(i) + " of " + labels_[old] +
            " has a degeneracy that is not a surjection [" + std::to_string(d - 1) +
            "] ->> [" + std::to_string(target_dim) + "]");
      }
      x->faces_.push_back({remap_[f->base], f->deg});
    }
    x->face_offset_.push_back(x->faces_.size());
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto d = static_cast<std::size_t>(x->dims_[k]);
    while (x->first_.size() <= d) x->first_.push_back(static_cast<SimplexId>(k));
  }
  x->first_.push_back(static_cast<SimplexId>(n));
  x->product_ = std::move(product_);
  return x;
}

// ---------------------------------------------------------------------------
// Operator action

namespace {

// Canonical form of b . iota for a nondegenerate b and an injection iota.
SimplexRef along_injection(const FiniteSimplicialSet& x, SimplexId b,
                           const MonotoneMap& iota) {
  if (iota.is_identity()) return x.nondegenerate(b);
  const int m = iota.target_dim();
  // Largest index of [m] missed by iota.
  int missing = m;
  for (int j = iota.source_dim(); j >= 0 && iota(j) == missing; --j) --missing;
  // iota = delta_missing . rest, and sigma_{missing-1} (sigma_0 when
  // missing = 0) recovers rest from iota.
  const MonotoneMap rest =
      compose(MonotoneMap::codegeneracy(m - 1, missing > 0 ? missing - 1 : 0), iota);
  const SimplexRef& f = x.faces(b)[static_cast<std::size_t>(missing)];
  return act(x, f, rest);
}

}  // namespace

SimplexRef act(const FiniteSimplicialSet& x, const SimplexRef& s,
               const MonotoneMap& theta) {
  const auto [eta, iota] = factor_monotone(compose(s.deg, theta));
  const SimplexRef r = along_injection(x, s.base, iota);
  return {r.base, compose(r.deg, eta)};
}

SimplexRef face(const FiniteSimplicialSet& x, const SimplexRef& s, int i) {
  return act(x, s, MonotoneMap::coface(s.dim(), i));
}

SimplexRef degeneracy(const FiniteSimplicialSet& x, const SimplexRef& s, int j) {
  return act(x, s, MonotoneMap::codegeneracy(s.dim(), j));
}

SimplexId vertex_of(const FiniteSimplicialSet& x, const SimplexRef& s, int v) {
  return act(x, s, MonotoneMap::vertex(s.dim(), v)).base;
}

VerificationReport validate_sset(const FiniteSimplicialSet& x) {
  VerificationReport report("validate_sset");
  const std::string inst = x.name();
  std::optional<std::string> structural;
  std::optional<std::string> identity;
  for (SimplexId id = 0; id < x.size() && !structural; ++id) {
    const int n = x.dim(id);
    if (n > x.trunc_dim()) {
      structural = x.label(id) + " lies above the truncation";
      break;
    }
    const auto fs = x.faces(id);
    if (static_cast<int>(fs.size()) != (n > 0 ? n + 1 : 0)) {
      structural = x.label(id) + " has " + std::to_string(fs.size()) + " faces";
      break;
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto& f = fs[i];
      if (f.base >= x.size() || f.dim() != n - 1 ||
          f.deg.target_dim() != x.dim(f.base) || !f.deg.is_surjective()) {
        structural = "face " + std::to_string(i) + " of " + x.label(id) +
                     " is not a canonical (n-1)-simplex";
        break;
      }
    }
  }
  report.check("sset.structure", inst, structural);
  if (structural) return report;

  for (SimplexId id = 0; id < x.size() && !identity; ++id) {
    const int n = x.dim(id);
    if (n < 2) continue;
    const auto fs = x.faces(id);
    for (int j = 1; j <= n && !identity; ++j) {
      for (int i = 0; i < j; ++i) {
        const SimplexRef lhs = face(x, fs[static_cast<std::size_t>(j)], i);
        const SimplexRef rhs = face(x, fs[static_cast<std::size_t>(i)], j - 1);
        if (lhs != rhs) {
          std::ostringstream w;
          w << "simplex " << x.label(id) << " (i,j)=(" << i << "," << j
            << "): d_i d_j gives " << x.label(lhs.base) << "@" << to_string(lhs.deg)
            << ", d_{j-1} d_i gives " << x.label(rhs.base) << "@"
            << to_string(rhs.deg);
          identity = w.str();
          break;
        }
      }
    }
  }
  report.check("sset.face-identities", inst, identity);
  return report;
}

// ---------------------------------------------------------------------------
// Standard fixtures

namespace {

std::string vertex_label(const MonotoneMap& inj) {
  std::string s;
  const bool wide = inj.target_dim() >= 10;
  for (int i = 0; i <= inj.source_dim(); ++i) {
    if (wide && i > 0) s += '.';
    s += std::to_string(inj(i));
  }
  return s;
}

// The subobject of Delta[n] spanned by the injections accepted by `keep`,
// which must be closed under faces.
template <typename Keep>
SSetPtr sub_simplex(int n, std::string name, Keep keep) {
  SimplicialSetBuilder b(std::move(name));
  std::map<MonotoneMap, SimplexId> ids;
  for (int m = 0; m <= n; ++m) {
    for (const auto& inj : injections(m, n)) {
      if (!keep(inj)) continue;
      ids.emplace(inj, b.add_simplex(m, vertex_label(inj)));
    }
  }
  for (const auto& [inj, id] : ids) {
    const int m = inj.source_dim();
    if (m == 0) continue;
    for (int i = 0; i <= m; ++i) {
      const auto f = compose(inj, MonotoneMap::coface(m, i));
      auto it = ids.find(f);
      if (it == ids.end()) throw std::logic_error("subobject not closed under faces");
      b.set_face(id, i, {it->second, MonotoneMap::identity(m - 1)});
    }
  }
  return b.build();
}

}  // namespace

SSetPtr standard_simplex(int n) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("bad standard simplex dimension");
  static std::mutex mu;
  static std::map<int, SSetPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = sub_simplex(n, "delta" + std::to_string(n), [](const MonotoneMap&) { return true; });
  }
  return slot;
}

SimplexId standard_simplex_id(const MonotoneMap& inj) {
  if (!inj.is_injective()) throw std::invalid_argument("not an injection");
  const int m = inj.source_dim();
  const int n = inj.target_dim();
  std::uint64_t id = 0;
  for (int d = 0; d < m; ++d) id += binomial(n + 1, d + 1);
  // Lexicographic rank of the (m+1)-subset inj([m]) of {0..n}.
  int prev = -1;
  for (int i = 0; i <= m; ++i) {
    for (int v = prev + 1; v < inj(i); ++v) id += binomial(n - v, m - i);
    prev = inj(i);
  }
  return static_cast<SimplexId>(id);
}

SimplexRef standard_simplex_ref(const MonotoneMap& theta) {
  const auto [eta, iota] = factor_monotone(theta);
  return {standard_simplex_id(iota), eta};
}

MonotoneMap standard_simplex_injection(int n, SimplexId id) {
  static std::mutex mu;
  static std::map<int, std::vector<MonotoneMap>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& table = cache[n];
  if (table.empty()) {
    for (int m = 0; m <= n; ++m) {
      for (auto& inj : injections(m, n)) table.push_back(inj);
    }
  }
  return table.at(id);
}

MonotoneMap standard_simplex_operator(int n, const SimplexRef& s) {
  return compose(standard_simplex_injection(n, s.base), s.deg);
}

SSetPtr boundary_simplex(int n) {
  if (n < 1) throw std::invalid_argument("boundary of Delta[0] requested");
  return sub_simplex(n, "bdelta" + std::to_string(n),
                     [n](const MonotoneMap& inj) { return inj.source_dim() < n; });
}

SSetPtr horn(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("bad horn");
  const auto skipped = MonotoneMap::coface(n, k);
  return sub_simplex(n, "horn" + std::to_string(n) + "_" + std::to_string(k),
                     [&](const MonotoneMap& inj) {
                       return inj.source_dim() < n && inj != skipped;
                     });
}

SSetPtr disjoint_union(const SSetPtr& x, const SSetPtr& y, std::string name) {
  SimplicialSetBuilder b(std::move(name), std::min(x->trunc_dim(), y->trunc_dim()));
  const auto offset = static_cast<SimplexId>(x->size());
  for (SimplexId id = 0; id < x->size(); ++id) b.add_simplex(x->dim(id), "l." + x->label(id));
  for (SimplexId id = 0; id < y->size(); ++id) b.add_simplex(y->dim(id), "r." + y->label(id));
  for (SimplexId id = 0; id < x->size(); ++id) {
    const auto fs = x->faces(id);
    b.set_faces(id, {fs.begin(), fs.end()});
  }
  for (SimplexId id = 0; id < y->size(); ++id) {
    std::vector<SimplexRef> fs;
    for (const auto& f : y->faces(id)) fs.push_back({f.base + offset, f.deg});
    b.set_faces(id + offset, std::move(fs));
  }
  return b.build();
}

SSetPtr truncate(const SSetPtr& x, int trunc_dim) {
  if (trunc_dim > x->trunc_dim()) {
    throw TruncationError("cannot raise the truncation of " + x->name(), trunc_dim,
                          x->trunc_dim());
  }
  SimplicialSetBuilder b(x->name(), trunc_dim);
  const auto keep = x->count_up_to(trunc_dim);
  for (SimplexId id = 0; id < keep; ++id) b.add_simplex(x->dim(id), x->label(id));
  for (SimplexId id = 0; id < keep; ++id) {
    const auto fs = x->faces(id);
    b.set_faces(id, {fs.begin(), fs.end()});
  }
  return b.build();
}

SSetPtr with_swapped_faces(const SSetPtr& x, SimplexId id, int i, int j) {
  SimplicialSetBuilder b(x->name() + "~swap", x->trunc_dim());
  for (SimplexId k = 0; k < x->size(); ++k) b.add_simplex(x->dim(k), x->label(k));
  for (SimplexId k = 0; k < x->size(); ++k) {
    const auto fs = x->faces(k);
    std::vector<SimplexRef> faces(fs.begin(), fs.end());
    if (k == id) std::swap(faces.at(static_cast<std::size_t>(i)), faces.at(static_cast<std::size_t>(j)));
    b.set_faces(k, std::move(faces));
  }
  return b.build();
}

}  // namespace cylpath
