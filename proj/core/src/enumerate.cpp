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

#include "cylpath/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cylpath/errors.hpp"

namespace cylpath {

namespace {

// Y_m in dense order, with the dense index of every face and the simplices
// grouped by their d_0.
struct Level {
  std::vector<SimplexRef> simplices;
  std::vector<std::uint64_t> face_index;  // (m + 1) entries per simplex
  std::vector<std::vector<std::uint32_t>> by_d0;
};

Level make_level(const FiniteSimplicialSet& y, int m) {
  Level lv;
  lv.simplices = y.level(m);
  if (m == 0) return lv;
  const auto width = static_cast<std::size_t>(m + 1);
  lv.face_index.reserve(lv.simplices.size() * width);
  lv.by_d0.resize(y.level_size(m - 1));
  for (std::uint32_t k = 0; k < lv.simplices.size(); ++k) {
    for (int i = 0; i <= m; ++i) {
      lv.face_index.push_back(y.index_of(face(y, lv.simplices[k], i)));
    }
    lv.by_d0[lv.face_index[k * width]].push_back(k);
  }
  return lv;
}

class Search {
 public:
  Search(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y,
         const std::function<bool(const std::vector<SimplexRef>&)>& visit)
      : x_(x), y_(y), visit_(visit) {
    for (int m = 0; m <= x.top_dim(); ++m) levels_.push_back(make_level(y, m));
    assign_.resize(x.size());
    index_.resize(x.size());
    wanted_.resize(x.size());
    // Each simplex right after the last vertex it contains, so that a
    // partial vertex assignment is pruned as soon as it fails on a face.
    std::vector<SimplexId> last(x.size());
    for (SimplexId id = 0; id < x.size(); ++id) {
      last[id] = id;
      if (x.dim(id) == 0) continue;
      last[id] = 0;
      for (const auto& f : x.faces(id)) last[id] = std::max(last[id], last[f.base]);
    }
    order_.resize(x.size());
    std::iota(order_.begin(), order_.end(), SimplexId{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](SimplexId a, SimplexId b) { return last[a] < last[b]; });
  }

  void run() { step(0); }

 private:
  std::uint64_t image_index(const SimplexRef& s) const {
    if (s.deg.is_identity()) return index_[s.base];
    const SimplexRef& b = assign_[s.base];
    return y_.index_of({b.base, compose(b.deg, s.deg)});
  }

  bool step(std::size_t pos) {
    if (pos == order_.size()) return visit_(assign_);
    const SimplexId id = order_[pos];
    const int m = x_.dim(id);
    const Level& lv = levels_[static_cast<std::size_t>(m)];
    if (m == 0) {
      for (std::uint32_t k = 0; k < lv.simplices.size(); ++k) {
        assign_[id] = lv.simplices[k];
        index_[id] = k;
        if (!step(pos + 1)) return false;
      }
      return true;
    }
    const auto fs = x_.faces(id);
    const auto width = static_cast<std::size_t>(m + 1);
    std::vector<std::uint64_t>& wanted = wanted_[pos];
    wanted.resize(width);
    for (std::size_t i = 0; i < width; ++i) wanted[i] = image_index(fs[i]);
    for (std::uint32_t k : lv.by_d0[wanted[0]]) {
      bool ok = true;
      for (std::size_t i = 1; i < width && ok; ++i) {
        ok = lv.face_index[k * width + i] == wanted[i];
      }
      if (!ok) continue;
      assign_[id] = lv.simplices[k];
      index_[id] = k;
      if (!step(pos + 1)) return false;
    }
    return true;
  }

  const FiniteSimplicialSet& x_;
  const FiniteSimplicialSet& y_;
  const std::function<bool(const std::vector<SimplexRef>&)>& visit_;
  std::vector<Level> levels_;
  std::vector<SimplexRef> assign_;
  std::vector<SimplexId> order_;
  // Dense index of assign_[id] in its level.
  std::vector<std::uint64_t> index_;
  // Per search depth, the dense indices the faces must have.
  std::vector<std::vector<std::uint64_t>> wanted_;
};

}  // namespace

void for_each_map(const SSetPtr& x, const SSetPtr& y,
                  const std::function<bool(const std::vector<SimplexRef>&)>& visit,
                  int up_to) {
  if (x->top_dim() > up_to) {
    throw std::invalid_argument(x->name() + " has nondegenerate simplices above dimension " +
                                std::to_string(up_to));
  }
  if (x->top_dim() > y->trunc_dim()) {
    throw TruncationError("enumerating maps " + x->name() + " -> " + y->name(),
                          x->top_dim(), y->trunc_dim());
  }
  Search(*x, *y, visit).run();
}

std::vector<SimplicialMap> enumerate_maps(const SSetPtr& x, const SSetPtr& y, int up_to) {
  std::vector<std::pair<std::vector<std::uint64_t>, SimplicialMap>> found;
  const int bound = x->is_exact() ? kExact : x->trunc_dim();
  for_each_map(
      x, y,
      [&](const std::vector<SimplexRef>& a) {
        std::vector<std::uint64_t> key;
        key.reserve(a.size());
        for (const auto& s : a) key.push_back(y->index_of(s));
        found.emplace_back(std::move(key), SimplicialMap{x, y, bound, a});
        return true;
      },
      up_to);
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SimplicialMap> out;
  out.reserve(found.size());
  for (auto& entry : found) out.push_back(std::move(entry.second));
  return out;
}

std::uint64_t count_maps(const SSetPtr& x, const SSetPtr& y, int up_to) {
  std::uint64_t n = 0;
  for_each_map(
      x, y,
      [&](const std::vector<SimplexRef>&) {
        ++n;
        return true;
      },
      up_to);
  return n;
}

}  // namespace cylpath
