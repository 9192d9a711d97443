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

#include "cylpath/simplicial_map.hpp"

#include <algorithm>
#include <sstream>

#include "cylpath/errors.hpp"

namespace cylpath {

SimplexRef SimplicialMap::operator()(const SimplexRef& s) const {
  if (s.base >= assign.size()) {
    throw TruncationError("map " + dom->name() + " -> " + cod->name() +
                              " is not known on " + dom->label(s.base),
                          dom->dim(s.base), bound);
  }
  const SimplexRef& y = assign[s.base];
  if (s.deg.is_identity()) return y;
  return {y.base, compose(y.deg, s.deg)};
}

std::size_t SimplicialMapHash::operator()(const SimplicialMap& f) const {
  std::size_t h = f.assign.size();
  SimplexRefHash rh;
  for (const auto& s : f.assign) h = h * 1000003u ^ rh(s);
  return h;
}

namespace {

std::size_t known_count(const FiniteSimplicialSet& dom, int bound) {
  return bound >= dom.top_dim() ? dom.size() : dom.count_up_to(bound);
}

}  // namespace

SimplicialMap make_map(SSetPtr dom, SSetPtr cod,
                       const std::function<SimplexRef(SimplexId)>& value, int bound) {
  if (bound == kDomainBound) bound = dom->trunc_dim();
  SimplicialMap f{std::move(dom), std::move(cod), bound, {}};
  const std::size_t n = known_count(*f.dom, bound);
  f.assign.reserve(n);
  for (SimplexId id = 0; id < n; ++id) f.assign.push_back(value(id));
  return f;
}

SimplicialMap identity_map(const SSetPtr& x) {
  return make_map(x, x, [&](SimplexId id) { return x->nondegenerate(id); });
}

SimplicialMap constant_map(const SSetPtr& x, const SSetPtr& y, SimplexId v) {
  if (v >= y->size() || y->dim(v) != 0) {
    throw std::invalid_argument("constant_map needs a vertex of " + y->name());
  }
  return make_map(x, y, [&](SimplexId id) {
    return SimplexRef{v, MonotoneMap::collapse(x->dim(id))};
  });
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.cod != g.dom) {
    throw DomainMismatch("cannot compose " + f.dom->name() + " -> " + f.cod->name() +
                         " with " + g.dom->name() + " -> " + g.cod->name());
  }
  const int bound = std::min(f.bound, g.bound);
  SimplicialMap h{f.dom, g.cod, bound, {}};
  const std::size_t n = known_count(*f.dom, bound);
  h.assign.reserve(n);
  for (SimplexId id = 0; id < n; ++id) h.assign.push_back(g(f.assign[id]));
  return h;
}

SimplicialMap yoneda(const SSetPtr& k_obj, const SimplexRef& k) {
  const int n = k.dim();
  k_obj->require_level(n, "yoneda");
  const auto delta = standard_simplex(n);
  return make_map(delta, k_obj, [&](SimplexId id) {
    return act(*k_obj, k, standard_simplex_injection(n, id));
  });
}

std::string format_simplex(const FiniteSimplicialSet& x, const SimplexRef& s) {
  if (s.base >= x.size()) return "<invalid>";
  if (s.is_nondegenerate()) return x.label(s.base);
  return x.label(s.base) + "@" + to_string(s.deg);
}

std::string format_map(const SimplicialMap& f) {
  std::ostringstream out;
  out << '{';
  for (SimplexId id = 0; id < f.assign.size(); ++id) {
    if (id > 0) out << ", ";
    out << f.dom->label(id) << "->" << format_simplex(*f.cod, f.assign[id]);
  }
  out << '}';
  return out.str();
}

std::optional<std::string> maps_equal(const SimplicialMap& f, const SimplicialMap& g,
                                      int level) {
  if (f.dom != g.dom) {
    return "domains differ: " + f.dom->name() + " vs " + g.dom->name();
  }
  if (f.cod != g.cod) {
    return "codomains differ: " + f.cod->name() + " vs " + g.cod->name();
  }
  const std::size_t n =
      std::min({f.assign.size(), g.assign.size(),
                known_count(*f.dom, std::min(level, std::max(f.dom->top_dim(), 0)))});
  for (SimplexId id = 0; id < n; ++id) {
    if (f.assign[id] != g.assign[id]) {
      return "at " + f.dom->label(id) + " (dim " + std::to_string(f.dom->dim(id)) +
             "): " + format_simplex(*f.cod, f.assign[id]) + " vs " +
             format_simplex(*g.cod, g.assign[id]);
    }
  }
  return std::nullopt;
}

VerificationReport validate_map(const SimplicialMap& f) {
  VerificationReport report("validate_map");
  const std::string inst = f.dom->name() + " -> " + f.cod->name();
  std::optional<std::string> shape;
  if (f.assign.size() != known_count(*f.dom, f.bound)) {
    shape = "expected " + std::to_string(known_count(*f.dom, f.bound)) +
            " assignments, found " + std::to_string(f.assign.size());
  }
  for (SimplexId id = 0; id < f.assign.size() && !shape; ++id) {
    const auto& y = f.assign[id];
    if (y.base >= f.cod->size() || y.dim() != f.dom->dim(id) ||
        y.deg.target_dim() != f.cod->dim(y.base) || !y.deg.is_surjective()) {
      shape = f.dom->label(id) + " is sent to an ill-formed simplex";
    }
  }
  report.check("map.structure", inst, shape);
  if (shape) return report;

  std::optional<std::string> faces;
  for (SimplexId id = 0; id < f.assign.size() && !faces; ++id) {
    const int m = f.dom->dim(id);
    if (m == 0) continue;
    const auto fs = f.dom->faces(id);
    for (int i = 0; i <= m; ++i) {
      const SimplexRef lhs = f(fs[static_cast<std::size_t>(i)]);
      const SimplexRef rhs = face(*f.cod, f.assign[id], i);
      if (lhs != rhs) {
        faces = "d_" + std::to_string(i) + " of " + f.dom->label(id) + ": f(d x) = " +
                format_simplex(*f.cod, lhs) + " but d f(x) = " +
                format_simplex(*f.cod, rhs);
        break;
      }
    }
  }
  report.check("map.face-compatibility", inst, faces);
  return report;
}

std::optional<SimplicialMap> inverse_of(const SimplicialMap& f) {
  const int top = std::max(f.dom->top_dim(), f.cod->top_dim());
  const int level = std::min(f.bound, top);
  if (f.assign.size() != known_count(*f.dom, level)) return std::nullopt;
  const std::size_t cod_n = known_count(*f.cod, level);
  if (cod_n != f.assign.size()) return std::nullopt;
  std::vector<std::optional<SimplexRef>> inv(cod_n);
  for (SimplexId id = 0; id < f.assign.size(); ++id) {
    const auto& y = f.assign[id];
    if (!y.is_nondegenerate() || y.base >= cod_n || inv[y.base]) return std::nullopt;
    inv[y.base] = f.dom->nondegenerate(id);
  }
  return make_map(f.cod, f.dom, [&](SimplexId id) { return *inv[id]; },
                  f.bound);
}

Relabelling relabel(const SSetPtr& x, std::string name, const std::string& prefix) {
  SimplicialSetBuilder b(std::move(name), x->trunc_dim());
  for (SimplexId id = 0; id < x->size(); ++id) b.add_simplex(x->dim(id), prefix + x->label(id));
  for (SimplexId id = 0; id < x->size(); ++id) {
    const auto fs = x->faces(id);
    b.set_faces(id, {fs.begin(), fs.end()});
  }
  auto copy = b.build();
  auto to = make_map(x, copy, [&](SimplexId id) { return copy->nondegenerate(id); });
  auto from = make_map(copy, x, [&](SimplexId id) { return x->nondegenerate(id); });
  return {copy, std::move(to), std::move(from)};
}

}  // namespace cylpath
