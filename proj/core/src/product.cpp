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

#include "cylpath/product.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

#include "cylpath/errors.hpp"

namespace cylpath {

namespace {

std::string factor_name(const std::string& n) {
  return n.find('*') == std::string::npos ? n : "(" + n + ")";
}

bool jointly_injective(const MonotoneMap& a, const MonotoneMap& b) {
  for (int t = 1; t <= a.source_dim(); ++t) {
    if (a(t) == a(t - 1) && b(t) == b(t - 1)) return false;
  }
  return true;
}

// Compresses repeated consecutive pairs: (a, c) = (a', c') . eta with
// (a', c') nondegenerate.
std::optional<SimplexRef> lookup_pair(const ProductData& data, const SimplexRef& a,
                                      const SimplexRef& c) {
  const int n = a.dim();
  std::array<int, kMaxDim + 1> eta{}, va{}, vc{};
  int k = 0;
  va[0] = a.deg(0);
  vc[0] = c.deg(0);
  for (int t = 1; t <= n; ++t) {
    if (a.deg(t) != a.deg(t - 1) || c.deg(t) != c.deg(t - 1)) {
      ++k;
      va[static_cast<std::size_t>(k)] = a.deg(t);
      vc[static_cast<std::size_t>(k)] = c.deg(t);
    }
    eta[static_cast<std::size_t>(t)] = k;
  }
  const auto count = static_cast<std::size_t>(k + 1);
  const ProductKey key{
      {a.base, MonotoneMap::unchecked(a.deg.target_dim(), std::span<const int>(va.data(), count))},
      {c.base, MonotoneMap::unchecked(c.deg.target_dim(), std::span<const int>(vc.data(), count))}};
  auto it = data.index.find(key);
  if (it == data.index.end()) return std::nullopt;
  return SimplexRef{it->second,
                    MonotoneMap::unchecked(k, std::span<const int>(eta.data(), static_cast<std::size_t>(n + 1)))};
}

}  // namespace

const ProductData& product_parts(const FiniteSimplicialSet& p) {
  const ProductData* data = p.product_data();
  if (!data) throw std::invalid_argument(p.name() + " is not a product object");
  return *data;
}

SSetPtr product(const SSetPtr& x, const SSetPtr& y, std::string name) {
  if (name.empty()) name = factor_name(x->name()) + "*" + factor_name(y->name());
  const int trunc = std::min(x->trunc_dim(), y->trunc_dim());
  const int top = std::min<long>(trunc, static_cast<long>(x->top_dim()) + y->top_dim());

  auto data = std::make_shared<ProductData>();
  data->left = x;
  data->right = y;
  SimplicialSetBuilder b(std::move(name), trunc);

  for (int n = 0; n <= top; ++n) {
    for (int p = std::max(0, n - y->top_dim()); p <= std::min(n, x->top_dim()); ++p) {
      const auto sa = surjections(n, p);
      for (SimplexId ba = x->first(p); ba < x->first(p + 1); ++ba) {
        for (int q = std::max(0, n - p); q <= std::min(n, y->top_dim()); ++q) {
          const auto sb = surjections(n, q);
          for (SimplexId bb = y->first(q); bb < y->first(q + 1); ++bb) {
            for (const auto& ea : sa) {
              for (const auto& eb : sb) {
                if (!jointly_injective(ea, eb)) continue;
                const SimplexRef a{ba, ea};
                const SimplexRef c{bb, eb};
                const SimplexId id = b.add_simplex(
                    n, "(" + format_simplex(*x, a) + "," + format_simplex(*y, c) + ")");
                data->left_part.push_back(a);
                data->right_part.push_back(c);
                data->index.emplace(ProductKey{a, c}, id);
              }
            }
          }
        }
      }
    }
  }
  // Simplices were added dimension by dimension, so provisional ids are
  // final and faces resolve against the partially built index.
  for (SimplexId id = 0; id < data->left_part.size(); ++id) {
    const SimplexRef& a = data->left_part[id];
    const SimplexRef& c = data->right_part[id];
    const int n = a.dim();
    for (int i = 0; n > 0 && i <= n; ++i) {
      b.set_face(id, i, *lookup_pair(*data, face(*x, a, i), face(*y, c, i)));
    }
  }
  b.attach(data);
  return b.build();
}

SimplexRef pair(const FiniteSimplicialSet& p, const SimplexRef& a, const SimplexRef& c) {
  if (c.dim() != a.dim()) {
    throw std::invalid_argument("pair of simplices of different dimensions in " + p.name());
  }
  if (auto r = lookup_pair(product_parts(p), a, c)) return *r;
  // The nondegenerate part has dimension at most that of a.
  if (a.dim() > p.trunc_dim()) throw TruncationError("pair in " + p.name(), a.dim(), p.trunc_dim());
  throw std::invalid_argument("pair: components are not simplices of the factors of " +
                              p.name());
}

SimplexRef left_of(const FiniteSimplicialSet& p, const SimplexRef& s) {
  const SimplexRef& a = product_parts(p).left_part[s.base];
  return {a.base, compose(a.deg, s.deg)};
}

SimplexRef right_of(const FiniteSimplicialSet& p, const SimplexRef& s) {
  const SimplexRef& c = product_parts(p).right_part[s.base];
  return {c.base, compose(c.deg, s.deg)};
}

SimplicialMap pr1(const SSetPtr& p) {
  const auto& data = product_parts(*p);
  return make_map(p, data.left, [&](SimplexId id) { return data.left_part[id]; });
}

SimplicialMap pr2(const SSetPtr& p) {
  const auto& data = product_parts(*p);
  return make_map(p, data.right, [&](SimplexId id) { return data.right_part[id]; });
}

SimplicialMap pairing(const SimplicialMap& f, const SimplicialMap& g, const SSetPtr& p) {
  const auto& data = product_parts(*p);
  if (f.dom != g.dom || f.cod != data.left || g.cod != data.right) {
    throw DomainMismatch("pairing into " + p->name() + " does not line up");
  }
  return make_map(f.dom, p, [&](SimplexId id) { return pair(*p, f.at(id), g.at(id)); },
                  std::min(f.bound, g.bound));
}

SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g,
                          const SSetPtr& dom, const SSetPtr& cod) {
  const auto& d = product_parts(*dom);
  const auto& c = product_parts(*cod);
  if (f.dom != d.left || g.dom != d.right || f.cod != c.left || g.cod != c.right) {
    throw DomainMismatch("product map " + dom->name() + " -> " + cod->name() +
                         " does not line up with its factors");
  }
  return make_map(
      dom, cod,
      [&](SimplexId id) { return pair(*cod, f(d.left_part[id]), g(d.right_part[id])); },
      std::min(f.bound, g.bound));
}

SimplicialMap diagonal(const SSetPtr& x, const SSetPtr& xx) {
  const auto& d = product_parts(*xx);
  if (d.left != x || d.right != x) throw DomainMismatch("diagonal target is not X*X");
  return make_map(x, xx, [&](SimplexId id) {
    const auto s = x->nondegenerate(id);
    return pair(*xx, s, s);
  });
}

namespace {

SimplicialMap assoc_map(const SSetPtr& source, const SSetPtr& target) {
  // source = (X x Y) x Z, target = X x (Y x Z)
  const auto& s = product_parts(*source);
  const auto& t = product_parts(*target);
  const auto& sl = product_parts(*s.left);
  const auto& tr = product_parts(*t.right);
  if (sl.left != t.left || sl.right != tr.left || s.right != tr.right) {
    throw DomainMismatch("assoc: " + source->name() + " and " + target->name() +
                         " have different factors");
  }
  return make_map(source, target, [&](SimplexId id) {
    const SimplexRef xy = s.left_part[id];
    const SimplexRef z = s.right_part[id];
    const SimplexRef yz = pair(*t.right, right_of(*s.left, xy), z);
    return pair(*target, left_of(*s.left, xy), yz);
  });
}

SimplicialMap assoc_inverse_map(const SSetPtr& source, const SSetPtr& target) {
  // source = X x (Y x Z), target = (X x Y) x Z
  const auto& s = product_parts(*source);
  const auto& t = product_parts(*target);
  return make_map(source, target, [&](SimplexId id) {
    const SimplexRef x = s.left_part[id];
    const SimplexRef yz = s.right_part[id];
    const SimplexRef xy = pair(*t.left, x, left_of(*s.right, yz));
    return pair(*target, xy, right_of(*s.right, yz));
  });
}

SimplicialMap swap_map(const SSetPtr& source, const SSetPtr& target) {
  const auto& s = product_parts(*source);
  const auto& t = product_parts(*target);
  if (s.left != t.right || s.right != t.left) {
    throw DomainMismatch("swap: " + source->name() + " and " + target->name() +
                         " are not mirror products");
  }
  return make_map(source, target, [&](SimplexId id) {
    return pair(*target, s.right_part[id], s.left_part[id]);
  });
}

}  // namespace

CanonicalIso canonical_iso(IsoKind kind, const SSetPtr& source, const SSetPtr& target) {
  switch (kind) {
    case IsoKind::assoc: {
      auto fwd = assoc_map(source, target);
      return {std::move(fwd), assoc_inverse_map(target, source)};
    }
    case IsoKind::swap: {
      auto fwd = swap_map(source, target);
      return {std::move(fwd), swap_map(target, source)};
    }
    case IsoKind::unit_r: {
      const auto& s = product_parts(*source);
      if (s.left != target || s.right != standard_simplex(0)) {
        throw DomainMismatch("unit_r: " + source->name() + " is not " + target->name() +
                             "*delta0");
      }
      auto inv = make_map(target, source, [&](SimplexId id) {
        return pair(*source, target->nondegenerate(id),
                    SimplexRef{0, MonotoneMap::collapse(target->dim(id))});
      });
      return {pr1(source), std::move(inv)};
    }
  }
  throw std::invalid_argument("unknown canonical isomorphism");
}

SSetPtr ProductCache::product(const SSetPtr& x, const SSetPtr& y) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto& slot = products_[{x.get(), y.get()}];
  if (!slot) slot = cylpath::product(x, y);
  return slot;
}

const SimplicialMap& ProductCache::restriction(const SSetPtr& x, const MonotoneMap& theta) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto& slot = restrictions_[{x.get(), theta}];
  if (!slot) {
    const int m = theta.source_dim();
    const int n = theta.target_dim();
    const auto delta_theta = yoneda(standard_simplex(n), standard_simplex_ref(theta));
    slot = std::make_unique<SimplicialMap>(
        product_map(identity_map(x), delta_theta, cylinder(x, m), cylinder(x, n)));
  }
  return *slot;
}

}  // namespace cylpath
