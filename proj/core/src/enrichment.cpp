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

#include "cylpath/enrichment.hpp"

#include <stdexcept>
#include <string>

#include "cylpath/enumerate.hpp"
#include "cylpath/errors.hpp"

namespace cylpath {

Enrichment::Enrichment(int level, int parameter_dim)
    : level_(level), parameter_dim_(parameter_dim), cache_(std::make_shared<ProductCache>()) {
  if (level < 0 || parameter_dim < 0) {
    throw std::invalid_argument("enrichment levels must be non-negative");
  }
}

FunctionComplexPtr Enrichment::hom_at(const SSetPtr& x, const SSetPtr& y, int level) {
  std::lock_guard lock(mu_);
  auto& slot = homs_[{x.get(), y.get(), level}];
  if (!slot) {
    slot = FunctionComplex::materialize(x, y, level, cache_);
    by_carrier_[slot->carrier().get()] = slot;
  }
  return slot;
}

FunctionComplexPtr Enrichment::hom_exact(const SSetPtr& k, const SSetPtr& x) {
  std::lock_guard lock(mu_);
  auto& slot = homs_[{k.get(), x.get(), kExact}];
  if (!slot) {
    slot = FunctionComplex::materialize_exact(k, x, cache_);
    by_carrier_[slot->carrier().get()] = slot;
  }
  return slot;
}

FunctionComplexPtr Enrichment::complex_of(const SSetPtr& c) const {
  std::lock_guard lock(mu_);
  auto it = by_carrier_.find(c.get());
  return it == by_carrier_.end() ? nullptr : it->second;
}

namespace {

void require_composable(const FunctionComplex& fxy, const FunctionComplex& fyz,
                        const FunctionComplex& fxz, int n) {
  if (fxy.target() != fyz.source() || fxy.source() != fxz.source() ||
      fyz.target() != fxz.target()) {
    throw DomainMismatch("cannot compose in " + fxy.carrier()->name() + " x " +
                         fyz.carrier()->name() + " -> " + fxz.carrier()->name());
  }
  if (fxy.cylinder(n) != fxz.cylinder(n)) {
    throw DomainMismatch("function complexes built on different product caches");
  }
}

SimplexRef first_vertex(int m, int n) {
  const std::vector<int> zeros(static_cast<std::size_t>(m + 1), 0);
  return standard_simplex_ref(MonotoneMap(n, zeros));
}

}  // namespace

SimplexRef ub(const FunctionComplex& fxy, const FunctionComplex& fyz,
              const FunctionComplex& fxz, const SimplexRef& f, const SimplexRef& g,
              UbVariant variant) {
  const int n = f.dim();
  if (g.dim() != n) throw std::invalid_argument("ub of simplices of different dimensions");
  require_composable(fxy, fyz, fxz, n);
  const SSetPtr px = fxz.cylinder(n);
  const SSetPtr py = fyz.cylinder(n);
  const auto h = make_map(px, fxz.target(), [&](SimplexId id) {
    const SimplexRef p = px->nondegenerate(id);
    const SimplexRef t = variant == UbVariant::without_diagonal
                             ? first_vertex(p.dim(), n)
                             : right_of(*px, p);
    return fyz.apply(g, pair(*py, fxy.apply(f, p), t));
  });
  return fxz.element(h);
}

SimplexRef ub_literal(const FunctionComplex& fxy, const FunctionComplex& fyz,
                      const FunctionComplex& fxz, const SimplexRef& f, const SimplexRef& g) {
  return UbLiteral()(fxy, fyz, fxz, f, g);
}

const SimplicialMap& UbLiteral::head(const FunctionComplex& fxz, int n) {
  auto it = head_.find({fxz.source().get(), n});
  if (it != head_.end()) return it->second;
  ProductCache& cache = fxz.cache();
  const SSetPtr& x = fxz.source();
  const SSetPtr delta = standard_simplex(n);
  const SSetPtr dd = cache.product(delta, delta);
  const SSetPtr x_dd = cache.product(x, dd);
  const SSetPtr xd_d = cache.product(fxz.cylinder(n), delta);
  const auto id_diag = product_map(identity_map(x), diagonal(delta, dd), fxz.cylinder(n), x_dd);
  const auto rebracket = canonical_iso(IsoKind::assoc, xd_d, x_dd).inverse;
  return head_.emplace(std::pair{x.get(), n}, compose(rebracket, id_diag)).first->second;
}

SimplexRef UbLiteral::operator()(const FunctionComplex& fxy, const FunctionComplex& fyz,
                                 const FunctionComplex& fxz, const SimplexRef& f,
                                 const SimplexRef& g) {
  const int n = f.dim();
  if (g.dim() != n) throw std::invalid_argument("ub of simplices of different dimensions");
  require_composable(fxy, fyz, fxz, n);
  auto it = with_f_.find({fxy.carrier().get(), f});
  if (it == with_f_.end()) {
    const SimplicialMap& h = head(fxz, n);
    const auto f_id =
        product_map(fxy.underlying(f), identity_map(standard_simplex(n)), h.cod, fyz.cylinder(n));
    it = with_f_.emplace(std::pair{fxy.carrier().get(), f}, compose(f_id, h)).first;
  }
  return fxz.element(compose(fyz.underlying(g), it->second));
}

SimplexRef tilde(const FunctionComplex& fxy, const SimplicialMap& f) {
  if (f.dom != fxy.source() || f.cod != fxy.target()) {
    throw DomainMismatch("tilde: map is not in " + fxy.carrier()->name());
  }
  const auto r = canonical_iso(IsoKind::unit_r, fxy.cylinder(0), fxy.source()).forward;
  return fxy.element(compose(f, r));
}

SimplicialMap untilde(const FunctionComplex& fxy, const SimplexRef& s) {
  if (s.dim() != 0) throw std::invalid_argument("untilde of a simplex of positive dimension");
  const auto r_inv = canonical_iso(IsoKind::unit_r, fxy.cylinder(0), fxy.source()).inverse;
  return compose(fxy.underlying(s), r_inv);
}

SimplexRef degenerate_to(const FunctionComplex& fc, const SimplexRef& vertex, int n) {
  if (vertex.dim() != 0) throw std::invalid_argument("degenerate_to needs a 0-simplex");
  return act(*fc.carrier(), vertex, MonotoneMap::collapse(n));
}

namespace {

int action_bound(const FunctionComplex& from, const FunctionComplex& to) {
  return std::min(from.carrier()->trunc_dim(), to.carrier()->trunc_dim());
}

}  // namespace

SimplexRef hom_pre_at(const FunctionComplex& from, const FunctionComplex& to,
                      const SimplicialMap& u, const SimplexRef& s) {
  const int n = s.dim();
  const auto u_id = product_map(u, identity_map(standard_simplex(n)), to.cylinder(n),
                                from.cylinder(n));
  return to.element(compose(from.underlying(s), u_id));
}

SimplexRef hom_post_at(const FunctionComplex& from, const FunctionComplex& to,
                       const SimplicialMap& v, const SimplexRef& s) {
  return to.element(compose(v, from.underlying(s)));
}

SimplicialMap hom_action_pre(const FunctionComplex& from, const FunctionComplex& to,
                             const SimplicialMap& u) {
  if (u.cod != from.source() || u.dom != to.source() || from.target() != to.target()) {
    throw DomainMismatch("hom_action_pre: " + u.dom->name() + " -> " + u.cod->name() +
                         " does not act " + from.carrier()->name() + " -> " +
                         to.carrier()->name());
  }
  const SSetPtr& c = from.carrier();
  const int bound = action_bound(from, to);
  const int top = std::min(bound, c->top_dim());
  std::vector<SimplicialMap> u_id;
  for (int n = 0; n <= top; ++n) {
    u_id.push_back(product_map(u, identity_map(standard_simplex(n)), to.cylinder(n),
                               from.cylinder(n)));
  }
  return make_map(
      c, to.carrier(),
      [&](SimplexId id) {
        const SimplexRef s = c->nondegenerate(id);
        return to.element(compose(from.underlying(s), u_id[static_cast<std::size_t>(s.dim())]));
      },
      bound);
}

SimplicialMap hom_action_post(const FunctionComplex& from, const FunctionComplex& to,
                              const SimplicialMap& v) {
  if (v.dom != from.target() || v.cod != to.target() || from.source() != to.source()) {
    throw DomainMismatch("hom_action_post: " + v.dom->name() + " -> " + v.cod->name() +
                         " does not act " + from.carrier()->name() + " -> " +
                         to.carrier()->name());
  }
  const SSetPtr& c = from.carrier();
  return make_map(
      c, to.carrier(),
      [&](SimplexId id) { return to.element(compose(v, from.underlying(c->nondegenerate(id)))); },
      action_bound(from, to));
}

SimplicialMap ev(const FunctionComplex& fxy) {
  const SSetPtr dom = fxy.cache().product(fxy.source(), fxy.carrier());
  return make_map(dom, fxy.target(), [&](SimplexId id) {
    const SimplexRef p = dom->nondegenerate(id);
    return fxy.evaluate(right_of(*dom, p), left_of(*dom, p));
  });
}

namespace {

void require_curried(const FunctionComplex& fxy, const SimplicialMap& u) {
  if (u.cod != fxy.carrier()) {
    throw DomainMismatch("sharp: " + u.cod->name() + " is not " + fxy.carrier()->name());
  }
}

}  // namespace

SimplicialMap sharp(const FunctionComplex& fxy, const SimplicialMap& u) {
  require_curried(fxy, u);
  ProductCache& cache = fxy.cache();
  const SSetPtr xk = cache.product(fxy.source(), u.dom);
  const SSetPtr xc = cache.product(fxy.source(), fxy.carrier());
  return compose(ev(fxy), product_map(identity_map(fxy.source()), u, xk, xc));
}

SimplicialMap sharp_pointwise(const FunctionComplex& fxy, const SimplicialMap& u) {
  require_curried(fxy, u);
  const SSetPtr xk = fxy.cache().product(fxy.source(), u.dom);
  return make_map(
      xk, fxy.target(),
      [&](SimplexId id) {
        const SimplexRef p = xk->nondegenerate(id);
        return fxy.evaluate(u(right_of(*xk, p)), left_of(*xk, p));
      },
      u.bound);
}

SimplicialMap sharp_inv(const FunctionComplex& fxy, const SimplicialMap& g,
                        const SSetPtr& k_obj) {
  const ProductData& parts = product_parts(*g.dom);
  if (parts.left != fxy.source() || parts.right != k_obj || g.cod != fxy.target()) {
    throw DomainMismatch("sharp_inv: " + g.dom->name() + " -> " + g.cod->name() +
                         " is not curried into " + fxy.carrier()->name());
  }
  const SSetPtr& x = fxy.source();
  const int bound = std::min({k_obj->trunc_dim(), fxy.carrier()->trunc_dim(), g.bound});
  return make_map(
      k_obj, fxy.carrier(),
      [&](SimplexId id) {
        const SimplexRef k = k_obj->nondegenerate(id);
        const int n = k.dim();
        const auto restrict =
            product_map(identity_map(x), yoneda(k_obj, k), fxy.cylinder(n), g.dom);
        return fxy.element(compose(g, restrict));
      },
      bound);
}

}  // namespace cylpath
