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

#include "cylpath/cylinder_path.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "cylpath/enumerate.hpp"
#include "cylpath/errors.hpp"
#include "cylpath/product.hpp"

namespace cylpath {

namespace {

std::size_t probe_index(const std::vector<SSetPtr>& probes, const SSetPtr& y,
                        const std::string& structure) {
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (probes[i] == y) return i;
  }
  throw ProbeMissing(y->name() + " is not a probe of " + structure);
}

void require_parameter(const Enrichment& e, const SSetPtr& k, const std::string& what) {
  if (k->top_dim() > e.parameter_dim()) {
    throw TruncationError(what + ": parameter " + k->name() + " exceeds the parameter dimension",
                          k->top_dim(), e.parameter_dim());
  }
}

std::string pair_name(const SSetPtr& x, const SSetPtr& k) {
  return "X=" + x->name() + ",K=" + k->name();
}

// A vertex of m.dom sent to `target`, first in id order.
std::optional<SimplexRef> preimage_vertex(const SimplicialMap& m, const SimplexRef& target) {
  for (SimplexId v = 0; v < m.dom->count(0); ++v) {
    if (m.at(v) == target) return m.dom->nondegenerate(v);
  }
  return std::nullopt;
}

// The map K -> C given on nondegenerate simplices by `value`.
SimplicialMap on_parameter(const SSetPtr& k, const SSetPtr& c,
                           const std::function<SimplexRef(const SimplexRef&)>& value) {
  return make_map(k, c, [&](SimplexId id) { return value(k->nondegenerate(id)); });
}

// Levelwise bijectivity of m : dom -> cod on levels 0..level.
std::optional<std::string> levelwise_bijection(const SimplicialMap& m, int n) {
  const std::uint64_t size = m.cod->level_size(n);
  if (m.dom->level_size(n) != size) {
    return "level " + std::to_string(n) + " has " + std::to_string(m.dom->level_size(n)) +
           " simplices in the source and " + std::to_string(size) + " in the target";
  }
  std::vector<std::optional<SimplexRef>> hit(size);
  for (const auto& s : m.dom->level(n)) {
    const SimplexRef image = m(s);
    auto& slot = hit[m.cod->index_of(image)];
    if (slot) {
      return format_simplex(*m.dom, *slot) + " and " + format_simplex(*m.dom, s) +
             " both go to " + format_simplex(*m.cod, image);
    }
    slot = s;
  }
  return std::nullopt;
}

// Solves "condition(f) = goal" for f : a -> b through the level-0 inverse
// of iso : F(a, b) -> F(K, C), then certifies it against every candidate.
DerivedMorphism solve(Enrichment& e, const SimplicialMap& iso, const SimplicialMap& goal,
                      const std::function<SimplicialMap(const SimplicialMap&)>& condition,
                      const std::string& anchor, const std::string& instance,
                      SolverVariant variant) {
  const auto fab = e.complex_of(iso.dom);
  const auto nested = e.complex_of(iso.cod);
  if (!fab || !nested) throw std::logic_error(anchor + ": complexes not owned by the enrichment");
  const SimplexRef goal_tilde = tilde(*nested, goal);
  const SimplexRef aim =
      variant == SolverVariant::skip_tilde ? nested->carrier()->nondegenerate(0) : goal_tilde;
  const auto vertex = preimage_vertex(iso, aim);
  if (!vertex) throw std::logic_error(anchor + ": level 0 of the structure map is not onto");

  DerivedMorphism out{untilde(*fab, *vertex), VerificationReport(anchor), 0};
  out.report.check(anchor + ".condition", instance, maps_equal(condition(out.map), goal));

  std::optional<std::string> disagreement;
  bool found = false;
  for (const auto& c : enumerate_maps(fab->source(), fab->target())) {
    const bool tilde_form = iso.at(tilde(*fab, c).base) == goal_tilde;
    const bool map_form = same_map(condition(c), goal);
    if (tilde_form != map_form && !disagreement) {
      disagreement = "on " + format_map(c) + ": tilde form " + (tilde_form ? "holds" : "fails") +
                     ", map form " + (map_form ? "holds" : "fails");
    }
    if (map_form) {
      ++out.solutions;
      found |= same_map(c, out.map);
    }
  }
  out.report.check(anchor + ".tilde-form", instance, disagreement);
  std::optional<std::string> unique;
  if (out.solutions != 1 || !found) {
    unique = std::to_string(out.solutions) + " maps satisfy the condition" +
             (found ? "" : ", none of them the solved one");
  }
  out.report.check(anchor + ".unique", instance, unique);
  return out;
}

}  // namespace

const SimplicialMap& CylinderStructure::phi_for(const SSetPtr& y) const {
  return phi[probe_index(probes, y, "the cylinder of " + pair_name(x, k))];
}

const SimplicialMap& PathStructure::psi_for(const SSetPtr& y) const {
  return psi[probe_index(probes, y, "the path object of " + pair_name(x, k))];
}

CylinderStructure canonical_cylinder(Enrichment& e, const SSetPtr& x, const SSetPtr& k,
                                     const std::vector<SSetPtr>& probes) {
  require_parameter(e, k, "canonical_cylinder");
  CylinderStructure s{x, k, e.product(x, k), {}, probes, {}};
  const auto fxo = e.hom(x, s.obj);
  s.alpha = on_parameter(k, fxo->carrier(), [&](const SimplexRef& kk) {
    return fxo->element(
        product_map(identity_map(x), yoneda(k, kk), fxo->cylinder(kk.dim()), s.obj));
  });
  for (const auto& y : probes) {
    const auto fxy = e.hom(x, y);
    const auto foy = e.hom(s.obj, y);
    const auto nested = e.nested_hom(k, fxy->carrier());
    std::vector<SimplicialMap> rebracket;
    for (int n = 0; n <= e.level(); ++n) {
      rebracket.push_back(canonical_iso(IsoKind::assoc, foy->cylinder(n),
                                        e.product(x, nested->cylinder(n)))
                              .inverse);
    }
    s.phi.push_back(make_map(
        foy->carrier(), nested->carrier(),
        [&](SimplexId id) {
          const SimplexRef g = foy->carrier()->nondegenerate(id);
          const int n = g.dim();
          const auto curried = compose(foy->underlying(g), rebracket[static_cast<std::size_t>(n)]);
          return nested->element(sharp_inv(*fxy, curried, nested->cylinder(n)));
        },
        e.level()));
  }
  return s;
}

PathStructure canonical_path(Enrichment& e, const SSetPtr& x, const SSetPtr& k,
                             const std::vector<SSetPtr>& probes) {
  require_parameter(e, k, "canonical_path");
  const auto fkx = e.hom_exact(k, x);
  PathStructure s{x, k, fkx->carrier(), {}, probes, {}};
  const auto fox = e.hom(s.obj, x);
  const SimplicialMap evaluation = ev(*fkx);
  s.beta = on_parameter(k, fox->carrier(), [&](const SimplexRef& kk) {
    const int n = kk.dim();
    const SSetPtr flipped = e.product(standard_simplex(n), s.obj);
    const auto swap = canonical_iso(IsoKind::swap, fox->cylinder(n), flipped).forward;
    const auto pick = product_map(yoneda(k, kk), identity_map(s.obj), flipped, evaluation.dom);
    return fox->element(compose(evaluation, compose(pick, swap)));
  });
  for (const auto& y : probes) {
    const auto fyo = e.hom(y, s.obj);
    const auto fyx = e.hom(y, x);
    const auto nested = e.nested_hom(k, fyx->carrier());
    // Y x (K x Delta[n]) -> K x (Y x Delta[n]).
    std::vector<SimplicialMap> reorder;
    for (int n = 0; n <= e.level(); ++n) {
      const SSetPtr kn = nested->cylinder(n);
      const SSetPtr yn = fyo->cylinder(n);
      const SSetPtr from = e.product(y, kn);
      const SSetPtr to = e.product(k, yn);
      reorder.push_back(make_map(from, to, [&](SimplexId id) {
        const SimplexRef p = from->nondegenerate(id);
        const SimplexRef kt = right_of(*from, p);
        return pair(*to, left_of(*kn, kt), pair(*yn, left_of(*from, p), right_of(*kn, kt)));
      }));
    }
    s.psi.push_back(make_map(
        fyo->carrier(), nested->carrier(),
        [&](SimplexId id) {
          const SimplexRef f = fyo->carrier()->nondegenerate(id);
          const int n = f.dim();
          const auto uncurried = compose(sharp(*fkx, fyo->underlying(f)),
                                         reorder[static_cast<std::size_t>(n)]);
          return nested->element(sharp_inv(*fyx, uncurried, nested->cylinder(n)));
        },
        e.level()));
  }
  return s;
}

VerificationReport check_structure_def(Enrichment& e, const CylinderStructure& s) {
  VerificationReport report("cylinder-def");
  const auto fxo = e.hom(s.x, s.obj);
  for (std::size_t i = 0; i < s.probes.size(); ++i) {
    const SSetPtr& y = s.probes[i];
    const SimplicialMap& phi = s.phi[i];
    const auto fxy = e.hom(s.x, y);
    const auto foy = e.hom(s.obj, y);
    const auto nested = e.nested_hom(s.k, fxy->carrier());
    for (int n = 0; n <= e.level(); ++n) {
      const std::string inst = "(" + pair_name(s.x, s.k) + ",Y=" + y->name() + ") n=" +
                               std::to_string(n);
      std::optional<std::string> witness;
      for (const auto& k : s.k->level(n)) {
        const SimplexRef a = s.alpha(k);
        for (const auto& g : foy->carrier()->level(n)) {
          const SimplexRef lhs = ub(*fxo, *foy, *fxy, a, g);
          const SimplexRef rhs = nested->evaluate(phi(g), k);
          if (lhs != rhs) {
            witness = "k=" + format_simplex(*s.k, k) + ", g=" +
                      format_simplex(*foy->carrier(), g) + ": ub(alpha(k), g) = " +
                      format_simplex(*fxy->carrier(), lhs) + " but ev(k, phi(g)) = " +
                      format_simplex(*fxy->carrier(), rhs);
            break;
          }
        }
        if (witness) break;
      }
      report.check("cyl.def-square", inst, witness);
      report.check("cyl.phi-bijective", inst, levelwise_bijection(phi, n));
    }
  }
  return report;
}

VerificationReport check_structure_def(Enrichment& e, const PathStructure& s) {
  VerificationReport report("path-def");
  const auto fox = e.hom(s.obj, s.x);
  for (std::size_t i = 0; i < s.probes.size(); ++i) {
    const SSetPtr& y = s.probes[i];
    const SimplicialMap& psi = s.psi[i];
    const auto fyo = e.hom(y, s.obj);
    const auto fyx = e.hom(y, s.x);
    const auto nested = e.nested_hom(s.k, fyx->carrier());
    for (int n = 0; n <= e.level(); ++n) {
      const std::string inst = "(" + pair_name(s.x, s.k) + ",Y=" + y->name() + ") n=" +
                               std::to_string(n);
      std::optional<std::string> witness;
      for (const auto& k : s.k->level(n)) {
        const SimplexRef b = s.beta(k);
        for (const auto& f : fyo->carrier()->level(n)) {
          const SimplexRef lhs = ub(*fyo, *fox, *fyx, f, b);
          const SimplexRef rhs = nested->evaluate(psi(f), k);
          if (lhs != rhs) {
            witness = "k=" + format_simplex(*s.k, k) + ", f=" +
                      format_simplex(*fyo->carrier(), f) + ": ub(f, beta(k)) = " +
                      format_simplex(*fyx->carrier(), lhs) + " but ev(k, psi(f)) = " +
                      format_simplex(*fyx->carrier(), rhs);
            break;
          }
        }
        if (witness) break;
      }
      report.check("path.def-square", inst, witness);
      report.check("path.psi-bijective", inst, levelwise_bijection(psi, n));
    }
  }
  return report;
}

DerivedMorphism derived_tensor_on_sset(Enrichment& e, const CylinderStructure& ck,
                                       const CylinderStructure& cl, const SimplicialMap& u,
                                       SolverVariant variant) {
  if (ck.x != cl.x || u.dom != ck.k || u.cod != cl.k) {
    throw DomainMismatch("derived_tensor_on_sset: structures do not match u");
  }
  const auto from = e.hom(ck.x, ck.obj);
  const auto to = e.hom(ck.x, cl.obj);
  const auto condition = [&](const SimplicialMap& f) {
    return on_parameter(ck.k, to->carrier(), [&](const SimplexRef& k) {
      return hom_post_at(*from, *to, f, ck.alpha(k));
    });
  };
  const std::string inst = "(X=" + ck.x->name() + ",u=" + format_map(u) + ")";
  return solve(e, ck.phi_for(cl.obj), compose(cl.alpha, u), condition, "cyl.tensor-sset", inst,
               variant);
}

DerivedMorphism derived_tensor_on_object(Enrichment& e, const CylinderStructure& cx,
                                         const CylinderStructure& cy, const SimplicialMap& u,
                                         SolverVariant variant) {
  if (cx.k != cy.k || u.dom != cx.x || u.cod != cy.x) {
    throw DomainMismatch("derived_tensor_on_object: structures do not match u");
  }
  const SSetPtr& k_obj = cx.k;
  const auto x_ox = e.hom(cx.x, cx.obj);
  const auto x_oy = e.hom(cx.x, cy.obj);
  const auto y_oy = e.hom(cy.x, cy.obj);
  const auto goal = on_parameter(k_obj, x_oy->carrier(), [&](const SimplexRef& k) {
    return hom_pre_at(*y_oy, *x_oy, u, cy.alpha(k));
  });
  const auto condition = [&](const SimplicialMap& f) {
    return on_parameter(k_obj, x_oy->carrier(), [&](const SimplexRef& k) {
      return hom_post_at(*x_ox, *x_oy, f, cx.alpha(k));
    });
  };
  const std::string inst = "(K=" + k_obj->name() + ",u=" + format_map(u) + ")";
  DerivedMorphism out =
      solve(e, cx.phi_for(cy.obj), goal, condition, "cyl.tensor-object", inst, variant);

  const auto ox_oy = e.hom(cx.obj, cy.obj);
  const auto fxy = e.hom(cx.x, cy.x);
  const SimplexRef f_t = tilde(*ox_oy, out.map);
  const SimplexRef u_t = tilde(*fxy, u);
  for (int n = 0; n <= e.level(); ++n) {
    std::optional<std::string> witness;
    for (const auto& k : k_obj->level(n)) {
      const SimplexRef lhs = ub(*x_ox, *ox_oy, *x_oy, cx.alpha(k), degenerate_to(*ox_oy, f_t, n));
      const SimplexRef rhs = ub(*fxy, *y_oy, *x_oy, degenerate_to(*fxy, u_t, n), cy.alpha(k));
      if (lhs != rhs) {
        witness = "k=" + format_simplex(*k_obj, k) + ": " + format_simplex(*x_oy->carrier(), lhs) +
                  " vs " + format_simplex(*x_oy->carrier(), rhs);
        break;
      }
    }
    out.report.check("cyl.tensor-object.levelwise-square", inst + " n=" + std::to_string(n),
                     witness);
  }
  return out;
}

DerivedMorphism derived_cotensor_on_sset(Enrichment& e, const PathStructure& pk,
                                         const PathStructure& pl, const SimplicialMap& u,
                                         SolverVariant variant) {
  if (pk.x != pl.x || u.dom != pk.k || u.cod != pl.k) {
    throw DomainMismatch("derived_cotensor_on_sset: structures do not match u");
  }
  const auto from = e.hom(pk.obj, pk.x);
  const auto to = e.hom(pl.obj, pk.x);
  const auto condition = [&](const SimplicialMap& f) {
    return on_parameter(pk.k, to->carrier(), [&](const SimplexRef& k) {
      return hom_pre_at(*from, *to, f, pk.beta(k));
    });
  };
  const std::string inst = "(X=" + pk.x->name() + ",u=" + format_map(u) + ")";
  return solve(e, pk.psi_for(pl.obj), compose(pl.beta, u), condition, "path.cotensor-sset",
               inst, variant);
}

DerivedMorphism derived_cotensor_on_object(Enrichment& e, const PathStructure& py,
                                           const PathStructure& px, const SimplicialMap& u,
                                           SolverVariant variant) {
  if (py.k != px.k || u.dom != py.x || u.cod != px.x) {
    throw DomainMismatch("derived_cotensor_on_object: structures do not match u");
  }
  const SSetPtr& k_obj = py.k;
  const auto oy_y = e.hom(py.obj, py.x);
  const auto oy_x = e.hom(py.obj, px.x);
  const auto ox_x = e.hom(px.obj, px.x);
  const auto goal = on_parameter(k_obj, oy_x->carrier(), [&](const SimplexRef& k) {
    return hom_post_at(*oy_y, *oy_x, u, py.beta(k));
  });
  const auto condition = [&](const SimplicialMap& f) {
    return on_parameter(k_obj, oy_x->carrier(), [&](const SimplexRef& k) {
      return hom_pre_at(*ox_x, *oy_x, f, px.beta(k));
    });
  };
  const std::string inst = "(K=" + k_obj->name() + ",u=" + format_map(u) + ")";
  DerivedMorphism out =
      solve(e, px.psi_for(py.obj), goal, condition, "path.cotensor-object", inst, variant);

  const auto oy_ox = e.hom(py.obj, px.obj);
  const auto fyx = e.hom(py.x, px.x);
  const SimplexRef f_t = tilde(*oy_ox, out.map);
  const SimplexRef u_t = tilde(*fyx, u);
  for (int n = 0; n <= e.level(); ++n) {
    std::optional<std::string> witness;
    for (const auto& k : k_obj->level(n)) {
      const SimplexRef lhs = ub(*oy_y, *fyx, *oy_x, py.beta(k), degenerate_to(*fyx, u_t, n));
      const SimplexRef rhs = ub(*oy_ox, *ox_x, *oy_x, degenerate_to(*oy_ox, f_t, n), px.beta(k));
      if (lhs != rhs) {
        witness = "k=" + format_simplex(*k_obj, k) + ": " + format_simplex(*oy_x->carrier(), lhs) +
                  " vs " + format_simplex(*oy_x->carrier(), rhs);
        break;
      }
    }
    out.report.check("path.cotensor-object.levelwise-square", inst + " n=" + std::to_string(n),
                     witness);
  }
  return out;
}

namespace {

void certify_iso(DerivedMorphism& out, const std::string& anchor, const std::string& inst) {
  std::optional<std::string> witness;
  if (!is_iso(out.map)) witness = format_map(out.map) + " is not invertible";
  out.report.check(anchor + ".iso", inst, witness);
}

}  // namespace

DerivedMorphism uniqueness_solve(Enrichment& e, const CylinderStructure& s1,
                                 const CylinderStructure& s2) {
  if (s1.x != s2.x || s1.k != s2.k) throw DomainMismatch("uniqueness_solve: different (X, K)");
  s2.phi_for(s1.obj);
  const auto from = e.hom(s1.x, s1.obj);
  const auto to = e.hom(s1.x, s2.obj);
  const auto condition = [&](const SimplicialMap& f) {
    return on_parameter(s1.k, to->carrier(), [&](const SimplexRef& k) {
      return hom_post_at(*from, *to, f, s1.alpha(k));
    });
  };
  const std::string inst = "(" + pair_name(s1.x, s1.k) + "," + s1.obj->name() + " -> " +
                           s2.obj->name() + ")";
  DerivedMorphism out = solve(e, s1.phi_for(s2.obj), s2.alpha, condition, "cyl.comparison", inst,
                              SolverVariant::standard);
  certify_iso(out, "cyl.comparison", inst);
  return out;
}

DerivedMorphism uniqueness_solve(Enrichment& e, const PathStructure& s1,
                                 const PathStructure& s2) {
  if (s1.x != s2.x || s1.k != s2.k) throw DomainMismatch("uniqueness_solve: different (X, K)");
  s1.psi_for(s2.obj);
  const auto from = e.hom(s2.obj, s1.x);
  const auto to = e.hom(s1.obj, s1.x);
  const auto condition = [&](const SimplicialMap& f) {
    return on_parameter(s1.k, to->carrier(), [&](const SimplexRef& k) {
      return hom_pre_at(*from, *to, f, s2.beta(k));
    });
  };
  const std::string inst = "(" + pair_name(s1.x, s1.k) + "," + s1.obj->name() + " -> " +
                           s2.obj->name() + ")";
  DerivedMorphism out = solve(e, s2.psi_for(s1.obj), s1.beta, condition, "path.comparison", inst,
                              SolverVariant::standard);
  certify_iso(out, "path.comparison", inst);
  return out;
}

CylinderStructure shuffle_structure(Enrichment& e, const CylinderStructure& s,
                                    const SimplicialMap& rho) {
  if (rho.dom != s.obj || !is_iso(rho)) {
    throw std::invalid_argument("shuffle_structure: rho is not an isomorphism out of " +
                                s.obj->name());
  }
  CylinderStructure out{s.x, s.k, rho.cod, {}, s.probes, {}};
  out.alpha = compose(hom_action_post(*e.hom(s.x, s.obj), *e.hom(s.x, out.obj), rho), s.alpha);
  for (std::size_t i = 0; i < s.probes.size(); ++i) {
    const SSetPtr& y = s.probes[i];
    out.phi.push_back(compose(s.phi[i], hom_action_pre(*e.hom(out.obj, y), *e.hom(s.obj, y), rho)));
  }
  return out;
}

PathStructure shuffle_structure(Enrichment& e, const PathStructure& s, const SimplicialMap& rho) {
  const auto rho_inv = rho.dom == s.obj ? inverse_of(rho) : std::nullopt;
  if (!rho_inv) {
    throw std::invalid_argument("shuffle_structure: rho is not an isomorphism out of " +
                                s.obj->name());
  }
  PathStructure out{s.x, s.k, rho.cod, {}, s.probes, {}};
  out.beta = compose(hom_action_pre(*e.hom(s.obj, s.x), *e.hom(out.obj, s.x), *rho_inv), s.beta);
  for (std::size_t i = 0; i < s.probes.size(); ++i) {
    const SSetPtr& y = s.probes[i];
    out.psi.push_back(
        compose(s.psi[i], hom_action_post(*e.hom(y, out.obj), *e.hom(y, s.obj), *rho_inv)));
  }
  return out;
}

CylinderStructure with_constant_alpha(const CylinderStructure& s) {
  CylinderStructure out = s;
  out.alpha = constant_map(s.k, s.alpha.cod, s.alpha.at(0).base);
  return out;
}

}  // namespace cylpath
