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

#include "cylpath/harness.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <utility>

#include "cylpath/enumerate.hpp"
#include "cylpath/errors.hpp"
#include "cylpath/product.hpp"

namespace cylpath {

namespace {

using Objects = std::vector<SSetPtr>;

void push_unique(Objects& v, const SSetPtr& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

int max_dim(const Objects& v) {
  int d = 0;
  for (const auto& x : v) d = std::max(d, x->top_dim());
  return d;
}

std::string triple(const char* a, const SSetPtr& x, const char* b, const SSetPtr& y,
                   const char* c, const SSetPtr& z) {
  return std::string("(") + a + "=" + x->name() + "," + b + "=" + y->name() + "," + c + "=" +
         z->name() + ")";
}

std::string arrow(const SimplicialMap& u) {
  return u.dom->name() + "->" + u.cod->name() + " " + format_map(u);
}

// The map K -> C whose value on a nondegenerate k is value(k).
SimplicialMap on_parameter(const SSetPtr& k, const SSetPtr& c,
                           const std::function<SimplexRef(const SimplexRef&)>& value) {
  return make_map(k, c, [&](SimplexId id) { return value(k->nondegenerate(id)); });
}

// A vertex of m.dom over `target`, first in id order.
std::optional<SimplexRef> preimage_vertex(const SimplicialMap& m, const SimplexRef& target) {
  for (SimplexId v = 0; v < m.dom->count(0); ++v) {
    if (m.at(v) == target) return m.dom->nondegenerate(v);
  }
  return std::nullopt;
}

}  // namespace

FixtureCategory default_fixtures() {
  const Objects xs{standard_simplex(0), standard_simplex(1)};
  return {"default", xs, xs, 2};
}

FixtureCategory minimal_fixtures() {
  const Objects xs{standard_simplex(0)};
  return {"minimal", xs, xs, 2};
}

FixtureCategory zoo_fixtures() {
  return {"zoo",
          {standard_simplex(0), standard_simplex(1), standard_simplex(2), boundary_simplex(1),
           boundary_simplex(2), horn(2, 1)},
          {standard_simplex(0), standard_simplex(1)},
          2};
}

FixtureCategory axiom_fixtures() {
  return {"axioms",
          {standard_simplex(0), standard_simplex(1), standard_simplex(2), boundary_simplex(2)},
          {},
          2};
}

FixtureCategory empty_fixtures() { return {"empty", {}, {}, 2}; }

FixtureCategory fixtures_named(std::string_view name) {
  if (name == "default") return default_fixtures();
  if (name == "minimal") return minimal_fixtures();
  if (name == "zoo") return zoo_fixtures();
  if (name == "axioms") return axiom_fixtures();
  if (name == "empty") return empty_fixtures();
  throw std::invalid_argument("unknown fixture category '" + std::string(name) + "'");
}

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 6> kSuites{{
    {Suite::axioms, "axioms"},
    {Suite::cylinder, "cylinder"},
    {Suite::path, "path"},
    {Suite::thm1, "thm1"},
    {Suite::thm2, "thm2"},
    {Suite::thm3, "thm3"},
}};

constexpr std::array<std::pair<Mutation, std::string_view>, 5> kMutations{{
    {Mutation::none, "none"},
    {Mutation::ub_without_diagonal, "ub-without-diagonal"},
    {Mutation::constant_alpha, "constant-alpha"},
    {Mutation::skip_tilde, "skip-tilde"},
    {Mutation::face_table_swap, "face-table-swap"},
}};

bool uses_paths(Suite s) { return s != Suite::axioms && s != Suite::cylinder; }
bool uses_cylinders(Suite s) { return s != Suite::axioms && s != Suite::path; }

}  // namespace

std::string_view suite_name(Suite s) {
  for (const auto& [k, v] : kSuites) {
    if (k == s) return v;
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [k, v] : kSuites) {
    if (v == name) return k;
  }
  return std::nullopt;
}

FixtureCategory default_fixtures_for(Suite s) {
  return s == Suite::axioms ? axiom_fixtures() : default_fixtures();
}

void audit(const FixtureCategory& f, Suite s) {
  if (f.level < 0) {
    throw std::invalid_argument("level must be non-negative, got " + std::to_string(f.level));
  }
  Objects all = f.objects;
  for (const auto& k : f.parameters) push_unique(all, k);
  for (const auto& x : all) {
    if (!x->is_exact()) {
      throw std::invalid_argument(x->name() + " is truncated; fixtures must be exact");
    }
  }
  if (uses_paths(s)) {
    for (const auto& x : f.objects) {
      if (!is_poset_nerve(*x)) {
        throw std::invalid_argument(x->name() +
                                    " is not the nerve of a poset; path objects need one");
      }
    }
  }
  if (f.objects.empty()) return;

  // Largest domain is X x Delta[n] for X a cylinder or path object (or a
  // fixture object for the axioms) and n <= level + parameter dimension.
  const int p = s == Suite::axioms ? 0 : max_dim(f.parameters);
  const int dx = max_dim(f.objects);
  int base = dx;
  if (uses_cylinders(s) && !f.parameters.empty()) base = std::max(base, dx + p + p);
  if (uses_paths(s)) {
    int path_dim = 0;  // a chain of maps K -> X raises one vertex image per step
    for (const auto& k : f.parameters) {
      path_dim = std::max(path_dim, static_cast<int>(k->count(0)) * dx);
    }
    base = std::max(base, std::max(dx, path_dim) + p);
  }
  const int required = base + f.level;
  if (required > kAuditMaxDimension) {
    const int admissible = kAuditMaxDimension - base;
    throw TruncationError(
        "suite " + std::string(suite_name(s)) + " on fixtures " + f.name + " at level " +
            std::to_string(f.level) + " would enumerate maps out of dimension " +
            std::to_string(required) + "; " +
            (admissible >= 0 ? "the largest admissible level is " + std::to_string(admissible)
                             : std::string("no level is admissible")),
        required, kAuditMaxDimension);
  }
}

std::string_view mutation_name(Mutation m) {
  for (const auto& [k, v] : kMutations) {
    if (k == m) return v;
  }
  return "?";
}

std::optional<Mutation> parse_mutation(std::string_view name) {
  for (const auto& [k, v] : kMutations) {
    if (v == name) return k;
  }
  return std::nullopt;
}

FixtureCategory mutate_fixtures(const FixtureCategory& f, Mutation m) {
  if (m != Mutation::face_table_swap) return f;
  Objects all = f.objects;
  for (const auto& k : f.parameters) push_unique(all, k);
  for (const auto& x : all) {
    if (x->top_dim() < 2 || x->count(2) == 0) continue;
    const SSetPtr broken = with_swapped_faces(x, x->first(2), 0, 2);
    FixtureCategory out = f;
    std::replace(out.objects.begin(), out.objects.end(), x, broken);
    std::replace(out.parameters.begin(), out.parameters.end(), x, broken);
    return out;
  }
  throw std::invalid_argument("face-table-swap needs a fixture object with a 2-simplex; " +
                              f.name + " has none");
}

// ---------------------------------------------------------------------------
// Workspace

Workspace::Workspace(FixtureCategory f, SolverVariant solver)
    : f_(std::move(f)),
      solver_(solver),
      e_(std::make_unique<Enrichment>(f_.level, max_dim(f_.parameters))) {}

SSetPtr Workspace::cylinder_object(const SSetPtr& x, const SSetPtr& k) {
  return e_->product(x, k);
}

SSetPtr Workspace::path_object(const SSetPtr& x, const SSetPtr& k) {
  return e_->hom_exact(k, x)->carrier();
}

std::vector<SSetPtr> Workspace::probes_for(const SSetPtr& x, const SSetPtr& k, bool cylinder) {
  Objects probes = f_.objects;
  for (const auto& l : f_.parameters) {
    push_unique(probes, cylinder ? cylinder_object(x, l) : path_object(x, l));
  }
  for (const auto& y : f_.objects) {
    push_unique(probes, cylinder ? cylinder_object(y, k) : path_object(y, k));
  }
  return probes;
}

const CylinderStructure& Workspace::cylinder(const SSetPtr& x, const SSetPtr& k) {
  const auto key = std::pair{x.get(), k.get()};
  auto it = cylinders_.find(key);
  if (it == cylinders_.end()) {
    it = cylinders_.emplace(key, canonical_cylinder(*e_, x, k, probes_for(x, k, true))).first;
  }
  return it->second;
}

const PathStructure& Workspace::path(const SSetPtr& x, const SSetPtr& k) {
  const auto key = std::pair{x.get(), k.get()};
  auto it = paths_.find(key);
  if (it == paths_.end()) {
    it = paths_.emplace(key, canonical_path(*e_, x, k, probes_for(x, k, false))).first;
  }
  return it->second;
}

const std::vector<SimplicialMap>& Workspace::maps(const SSetPtr& a, const SSetPtr& b) {
  const auto key = std::pair{a.get(), b.get()};
  auto it = maps_.find(key);
  if (it == maps_.end()) it = maps_.emplace(key, enumerate_maps(a, b)).first;
  return it->second;
}

const SimplicialMap& Workspace::remember(const Key& key, DerivedMorphism d) {
  log_.merge(d.report);
  return derived_.emplace(key, std::move(d.map)).first->second;
}

const SimplicialMap& Workspace::tensor_sset(const SSetPtr& x, const SimplicialMap& u) {
  const Key key{0, x.get(), u.dom.get(), u.cod.get(), u.assign};
  if (auto it = derived_.find(key); it != derived_.end()) return it->second;
  const auto& ck = cylinder(x, u.dom);
  const auto& cl = cylinder(x, u.cod);
  return remember(key, derived_tensor_on_sset(*e_, ck, cl, u, solver_));
}

const SimplicialMap& Workspace::tensor_object(const SimplicialMap& u, const SSetPtr& k) {
  const Key key{1, k.get(), u.dom.get(), u.cod.get(), u.assign};
  if (auto it = derived_.find(key); it != derived_.end()) return it->second;
  const auto& cx = cylinder(u.dom, k);
  const auto& cy = cylinder(u.cod, k);
  return remember(key, derived_tensor_on_object(*e_, cx, cy, u, solver_));
}

const SimplicialMap& Workspace::cotensor_sset(const SSetPtr& x, const SimplicialMap& u) {
  const Key key{2, x.get(), u.dom.get(), u.cod.get(), u.assign};
  if (auto it = derived_.find(key); it != derived_.end()) return it->second;
  const auto& pk = path(x, u.dom);
  const auto& pl = path(x, u.cod);
  return remember(key, derived_cotensor_on_sset(*e_, pk, pl, u, solver_));
}

const SimplicialMap& Workspace::cotensor_object(const SimplicialMap& u, const SSetPtr& k) {
  const Key key{3, k.get(), u.dom.get(), u.cod.get(), u.assign};
  if (auto it = derived_.find(key); it != derived_.end()) return it->second;
  const auto& py = path(u.dom, k);
  const auto& px = path(u.cod, k);
  return remember(key, derived_cotensor_on_object(*e_, py, px, u, solver_));
}

// ---------------------------------------------------------------------------
// thm2: functoriality, oracles, interchange, lemma squares

namespace {

void functoriality(Workspace& ws, VerificationReport& r) {
  Enrichment& e = ws.enrichment();
  const Objects& os = ws.fixtures().objects;
  const Objects& ps = ws.fixtures().parameters;

  for (const auto& x : os) {
    for (const auto& k : ps) {
      const std::string at = "(X=" + x->name() + ",K=" + k->name() + ")";
      r.check("thm2.identity", "X (.) id_K " + at,
              maps_equal(ws.tensor_sset(x, identity_map(k)),
                         identity_map(ws.cylinder_object(x, k))));
      r.check("thm2.identity", "id_X (.) K " + at,
              maps_equal(ws.tensor_object(identity_map(x), k),
                         identity_map(ws.cylinder_object(x, k))));
      r.check("thm2.identity", "X^id_K " + at,
              maps_equal(ws.cotensor_sset(x, identity_map(k)),
                         identity_map(ws.path_object(x, k))));
      r.check("thm2.identity", "id_X^K " + at,
              maps_equal(ws.cotensor_object(identity_map(x), k),
                         identity_map(ws.path_object(x, k))));
    }
  }

  for (const auto& x : os) {
    for (const auto& k : ps) {
      for (const auto& l : ps) {
        for (const auto& u : ws.maps(k, l)) {
          const std::string at = "(X=" + x->name() + ",u=" + arrow(u) + ")";
          r.check("thm2.tensor-sset-oracle", at,
                  maps_equal(ws.tensor_sset(x, u),
                             product_map(identity_map(x), u, ws.cylinder_object(x, k),
                                         ws.cylinder_object(x, l))));
          r.check("thm2.cotensor-sset-oracle", at,
                  maps_equal(ws.cotensor_sset(x, u),
                             hom_action_pre(*e.hom_exact(l, x), *e.hom_exact(k, x), u)));
        }
      }
    }
  }
  for (const auto& k : ps) {
    for (const auto& x : os) {
      for (const auto& y : os) {
        for (const auto& u : ws.maps(x, y)) {
          const std::string at = "(K=" + k->name() + ",u=" + arrow(u) + ")";
          r.check("thm2.tensor-object-oracle", at,
                  maps_equal(ws.tensor_object(u, k),
                             product_map(u, identity_map(k), ws.cylinder_object(x, k),
                                         ws.cylinder_object(y, k))));
          r.check("thm2.cotensor-object-oracle", at,
                  maps_equal(ws.cotensor_object(u, k),
                             hom_action_post(*e.hom_exact(k, x), *e.hom_exact(k, y), u)));
        }
      }
    }
  }

  for (const auto& x : os) {
    for (const auto& k : ps) {
      for (const auto& l : ps) {
        for (const auto& m : ps) {
          for (const auto& u : ws.maps(k, l)) {
            for (const auto& v : ws.maps(l, m)) {
              const std::string at =
                  "(X=" + x->name() + ",u=" + arrow(u) + ",v=" + arrow(v) + ")";
              const auto vu = compose(v, u);
              r.check("thm2.tensor-sset-composition", at,
                      maps_equal(ws.tensor_sset(x, vu),
                                 compose(ws.tensor_sset(x, v), ws.tensor_sset(x, u))));
              r.check("thm2.cotensor-sset-composition", at,
                      maps_equal(ws.cotensor_sset(x, vu),
                                 compose(ws.cotensor_sset(x, u), ws.cotensor_sset(x, v))));
            }
          }
        }
      }
    }
  }
  for (const auto& k : ps) {
    for (const auto& x : os) {
      for (const auto& y : os) {
        for (const auto& z : os) {
          for (const auto& f : ws.maps(x, y)) {
            for (const auto& g : ws.maps(y, z)) {
              const std::string at =
                  "(K=" + k->name() + ",f=" + arrow(f) + ",g=" + arrow(g) + ")";
              const auto gf = compose(g, f);
              r.check("thm2.tensor-object-composition", at,
                      maps_equal(ws.tensor_object(gf, k),
                                 compose(ws.tensor_object(g, k), ws.tensor_object(f, k))));
              r.check("thm2.cotensor-object-composition", at,
                      maps_equal(ws.cotensor_object(gf, k),
                                 compose(ws.cotensor_object(g, k), ws.cotensor_object(f, k))));
            }
          }
        }
      }
    }
  }

  // (Y (.) u)(g (.) K) = (g (.) L)(X (.) u) and (g^K)(X^u) = (Y^u)(g^L)
  // for g : X -> Y and u : K -> L.
  for (const auto& x : os) {
    for (const auto& y : os) {
      for (const auto& g : ws.maps(x, y)) {
        for (const auto& k : ps) {
          for (const auto& l : ps) {
            for (const auto& u : ws.maps(k, l)) {
              const std::string at = "(g=" + arrow(g) + ",u=" + arrow(u) + ")";
              r.check("thm2.tensor-interchange", at,
                      maps_equal(compose(ws.tensor_sset(y, u), ws.tensor_object(g, k)),
                                 compose(ws.tensor_object(g, l), ws.tensor_sset(x, u))));
              r.check("thm2.cotensor-interchange", at,
                      maps_equal(compose(ws.cotensor_object(g, k), ws.cotensor_sset(x, u)),
                                 compose(ws.cotensor_sset(y, u), ws.cotensor_object(g, l))));
            }
          }
        }
      }
    }
  }
}

void lemma_squares(Workspace& ws, VerificationReport& r) {
  Enrichment& e = ws.enrichment();
  const Objects& os = ws.fixtures().objects;
  const Objects& ps = ws.fixtures().parameters;

  for (const auto& x : os) {
    for (const auto& k : ps) {
      const auto& s = ws.cylinder(x, k);
      const auto fxo = e.hom(x, s.obj);
      for (const auto& y : os) {
        const auto& phi = s.phi_for(y);
        const auto foy = e.hom(s.obj, y);
        const auto fxy = e.hom(x, y);
        const auto nested = e.nested_hom(k, fxy->carrier());
        std::optional<std::string> witness;
        for (const auto& g : ws.maps(s.obj, y)) {
          const SimplexRef lhs = phi.at(tilde(*foy, g).base);
          const SimplexRef rhs =
              tilde(*nested, on_parameter(k, fxy->carrier(), [&](const SimplexRef& kk) {
                      return hom_post_at(*fxo, *fxy, g, s.alpha(kk));
                    }));
          if (lhs != rhs) {
            witness = "g=" + format_map(g) + ": " + format_simplex(*nested->carrier(), lhs) +
                      " vs " + format_simplex(*nested->carrier(), rhs);
            break;
          }
        }
        r.check("lemma.phi-tilde", triple("X", x, "K", k, "Y", y), witness);
      }
    }
  }

  for (const auto& x : os) {
    for (const auto& k : ps) {
      const auto& p = ws.path(x, k);
      const auto fox = e.hom(p.obj, x);
      for (const auto& y : os) {
        const auto& psi = p.psi_for(y);
        const auto fyo = e.hom(y, p.obj);
        const auto fyx = e.hom(y, x);
        const auto nested = e.nested_hom(k, fyx->carrier());
        std::optional<std::string> witness;
        for (const auto& f : ws.maps(y, p.obj)) {
          const SimplexRef lhs = psi.at(tilde(*fyo, f).base);
          const SimplexRef rhs =
              tilde(*nested, on_parameter(k, fyx->carrier(), [&](const SimplexRef& kk) {
                      return hom_pre_at(*fox, *fyx, f, p.beta(kk));
                    }));
          if (lhs != rhs) {
            witness = "f=" + format_map(f) + ": " + format_simplex(*nested->carrier(), lhs) +
                      " vs " + format_simplex(*nested->carrier(), rhs);
            break;
          }
        }
        r.check("lemma.psi-tilde", triple("X", x, "K", k, "Y", y), witness);
      }
    }
  }

  // The alpha and beta squares are recorded by the solver next to each
  // u (.) K and u^K.
  for (const auto& k : ps) {
    for (const auto& x : os) {
      for (const auto& y : os) {
        for (const auto& u : ws.maps(x, y)) {
          ws.tensor_object(u, k);
          ws.cotensor_object(u, k);
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// thm3: naturality of phi and psi

// lhs, rhs : A -> F(K, C). Compared directly and after sharp, on levels
// 0..level; the two verdicts must agree.
void compare_natural(VerificationReport& r, Enrichment& e, const std::string& anchor,
                     const std::string& instance, const SimplicialMap& lhs,
                     const SimplicialMap& rhs) {
  const auto nested = e.complex_of(lhs.cod);
  if (!nested || rhs.cod != lhs.cod) {
    throw std::logic_error(anchor + ": sides do not land in one owned complex");
  }
  const auto direct = maps_equal(lhs, rhs, e.level());
  const auto transported = maps_equal(sharp(*nested, lhs), sharp(*nested, rhs), e.level());
  r.check(anchor + ".direct", instance, direct);
  r.check(anchor + ".sharp", instance, transported);
  std::optional<std::string> disagreement;
  if (direct.has_value() != transported.has_value()) {
    disagreement = std::string("direct ") + (direct ? "fails" : "holds") + ", sharp " +
                   (transported ? "fails" : "holds");
  }
  r.check("thm3.cross-validation", anchor + " " + instance, disagreement);
}

struct Slot {
  SSetPtr a;
  SSetPtr b;
  SimplicialMap m;
};

// The last map between the first ordered pair of distinct objects that has
// one; the identity of the first object when there is none.
Slot pick_slot(Workspace& ws, const Objects& xs) {
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      if (a == b) continue;
      const auto& ms = ws.maps(a, b);
      if (!ms.empty()) return {a, b, ms.back()};
    }
  }
  return {xs.front(), xs.front(), identity_map(xs.front())};
}

void naturality(Workspace& ws, VerificationReport& r) {
  Enrichment& e = ws.enrichment();
  const Objects& os = ws.fixtures().objects;
  const Objects& ps = ws.fixtures().parameters;
  const auto nested = [&](const SSetPtr& k, const SSetPtr& a, const SSetPtr& b) {
    return e.nested_hom(k, e.hom(a, b)->carrier());
  };

  // phi in K: phi_K F(X (.) u, Y) = F(u, F(X, Y)) phi_L.
  for (const auto& x : os) {
    for (const auto& y : os) {
      for (const auto& k : ps) {
        for (const auto& l : ps) {
          const auto& sk = ws.cylinder(x, k);
          const auto& sl = ws.cylinder(x, l);
          for (const auto& u : ws.maps(k, l)) {
            const auto lhs =
                compose(sk.phi_for(y), hom_action_pre(*e.hom(sl.obj, y), *e.hom(sk.obj, y),
                                                      ws.tensor_sset(x, u)));
            const auto rhs =
                compose(hom_action_pre(*nested(l, x, y), *nested(k, x, y), u), sl.phi_for(y));
            compare_natural(r, e, "thm3.phi-natural-K",
                            "(X=" + x->name() + ",Y=" + y->name() + ",u=" + arrow(u) + ")", lhs,
                            rhs);
          }
        }
      }
    }
  }
  // phi in X: phi_W F(v (.) K, Y) = F(K, F(v, Y)) phi_X for v : W -> X.
  for (const auto& y : os) {
    for (const auto& k : ps) {
      for (const auto& w : os) {
        for (const auto& x : os) {
          const auto& sx = ws.cylinder(x, k);
          const auto& sw = ws.cylinder(w, k);
          const auto fxy = e.hom(x, y);
          const auto fwy = e.hom(w, y);
          for (const auto& v : ws.maps(w, x)) {
            const auto lhs =
                compose(sw.phi_for(y), hom_action_pre(*e.hom(sx.obj, y), *e.hom(sw.obj, y),
                                                      ws.tensor_object(v, k)));
            const auto rhs = compose(hom_action_post(*nested(k, x, y), *nested(k, w, y),
                                                     hom_action_pre(*fxy, *fwy, v)),
                                     sx.phi_for(y));
            compare_natural(r, e, "thm3.phi-natural-X",
                            "(K=" + k->name() + ",Y=" + y->name() + ",v=" + arrow(v) + ")", lhs,
                            rhs);
          }
        }
      }
    }
  }
  // phi in Y: phi F(X (.) K, w) = F(K, F(X, w)) phi for w : Y -> Z.
  for (const auto& x : os) {
    for (const auto& k : ps) {
      const auto& s = ws.cylinder(x, k);
      for (const auto& y : os) {
        for (const auto& z : os) {
          const auto fxy = e.hom(x, y);
          const auto fxz = e.hom(x, z);
          for (const auto& w : ws.maps(y, z)) {
            const auto lhs =
                compose(s.phi_for(z), hom_action_post(*e.hom(s.obj, y), *e.hom(s.obj, z), w));
            const auto rhs = compose(hom_action_post(*nested(k, x, y), *nested(k, x, z),
                                                     hom_action_post(*fxy, *fxz, w)),
                                     s.phi_for(y));
            compare_natural(r, e, "thm3.phi-natural-Y",
                            "(X=" + x->name() + ",K=" + k->name() + ",w=" + arrow(w) + ")", lhs,
                            rhs);
          }
        }
      }
    }
  }
  // psi in K: psi_K F(Y, X^u) = F(u, F(Y, X)) psi_L.
  for (const auto& x : os) {
    for (const auto& y : os) {
      for (const auto& k : ps) {
        for (const auto& l : ps) {
          const auto& pk = ws.path(x, k);
          const auto& pl = ws.path(x, l);
          for (const auto& u : ws.maps(k, l)) {
            const auto lhs =
                compose(pk.psi_for(y), hom_action_post(*e.hom(y, pl.obj), *e.hom(y, pk.obj),
                                                       ws.cotensor_sset(x, u)));
            const auto rhs =
                compose(hom_action_pre(*nested(l, y, x), *nested(k, y, x), u), pl.psi_for(y));
            compare_natural(r, e, "thm3.psi-natural-K",
                            "(X=" + x->name() + ",Y=" + y->name() + ",u=" + arrow(u) + ")", lhs,
                            rhs);
          }
        }
      }
    }
  }
  // psi in Y: psi_Y F(w, X^K) = F(K, F(w, X)) psi_Z for w : Y -> Z.
  for (const auto& x : os) {
    for (const auto& k : ps) {
      const auto& p = ws.path(x, k);
      for (const auto& y : os) {
        for (const auto& z : os) {
          const auto fzx = e.hom(z, x);
          const auto fyx = e.hom(y, x);
          for (const auto& w : ws.maps(y, z)) {
            const auto lhs =
                compose(p.psi_for(y), hom_action_pre(*e.hom(z, p.obj), *e.hom(y, p.obj), w));
            const auto rhs = compose(hom_action_post(*nested(k, z, x), *nested(k, y, x),
                                                     hom_action_pre(*fzx, *fyx, w)),
                                     p.psi_for(z));
            compare_natural(r, e, "thm3.psi-natural-Y",
                            "(X=" + x->name() + ",K=" + k->name() + ",w=" + arrow(w) + ")", lhs,
                            rhs);
          }
        }
      }
    }
  }
  // psi in X: psi_X F(Y, v^K) = F(K, F(Y, v)) psi_W for v : W -> X.
  for (const auto& y : os) {
    for (const auto& k : ps) {
      for (const auto& w : os) {
        for (const auto& x : os) {
          const auto& pw = ws.path(w, k);
          const auto& px = ws.path(x, k);
          const auto fyw = e.hom(y, w);
          const auto fyx = e.hom(y, x);
          for (const auto& v : ws.maps(w, x)) {
            const auto lhs =
                compose(px.psi_for(y), hom_action_post(*e.hom(y, pw.obj), *e.hom(y, px.obj),
                                                       ws.cotensor_object(v, k)));
            const auto rhs = compose(hom_action_post(*nested(k, y, w), *nested(k, y, x),
                                                     hom_action_post(*fyw, *fyx, v)),
                                     pw.psi_for(y));
            compare_natural(r, e, "thm3.psi-natural-X",
                            "(K=" + k->name() + ",Y=" + y->name() + ",v=" + arrow(v) + ")", lhs,
                            rhs);
          }
        }
      }
    }
  }

  if (os.empty() || ps.empty()) return;
  // All three slots at once: u : K -> L, v : W -> X, w : Y -> Z.
  const Slot su = pick_slot(ws, ps);
  const Slot sv = pick_slot(ws, os);
  const Slot sw = pick_slot(ws, os);
  const SSetPtr &k = su.a, &l = su.b, &wo = sv.a, &x = sv.b, &y = sw.a, &z = sw.b;
  const std::string at =
      "(u=" + arrow(su.m) + ",v=" + arrow(sv.m) + ",w=" + arrow(sw.m) + ")";
  {
    const auto& sxl = ws.cylinder(x, l);
    const auto& swk = ws.cylinder(wo, k);
    const auto vu = compose(ws.tensor_sset(x, su.m), ws.tensor_object(sv.m, k));
    const auto lhs = compose(
        swk.phi_for(z),
        compose(hom_action_pre(*e.hom(sxl.obj, z), *e.hom(swk.obj, z), vu),
                hom_action_post(*e.hom(sxl.obj, y), *e.hom(sxl.obj, z), sw.m)));
    const auto fvw = compose(hom_action_pre(*e.hom(x, z), *e.hom(wo, z), sv.m),
                             hom_action_post(*e.hom(x, y), *e.hom(x, z), sw.m));
    const auto rhs =
        compose(hom_action_pre(*nested(l, wo, z), *nested(k, wo, z), su.m),
                compose(hom_action_post(*nested(l, x, y), *nested(l, wo, z), fvw),
                        sxl.phi_for(y)));
    compare_natural(r, e, "thm3.phi-natural-mixed", at, lhs, rhs);
  }
  {
    const auto& pxk = ws.path(x, k);
    const auto& pwl = ws.path(wo, l);
    const auto vu = compose(ws.cotensor_sset(x, su.m), ws.cotensor_object(sv.m, l));
    const auto lhs = compose(
        pxk.psi_for(y),
        compose(hom_action_pre(*e.hom(z, pxk.obj), *e.hom(y, pxk.obj), sw.m),
                hom_action_post(*e.hom(z, pwl.obj), *e.hom(z, pxk.obj), vu)));
    const auto fwv = compose(hom_action_pre(*e.hom(z, x), *e.hom(y, x), sw.m),
                             hom_action_post(*e.hom(z, wo), *e.hom(z, x), sv.m));
    const auto rhs =
        compose(hom_action_pre(*nested(l, y, x), *nested(k, y, x), su.m),
                compose(hom_action_post(*nested(l, z, wo), *nested(l, y, x), fwv),
                        pwl.psi_for(z)));
    compare_natural(r, e, "thm3.psi-natural-mixed", at, lhs, rhs);
  }
}

// ---------------------------------------------------------------------------
// thm3: adjunction bijections through level 0 of phi and psi

// sSet(X (.) K, Y) -> sSet(K, F(X, Y)) and back.
SimplicialMap phi0(Workspace& ws, const SSetPtr& x, const SSetPtr& k, const SSetPtr& y,
                   const SimplicialMap& g) {
  Enrichment& e = ws.enrichment();
  const auto& s = ws.cylinder(x, k);
  const auto nested = e.nested_hom(k, e.hom(x, y)->carrier());
  return untilde(*nested, s.phi_for(y).at(tilde(*e.hom(s.obj, y), g).base));
}

std::optional<SimplicialMap> phi0_inv(Workspace& ws, const SSetPtr& x, const SSetPtr& k,
                                      const SSetPtr& y, const SimplicialMap& m) {
  Enrichment& e = ws.enrichment();
  const auto& s = ws.cylinder(x, k);
  const auto nested = e.nested_hom(k, e.hom(x, y)->carrier());
  const auto v = preimage_vertex(s.phi_for(y), tilde(*nested, m));
  if (!v) return std::nullopt;
  return untilde(*e.hom(s.obj, y), *v);
}

// sSet(Y, X^K) -> sSet(K, F(Y, X)) and back.
SimplicialMap psi0(Workspace& ws, const SSetPtr& x, const SSetPtr& k, const SSetPtr& y,
                   const SimplicialMap& f) {
  Enrichment& e = ws.enrichment();
  const auto& p = ws.path(x, k);
  const auto nested = e.nested_hom(k, e.hom(y, x)->carrier());
  return untilde(*nested, p.psi_for(y).at(tilde(*e.hom(y, p.obj), f).base));
}

std::optional<SimplicialMap> psi0_inv(Workspace& ws, const SSetPtr& x, const SSetPtr& k,
                                      const SSetPtr& y, const SimplicialMap& m) {
  Enrichment& e = ws.enrichment();
  const auto& p = ws.path(x, k);
  const auto nested = e.nested_hom(k, e.hom(y, x)->carrier());
  const auto v = preimage_vertex(p.psi_for(y), tilde(*nested, m));
  if (!v) return std::nullopt;
  return untilde(*e.hom(y, p.obj), *v);
}

using Transfer = std::function<std::optional<SimplicialMap>(const SimplicialMap&)>;

// Equal counts and round trips of a bijection `there` : A -> B with inverse
// `back`, given every map of A and of B.
void check_bijection(VerificationReport& r, const std::string& instance,
                     const std::vector<SimplicialMap>& as, const std::vector<SimplicialMap>& bs,
                     const Transfer& there, const Transfer& back) {
  std::optional<std::string> count;
  if (as.size() != bs.size()) {
    count = std::to_string(as.size()) + " maps on one side, " + std::to_string(bs.size()) +
            " on the other";
  }
  r.check("thm3.adjunction-count", instance, count);
  std::optional<std::string> trip;
  const auto round = [&](const std::vector<SimplicialMap>& xs, const Transfer& f,
                         const Transfer& g) {
    for (const auto& a : xs) {
      if (trip) return;
      const auto b = f(a);
      const auto a2 = b ? g(*b) : std::nullopt;
      if (!a2) {
        trip = "no image for " + format_map(a);
      } else if (!same_map(*a2, a)) {
        trip = format_map(a) + " comes back as " + format_map(*a2);
      }
    }
  };
  round(as, there, back);
  round(bs, back, there);
  r.check("thm3.adjunction-roundtrip", instance, trip);
}

// First g with lhs(g) != rhs(g), over every g.
std::optional<std::string> first_disagreement(
    const std::vector<SimplicialMap>& gs,
    const std::function<SimplicialMap(const SimplicialMap&)>& lhs,
    const std::function<SimplicialMap(const SimplicialMap&)>& rhs) {
  for (const auto& g : gs) {
    if (auto d = maps_equal(lhs(g), rhs(g))) return "at " + format_map(g) + ": " + *d;
  }
  return std::nullopt;
}

void adjunctions(Workspace& ws, VerificationReport& r) {
  Enrichment& e = ws.enrichment();
  const Objects& os = ws.fixtures().objects;
  const Objects& ps = ws.fixtures().parameters;

  for (const auto& x : os) {
    for (const auto& k : ps) {
      for (const auto& y : os) {
        const std::string at = triple("X", x, "K", k, "Y", y);
        const SSetPtr obj = ws.cylinder_object(x, k);
        const auto fxy = e.hom(x, y);
        const auto& gs = ws.maps(obj, y);
        check_bijection(
            r, "tensor " + at, gs, ws.maps(k, fxy->carrier()),
            [&](const SimplicialMap& g) { return std::optional(phi0(ws, x, k, y, g)); },
            [&](const SimplicialMap& m) { return phi0_inv(ws, x, k, y, m); });

        for (const auto& z : os) {
          const auto fxz = e.hom(x, z);
          for (const auto& w : ws.maps(y, z)) {
            r.check("thm3.adjunction-natural", "tensor in Y " + at + " w=" + arrow(w),
                    first_disagreement(
                        gs,
                        [&](const SimplicialMap& g) { return phi0(ws, x, k, z, compose(w, g)); },
                        [&](const SimplicialMap& g) {
                          const auto m = phi0(ws, x, k, y, g);
                          return on_parameter(k, fxz->carrier(), [&](const SimplexRef& kk) {
                            return hom_post_at(*fxy, *fxz, w, m(kk));
                          });
                        }));
          }
        }
        for (const auto& wo : os) {
          const auto fwy = e.hom(wo, y);
          for (const auto& v : ws.maps(wo, x)) {
            r.check("thm3.adjunction-natural", "tensor in X " + at + " v=" + arrow(v),
                    first_disagreement(
                        gs,
                        [&](const SimplicialMap& g) {
                          return phi0(ws, wo, k, y, compose(g, ws.tensor_object(v, k)));
                        },
                        [&](const SimplicialMap& g) {
                          const auto m = phi0(ws, x, k, y, g);
                          return on_parameter(k, fwy->carrier(), [&](const SimplexRef& kk) {
                            return hom_pre_at(*fxy, *fwy, v, m(kk));
                          });
                        }));
          }
        }
        for (const auto& k2 : ps) {
          for (const auto& u : ws.maps(k2, k)) {
            r.check("thm3.adjunction-natural", "tensor in K " + at + " u=" + arrow(u),
                    first_disagreement(
                        gs,
                        [&](const SimplicialMap& g) {
                          return phi0(ws, x, k2, y, compose(g, ws.tensor_sset(x, u)));
                        },
                        [&](const SimplicialMap& g) { return compose(phi0(ws, x, k, y, g), u); }));
          }
        }
      }
    }
  }

  for (const auto& x : os) {
    for (const auto& k : ps) {
      for (const auto& y : os) {
        const std::string at = triple("X", x, "K", k, "Y", y);
        const SSetPtr obj = ws.path_object(x, k);
        const auto fyx = e.hom(y, x);
        const auto& fs = ws.maps(y, obj);
        check_bijection(
            r, "cotensor " + at, fs, ws.maps(k, fyx->carrier()),
            [&](const SimplicialMap& f) { return std::optional(psi0(ws, x, k, y, f)); },
            [&](const SimplicialMap& m) { return psi0_inv(ws, x, k, y, m); });

        for (const auto& x2 : os) {
          const auto fyx2 = e.hom(y, x2);
          for (const auto& v : ws.maps(x, x2)) {
            r.check("thm3.adjunction-natural", "cotensor in X " + at + " v=" + arrow(v),
                    first_disagreement(
                        fs,
                        [&](const SimplicialMap& f) {
                          return psi0(ws, x2, k, y, compose(ws.cotensor_object(v, k), f));
                        },
                        [&](const SimplicialMap& f) {
                          const auto m = psi0(ws, x, k, y, f);
                          return on_parameter(k, fyx2->carrier(), [&](const SimplexRef& kk) {
                            return hom_post_at(*fyx, *fyx2, v, m(kk));
                          });
                        }));
          }
        }
        for (const auto& k2 : ps) {
          for (const auto& u : ws.maps(k2, k)) {
            r.check("thm3.adjunction-natural", "cotensor in K " + at + " u=" + arrow(u),
                    first_disagreement(
                        fs,
                        [&](const SimplicialMap& f) {
                          return psi0(ws, x, k2, y, compose(ws.cotensor_sset(x, u), f));
                        },
                        [&](const SimplicialMap& f) { return compose(psi0(ws, x, k, y, f), u); }));
          }
        }
        for (const auto& y2 : os) {
          const auto fy2x = e.hom(y2, x);
          for (const auto& w : ws.maps(y2, y)) {
            r.check("thm3.adjunction-natural", "cotensor in Y " + at + " w=" + arrow(w),
                    first_disagreement(
                        fs,
                        [&](const SimplicialMap& f) { return psi0(ws, x, k, y2, compose(f, w)); },
                        [&](const SimplicialMap& f) {
                          const auto m = psi0(ws, x, k, y, f);
                          return on_parameter(k, fy2x->carrier(), [&](const SimplexRef& kk) {
                            return hom_pre_at(*fyx, *fy2x, w, m(kk));
                          });
                        }));
          }
        }
      }
    }
  }

  // sSet(X (.) K, Y) = sSet(K, F(X, Y)) = sSet(X, Y^K), the second step
  // through the path structure on (Y, K) probed by X.
  for (const auto& x : os) {
    for (const auto& k : ps) {
      for (const auto& y : os) {
        check_bijection(
            r, "tensor-cotensor " + triple("X", x, "K", k, "Y", y),
            ws.maps(ws.cylinder_object(x, k), y), ws.maps(x, ws.path_object(y, k)),
            [&](const SimplicialMap& g) { return psi0_inv(ws, y, k, x, phi0(ws, x, k, y, g)); },
            [&](const SimplicialMap& h) { return phi0_inv(ws, x, k, y, psi0(ws, y, k, x, h)); });
      }
    }
  }
}

// ---------------------------------------------------------------------------
// cylinder, path, thm1

void cylinders(Enrichment& e, const FixtureCategory& f, Mutation m, VerificationReport& r) {
  for (const auto& x : f.objects) {
    for (const auto& k : f.parameters) {
      CylinderStructure s = canonical_cylinder(e, x, k, f.objects);
      if (m == Mutation::constant_alpha) s = with_constant_alpha(s);
      r.merge(check_structure_def(e, s));
    }
  }
}

void paths(Enrichment& e, const FixtureCategory& f, VerificationReport& r) {
  for (const auto& x : f.objects) {
    for (const auto& k : f.parameters) {
      r.merge(check_structure_def(e, canonical_path(e, x, k, f.objects)));
    }
  }
}

// The structure, its shuffles along each (name, rho), and the comparisons.
template <typename Structure>
void recover_shuffles(Enrichment& e, const Structure& s1, const std::string& kind,
                      const std::vector<std::pair<std::string, SimplicialMap>>& rhos,
                      VerificationReport& r) {
  const std::string at = "(X=" + s1.x->name() + ",K=" + s1.k->name() + ")";
  const DerivedMorphism self = uniqueness_solve(e, s1, s1);
  r.merge(self.report);
  r.check("thm1." + kind + "-self", at, maps_equal(self.map, identity_map(s1.obj)));
  for (const auto& [name, rho] : rhos) {
    const Structure s2 = shuffle_structure(e, s1, rho);
    r.merge(check_structure_def(e, s2));
    const DerivedMorphism d = uniqueness_solve(e, s1, s2);
    r.merge(d.report);
    r.check("thm1." + kind + "-recovers", at + " rho=" + name, maps_equal(d.map, rho));
  }
}

void uniqueness(Workspace& ws, VerificationReport& r) {
  Enrichment& e = ws.enrichment();
  const FixtureCategory& f = ws.fixtures();
  for (const auto& x : f.objects) {
    for (const auto& k : f.parameters) {
      const SSetPtr obj = ws.cylinder_object(x, k);
      const Relabelling copy = relabel(obj, obj->name() + "'", "r");
      Objects probes = f.objects;
      push_unique(probes, obj);
      push_unique(probes, copy.copy);
      std::vector<std::pair<std::string, SimplicialMap>> rhos{{"relabel", copy.to}};
      if (x == k) rhos.emplace_back("swap", canonical_iso(IsoKind::swap, obj, obj).forward);
      recover_shuffles(e, canonical_cylinder(e, x, k, probes), "cylinder", rhos, r);
    }
  }
  for (const auto& x : f.objects) {
    for (const auto& k : f.parameters) {
      const SSetPtr obj = ws.path_object(x, k);
      const Relabelling copy = relabel(obj, obj->name() + "'", "r");
      Objects probes = f.objects;
      push_unique(probes, obj);
      push_unique(probes, copy.copy);
      recover_shuffles(e, canonical_path(e, x, k, probes), "path", {{"relabel", copy.to}}, r);
    }
  }
}

}  // namespace

VerificationReport verify_functoriality(const FixtureCategory& f, SolverVariant solver) {
  VerificationReport r("thm2");
  Workspace ws(f, solver);
  functoriality(ws, r);
  r.merge(ws.derived_log());
  return r;
}

VerificationReport verify_naturality(const FixtureCategory& f) {
  VerificationReport r("thm3");
  Workspace ws(f);
  naturality(ws, r);
  r.merge(ws.derived_log());
  return r;
}

VerificationReport verify_adjunctions(const FixtureCategory& f) {
  VerificationReport r("thm3");
  Workspace ws(f);
  adjunctions(ws, r);
  r.merge(ws.derived_log());
  return r;
}

VerificationReport verify_lemma_squares(const FixtureCategory& f) {
  VerificationReport r("thm2");
  Workspace ws(f);
  lemma_squares(ws, r);
  r.merge(ws.derived_log());
  return r;
}

VerificationReport verify_cylinders(const FixtureCategory& f, Mutation m) {
  VerificationReport r("cylinder");
  Enrichment e(f.level, max_dim(f.parameters));
  cylinders(e, f, m, r);
  return r;
}

VerificationReport verify_paths(const FixtureCategory& f) {
  VerificationReport r("path");
  Enrichment e(f.level, max_dim(f.parameters));
  paths(e, f, r);
  return r;
}

VerificationReport verify_uniqueness(const FixtureCategory& f) {
  VerificationReport r("thm1");
  Workspace ws(f);
  uniqueness(ws, r);
  return r;
}

VerificationReport run_one(Suite s, const FixtureCategory& f, Mutation m) {
  VerificationReport r{std::string(suite_name(s))};
  Objects all = f.objects;
  for (const auto& k : f.parameters) push_unique(all, k);
  for (const auto& x : all) r.merge(validate_sset(*x));
  if (!r.ok()) return r;
  audit(f, s);
  if (f.objects.empty()) {
    r.warn(std::string(suite_name(s)) + ": fixtures " + f.name +
           " have no objects; nothing to check");
    return r;
  }
  const SolverVariant solver =
      m == Mutation::skip_tilde ? SolverVariant::skip_tilde : SolverVariant::standard;
  switch (s) {
    case Suite::axioms:
      r.merge(check_enrichment_axioms(f.objects, f.level,
                                      m == Mutation::ub_without_diagonal
                                          ? UbVariant::without_diagonal
                                          : UbVariant::standard));
      break;
    case Suite::cylinder: {
      Enrichment e(f.level, max_dim(f.parameters));
      cylinders(e, f, m, r);
      break;
    }
    case Suite::path: {
      Enrichment e(f.level, max_dim(f.parameters));
      paths(e, f, r);
      break;
    }
    case Suite::thm1: {
      Workspace ws(f, solver);
      uniqueness(ws, r);
      break;
    }
    case Suite::thm2: {
      Workspace ws(f, solver);
      functoriality(ws, r);
      lemma_squares(ws, r);
      r.merge(ws.derived_log());
      break;
    }
    case Suite::thm3: {
      Workspace ws(f, solver);
      naturality(ws, r);
      adjunctions(ws, r);
      r.merge(ws.derived_log());
      break;
    }
  }
  return r;
}

VerificationReport run_suite(const SuiteConfig& config) {
  VerificationReport all("run");
  for (const auto& [s, name] : kSuites) {
    const bool wanted = config.suites.empty() ||
                        std::find(config.suites.begin(), config.suites.end(), s) !=
                            config.suites.end();
    if (!wanted) continue;
    FixtureCategory f = config.fixtures ? fixtures_named(*config.fixtures) : default_fixtures_for(s);
    if (config.level) f.level = *config.level;
    all.merge(run_one(s, mutate_fixtures(f, config.mutation), config.mutation));
  }
  return all;
}

}  // namespace cylpath
