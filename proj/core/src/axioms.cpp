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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>

#include "cylpath/enrichment.hpp"
#include "cylpath/enumerate.hpp"

namespace cylpath {
namespace {

class AxiomChecker {
 public:
  AxiomChecker(const std::vector<SSetPtr>& fixtures, int level, UbVariant variant)
      : objs_(fixtures), level_(level), variant_(variant), e_(level) {}

  VerificationReport run() {
    VerificationReport report("axioms");
    check_hom_functor(report);
    check_ub_simplicial(report);
    check_ub_literal(report);
    check_tilde_bijection(report);
    check_tilde_natural(report);
    check_ub_assoc(report);
    check_ub_units(report);
    check_tilde_composition(report);
    return report;
  }

 private:
  // ---- caches ------------------------------------------------------------

  const FunctionComplex& hom(std::size_t a, std::size_t b) { return *e_.hom(objs_[a], objs_[b]); }

  const std::vector<SimplicialMap>& maps(std::size_t a, std::size_t b) {
    auto& slot = maps_[{a, b}];
    if (!slot) slot = enumerate_maps(objs_[a], objs_[b]);
    return *slot;
  }

  const std::vector<SimplexRef>& level(std::size_t a, std::size_t b, int n) {
    auto& slot = levels_[{a, b, n}];
    if (!slot) slot = hom(a, b).carrier()->level(n);
    return *slot;
  }

  // ub table: entry i * |F(b,c)_n| + j is the dense index of
  // ub(level(a,b,n)[i], level(b,c,n)[j]) in F(a,c)_n.
  const std::vector<std::uint32_t>& table(std::size_t a, std::size_t b, std::size_t c, int n) {
    auto& slot = tables_[{a, b, c, n}];
    if (slot) return *slot;
    const auto& fs = level(a, b, n);
    const auto& gs = level(b, c, n);
    const FunctionComplex& fab = hom(a, b);
    const FunctionComplex& fbc = hom(b, c);
    const FunctionComplex& fac = hom(a, c);
    std::vector<std::uint32_t> t;
    t.reserve(fs.size() * gs.size());
    for (const auto& f : fs) {
      for (const auto& g : gs) {
        t.push_back(static_cast<std::uint32_t>(
            fac.carrier()->index_of(ub(fab, fbc, fac, f, g, variant_))));
      }
    }
    slot = std::move(t);
    return *slot;
  }

  SimplexRef ub_at(std::size_t a, std::size_t b, std::size_t c, const SimplexRef& f,
                   const SimplexRef& g) {
    const int n = f.dim();
    const auto& t = table(a, b, c, n);
    const std::uint64_t i = hom(a, b).carrier()->index_of(f);
    const std::uint64_t j = hom(b, c).carrier()->index_of(g);
    return hom(a, c).carrier()->simplex_at(n, t[i * level(b, c, n).size() + j]);
  }

  // F(u, Y) for the k-th map u : a -> b, as a map F(b, y) -> F(a, y).
  const SimplicialMap& pre(std::size_t a, std::size_t b, std::size_t k, std::size_t y) {
    auto& slot = pre_[{a, b, k, y}];
    if (!slot) slot = hom_action_pre(hom(b, y), hom(a, y), maps(a, b)[k]);
    return *slot;
  }

  // F(X, v) for the k-th map v : a -> b, as a map F(x, a) -> F(x, b).
  const SimplicialMap& post(std::size_t a, std::size_t b, std::size_t k, std::size_t x) {
    auto& slot = post_[{a, b, k, x}];
    if (!slot) slot = hom_action_post(hom(x, a), hom(x, b), maps(a, b)[k]);
    return *slot;
  }

  SimplexRef tilde_of(std::size_t a, std::size_t b, std::size_t k) {
    auto& slot = tildes_[{a, b, k}];
    if (!slot) slot = tilde(hom(a, b), maps(a, b)[k]);
    return *slot;
  }

  // ---- naming ------------------------------------------------------------

  std::string objs(std::initializer_list<std::size_t> idx) const {
    std::string s = "(";
    bool first = true;
    for (std::size_t i : idx) {
      if (!first) s += ",";
      s += objs_[i]->name();
      first = false;
    }
    return s + ")";
  }

  static std::string at_level(std::string inst, int n) { return inst + " n=" + std::to_string(n); }

  std::string show(std::size_t a, std::size_t b, const SimplexRef& s) {
    return format_simplex(*hom(a, b).carrier(), s);
  }

  std::size_t size() const { return objs_.size(); }

  // ---- S1 ----------------------------------------------------------------

  void check_hom_functor(VerificationReport& report) {
    const std::string anchor = "enrich.hom-functor";
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = 0; y < size(); ++y) {
        const auto id = identity_map(hom(x, y).carrier());
        const std::size_t idx = index_of_identity(x);
        const std::size_t idy = index_of_identity(y);
        std::optional<std::string> w;
        if (auto d = maps_equal(pre(x, x, idx, y), id)) w = "F(id,Y) " + *d;
        if (!w) {
          if (auto d = maps_equal(post(y, y, idy, x), id)) w = "F(X,id) " + *d;
        }
        report.check(anchor, "identities " + objs({x, y}), w);
      }
    }
    for (std::size_t w = 0; w < size(); ++w) {
      for (std::size_t z = 0; z < size(); ++z) {
        for (std::size_t x = 0; x < size(); ++x) {
          for (std::size_t y = 0; y < size(); ++y) {
            report.check(anchor, "pre-composite " + objs({w, z, x, y}),
                         pre_composite(w, z, x, y));
            report.check(anchor, "post-composite " + objs({w, z, x, y}),
                         post_composite(w, z, x, y));
            report.check(anchor, "interchange " + objs({w, z, x, y}), interchange(w, z, x, y));
          }
        }
      }
    }
  }

  std::size_t index_of_identity(std::size_t a) {
    const auto id = identity_map(objs_[a]);
    const auto& ms = maps(a, a);
    for (std::size_t k = 0; k < ms.size(); ++k) {
      if (same_map(ms[k], id)) return k;
    }
    throw std::logic_error("identity of " + objs_[a]->name() + " was not enumerated");
  }

  std::size_t index_of_map(std::size_t a, std::size_t b, const SimplicialMap& f) {
    const auto& ms = maps(a, b);
    for (std::size_t k = 0; k < ms.size(); ++k) {
      if (same_map(ms[k], f)) return k;
    }
    throw std::logic_error("composite " + format_map(f) + " was not enumerated");
  }

  // F(u o v, Y) = F(v, Y) o F(u, Y) for v : w -> z, u : z -> x.
  std::optional<std::string> pre_composite(std::size_t w, std::size_t z, std::size_t x,
                                           std::size_t y) {
    for (std::size_t i = 0; i < maps(w, z).size(); ++i) {
      for (std::size_t j = 0; j < maps(z, x).size(); ++j) {
        const std::size_t uv = index_of_map(w, x, compose(maps(z, x)[j], maps(w, z)[i]));
        if (auto d = maps_equal(pre(w, x, uv, y), compose(pre(w, z, i, y), pre(z, x, j, y)))) {
          return "v=" + format_map(maps(w, z)[i]) + ", u=" + format_map(maps(z, x)[j]) + ": " + *d;
        }
      }
    }
    return std::nullopt;
  }

  // F(X, u o v) = F(X, u) o F(X, v) for v : w -> z, u : z -> x, from F(y, w).
  std::optional<std::string> post_composite(std::size_t w, std::size_t z, std::size_t x,
                                            std::size_t y) {
    for (std::size_t i = 0; i < maps(w, z).size(); ++i) {
      for (std::size_t j = 0; j < maps(z, x).size(); ++j) {
        const std::size_t uv = index_of_map(w, x, compose(maps(z, x)[j], maps(w, z)[i]));
        if (auto d = maps_equal(post(w, x, uv, y), compose(post(z, x, j, y), post(w, z, i, y)))) {
          return "v=" + format_map(maps(w, z)[i]) + ", u=" + format_map(maps(z, x)[j]) + ": " + *d;
        }
      }
    }
    return std::nullopt;
  }

  // F(u, Y') o F(X, v) = F(Z, v) o F(u, Y) for u : w -> z, v : x -> y,
  // both F(z, x) -> F(w, y).
  std::optional<std::string> interchange(std::size_t w, std::size_t z, std::size_t x,
                                         std::size_t y) {
    for (std::size_t i = 0; i < maps(w, z).size(); ++i) {
      for (std::size_t j = 0; j < maps(x, y).size(); ++j) {
        const auto lhs = compose(pre(w, z, i, y), post(x, y, j, z));
        const auto rhs = compose(post(x, y, j, w), pre(w, z, i, x));
        if (auto d = maps_equal(lhs, rhs)) {
          return "u=" + format_map(maps(w, z)[i]) + ", v=" + format_map(maps(x, y)[j]) + ": " + *d;
        }
      }
    }
    return std::nullopt;
  }

  // ---- S2 ----------------------------------------------------------------

  void check_ub_simplicial(VerificationReport& report) {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        for (std::size_t c = 0; c < size(); ++c) {
          for (int n = 0; n <= level_; ++n) {
            report.check("enrich.ub-simplicial", at_level(objs({a, b, c}), n),
                         ub_simplicial(a, b, c, n));
          }
        }
      }
    }
  }

  std::optional<std::string> ub_simplicial(std::size_t a, std::size_t b, std::size_t c, int n) {
    const auto& cab = *hom(a, b).carrier();
    const auto& cbc = *hom(b, c).carrier();
    const auto& cac = *hom(a, c).carrier();
    for (const auto& f : level(a, b, n)) {
      for (const auto& g : level(b, c, n)) {
        const SimplexRef h = ub_at(a, b, c, f, g);
        for (int i = 0; n > 0 && i <= n; ++i) {
          const SimplexRef lhs = face(cac, h, i);
          const SimplexRef rhs = ub_at(a, b, c, face(cab, f, i), face(cbc, g, i));
          if (lhs != rhs) {
            return "d_" + std::to_string(i) + " at f=" + show(a, b, f) + ", g=" + show(b, c, g) +
                   ": " + show(a, c, lhs) + " vs " + show(a, c, rhs);
          }
        }
        for (int j = 0; n < level_ && j <= n; ++j) {
          const SimplexRef lhs = degeneracy(cac, h, j);
          const SimplexRef rhs = ub_at(a, b, c, degeneracy(cab, f, j), degeneracy(cbc, g, j));
          if (lhs != rhs) {
            return "s_" + std::to_string(j) + " at f=" + show(a, b, f) + ", g=" + show(b, c, g) +
                   ": " + show(a, c, lhs) + " vs " + show(a, c, rhs);
          }
        }
      }
    }
    return std::nullopt;
  }

  void check_ub_literal(VerificationReport& report) {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        for (std::size_t c = 0; c < size(); ++c) {
          for (int n = 0; n <= level_; ++n) {
            std::optional<std::string> w;
            for (const auto& f : level(a, b, n)) {
              for (const auto& g : level(b, c, n)) {
                const SimplexRef fast = ub_at(a, b, c, f, g);
                const SimplexRef lit = literal_(hom(a, b), hom(b, c), hom(a, c), f, g);
                if (fast != lit) {
                  w = "f=" + show(a, b, f) + ", g=" + show(b, c, g) + ": " + show(a, c, fast) +
                      " vs literal " + show(a, c, lit);
                  break;
                }
              }
              if (w) break;
            }
            report.check("enrich.ub-literal", at_level(objs({a, b, c}), n), w);
          }
        }
      }
    }
  }

  // ---- S3 ----------------------------------------------------------------

  void check_tilde_bijection(VerificationReport& report) {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        report.check("enrich.tilde-bijection", objs({a, b}), tilde_bijection(a, b));
      }
    }
  }

  std::optional<std::string> tilde_bijection(std::size_t a, std::size_t b) {
    const FunctionComplex& fc = hom(a, b);
    std::set<SimplexRef> seen;
    for (std::size_t k = 0; k < maps(a, b).size(); ++k) {
      const SimplexRef s = tilde_of(a, b, k);
      if (!seen.insert(s).second) return "two maps share the 0-simplex " + show(a, b, s);
      if (auto d = maps_equal(untilde(fc, s), maps(a, b)[k])) {
        return "untilde(tilde(" + format_map(maps(a, b)[k]) + ")) " + *d;
      }
    }
    if (seen.size() != fc.carrier()->level_size(0)) {
      return std::to_string(seen.size()) + " maps but " +
             std::to_string(fc.carrier()->level_size(0)) + " 0-simplices";
    }
    for (const auto& s : level(a, b, 0)) {
      if (tilde(fc, untilde(fc, s)) != s) return "tilde(untilde(" + show(a, b, s) + ")) differs";
    }
    return std::nullopt;
  }

  void check_tilde_natural(VerificationReport& report) {
    for (std::size_t z = 0; z < size(); ++z) {
      for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t y = 0; y < size(); ++y) {
          report.check("enrich.tilde-natural", "pre " + objs({z, x, y}), tilde_pre(z, x, y));
          report.check("enrich.tilde-natural", "post " + objs({z, x, y}), tilde_post(z, x, y));
        }
      }
    }
  }

  // tilde(f o u) = F(u, Y)(tilde f) for u : z -> x, f : x -> y.
  std::optional<std::string> tilde_pre(std::size_t z, std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < maps(z, x).size(); ++i) {
      for (std::size_t j = 0; j < maps(x, y).size(); ++j) {
        const std::size_t fu = index_of_map(z, y, compose(maps(x, y)[j], maps(z, x)[i]));
        const SimplexRef lhs = tilde_of(z, y, fu);
        const SimplexRef rhs = pre(z, x, i, y)(tilde_of(x, y, j));
        if (lhs != rhs) {
          return "u=" + format_map(maps(z, x)[i]) + ", f=" + format_map(maps(x, y)[j]) + ": " +
                 show(z, y, lhs) + " vs " + show(z, y, rhs);
        }
      }
    }
    return std::nullopt;
  }

  // tilde(v o f) = F(X, v)(tilde f) for f : z -> x, v : x -> y.
  std::optional<std::string> tilde_post(std::size_t z, std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < maps(z, x).size(); ++i) {
      for (std::size_t j = 0; j < maps(x, y).size(); ++j) {
        const std::size_t vf = index_of_map(z, y, compose(maps(x, y)[j], maps(z, x)[i]));
        const SimplexRef lhs = tilde_of(z, y, vf);
        const SimplexRef rhs = post(x, y, j, z)(tilde_of(z, x, i));
        if (lhs != rhs) {
          return "f=" + format_map(maps(z, x)[i]) + ", v=" + format_map(maps(x, y)[j]) + ": " +
                 show(z, y, lhs) + " vs " + show(z, y, rhs);
        }
      }
    }
    return std::nullopt;
  }

  // ---- S4 ----------------------------------------------------------------

  void check_ub_assoc(VerificationReport& report) {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        for (std::size_t c = 0; c < size(); ++c) {
          for (std::size_t d = 0; d < size(); ++d) {
            for (int n = 0; n <= level_; ++n) {
              report.check("enrich.ub-assoc", at_level(objs({a, b, c, d}), n),
                           ub_assoc(a, b, c, d, n));
            }
          }
        }
      }
    }
  }

  std::optional<std::string> ub_assoc(std::size_t a, std::size_t b, std::size_t c,
                                      std::size_t d, int n) {
    const std::size_t nf = level(a, b, n).size();
    const std::size_t ng = level(b, c, n).size();
    const std::size_t nh = level(c, d, n).size();
    const std::size_t nbd = level(b, d, n).size();
    const std::size_t ncd = nh;
    const auto& abc = table(a, b, c, n);
    const auto& bcd = table(b, c, d, n);
    const auto& acd = table(a, c, d, n);
    const auto& abd = table(a, b, d, n);
    for (std::size_t f = 0; f < nf; ++f) {
      for (std::size_t g = 0; g < ng; ++g) {
        const std::size_t gf = abc[f * ng + g];
        for (std::size_t h = 0; h < nh; ++h) {
          const std::size_t lhs = acd[gf * ncd + h];
          const std::size_t rhs = abd[f * nbd + bcd[g * nh + h]];
          if (lhs != rhs) {
            const auto& cad = *hom(a, d).carrier();
            return "f=" + show(a, b, level(a, b, n)[f]) + ", g=" + show(b, c, level(b, c, n)[g]) +
                   ", h=" + show(c, d, level(c, d, n)[h]) + ": (h.g).f = " +
                   format_simplex(cad, cad.simplex_at(n, rhs)) + " but h.(g.f) = " +
                   format_simplex(cad, cad.simplex_at(n, lhs));
          }
        }
      }
    }
    return std::nullopt;
  }

  // ---- S5 ----------------------------------------------------------------

  void check_ub_units(VerificationReport& report) {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        for (std::size_t c = 0; c < size(); ++c) {
          for (int n = 0; n <= level_; ++n) {
            report.check("enrich.ub-unit-post", at_level(objs({a, b, c}), n),
                         unit_post(a, b, c, n));
            report.check("enrich.ub-unit-pre", at_level(objs({a, b, c}), n),
                         unit_pre(a, b, c, n));
          }
        }
      }
    }
  }

  // F(X, g)_n(f) = ub(f, sigma^* tilde g) for f in F(a,b)_n, g : b -> c.
  std::optional<std::string> unit_post(std::size_t a, std::size_t b, std::size_t c, int n) {
    for (std::size_t k = 0; k < maps(b, c).size(); ++k) {
      const SimplexRef tg = degenerate_to(hom(b, c), tilde_of(b, c, k), n);
      for (const auto& f : level(a, b, n)) {
        const SimplexRef lhs = post(b, c, k, a)(f);
        const SimplexRef rhs = ub_at(a, b, c, f, tg);
        if (lhs != rhs) {
          return "f=" + show(a, b, f) + ", g=" + format_map(maps(b, c)[k]) + ": " +
                 show(a, c, lhs) + " vs " + show(a, c, rhs);
        }
      }
    }
    return std::nullopt;
  }

  // F(f, Z)_n(g) = ub(sigma^* tilde f, g) for f : a -> b, g in F(b,c)_n.
  std::optional<std::string> unit_pre(std::size_t a, std::size_t b, std::size_t c, int n) {
    for (std::size_t k = 0; k < maps(a, b).size(); ++k) {
      const SimplexRef tf = degenerate_to(hom(a, b), tilde_of(a, b, k), n);
      for (const auto& g : level(b, c, n)) {
        const SimplexRef lhs = pre(a, b, k, c)(g);
        const SimplexRef rhs = ub_at(a, b, c, tf, g);
        if (lhs != rhs) {
          return "f=" + format_map(maps(a, b)[k]) + ", g=" + show(b, c, g) + ": " +
                 show(a, c, lhs) + " vs " + show(a, c, rhs);
        }
      }
    }
    return std::nullopt;
  }

  void check_tilde_composition(VerificationReport& report) {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        for (std::size_t c = 0; c < size(); ++c) {
          std::optional<std::string> w;
          for (std::size_t i = 0; i < maps(a, b).size() && !w; ++i) {
            for (std::size_t j = 0; j < maps(b, c).size() && !w; ++j) {
              const std::size_t gf = index_of_map(a, c, compose(maps(b, c)[j], maps(a, b)[i]));
              const SimplexRef lhs = ub_at(a, b, c, tilde_of(a, b, i), tilde_of(b, c, j));
              const SimplexRef rhs = tilde_of(a, c, gf);
              if (lhs != rhs) {
                w = "f=" + format_map(maps(a, b)[i]) + ", g=" + format_map(maps(b, c)[j]) +
                    ": " + show(a, c, lhs) + " vs " + show(a, c, rhs);
              }
            }
          }
          report.check("enrich.tilde-composition", objs({a, b, c}), w);
        }
      }
    }
  }

  std::vector<SSetPtr> objs_;
  int level_;
  UbVariant variant_;
  Enrichment e_;
  UbLiteral literal_;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<std::vector<SimplicialMap>>> maps_;
  std::map<std::tuple<std::size_t, std::size_t, int>, std::optional<std::vector<SimplexRef>>>
      levels_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, int>,
           std::optional<std::vector<std::uint32_t>>>
      tables_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>,
           std::optional<SimplicialMap>>
      pre_, post_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::optional<SimplexRef>> tildes_;
};

}  // namespace

VerificationReport check_enrichment_axioms(const std::vector<SSetPtr>& fixtures, int level,
                                           UbVariant variant) {
  return AxiomChecker(fixtures, level, variant).run();
}

}  // namespace cylpath
