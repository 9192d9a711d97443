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

// Theorem-level verification suites over a fixture category.
//
// Suites, in run order:
//   axioms    enrichment laws (check_enrichment_axioms)
//   cylinder  defining squares of the canonical cylinders
//   path      defining squares of the canonical path objects
//   thm1      comparison isomorphisms between a structure and its shuffle
//   thm2      functoriality of the derived morphisms, interchange, oracles,
//             and the standalone lemma squares
//   thm3      naturality of phi and psi in each variable, and the three
//             adjunction bijections
//
// Every suite first validates its fixture objects and stops there when one
// is malformed. All iteration follows fixture order, so reports are
// deterministic.

#ifndef CYLPATH_HARNESS_HPP_
#define CYLPATH_HARNESS_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cylpath/cylinder_path.hpp"
#include "cylpath/enrichment.hpp"
#include "cylpath/report.hpp"

namespace cylpath {

struct FixtureCategory {
  std::string name;
  std::vector<SSetPtr> objects;     // the X, Y, W, Z of every suite
  std::vector<SSetPtr> parameters;  // the K, L
  int level = 2;                    // D: checks run on levels 0..D
};

// {delta0, delta1} as objects and parameters.
FixtureCategory default_fixtures();
// {delta0} as objects and parameters.
FixtureCategory minimal_fixtures();
// delta0, delta1, delta2, bdelta1, bdelta2, horn2_1 as objects; delta0 and
// delta1 as parameters.
FixtureCategory zoo_fixtures();
// delta0, delta1, delta2, bdelta2 as objects, no parameters.
FixtureCategory axiom_fixtures();
// No objects and no parameters; every suite passes vacuously on it.
FixtureCategory empty_fixtures();
// One of "default", "minimal", "zoo", "axioms", "empty"; throws
// std::invalid_argument.
FixtureCategory fixtures_named(std::string_view name);

enum class Suite { axioms, cylinder, path, thm1, thm2, thm3 };
std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
// The fixtures a suite runs on when none are given.
FixtureCategory default_fixtures_for(Suite s);

// Largest dimension of a domain X x Delta[n] the audit lets a suite
// enumerate maps out of.
inline constexpr int kAuditMaxDimension = 6;

// Throws std::invalid_argument for a negative level, truncated fixtures, or
// (for suites building path objects) objects that are not poset nerves.
// Throws TruncationError, naming the largest admissible level, when the
// suite would enumerate maps out of domains above kAuditMaxDimension.
void audit(const FixtureCategory& f, Suite s);

enum class Mutation {
  none,
  ub_without_diagonal,  // axioms: composition drops the diagonal
  constant_alpha,       // cylinder: alpha replaced by a constant map
  skip_tilde,           // thm2: derived-morphism solver skips the tilde step
  face_table_swap       // every suite: d_0 and d_2 of a 2-simplex trade places
};
std::string_view mutation_name(Mutation m);
std::optional<Mutation> parse_mutation(std::string_view name);
// The fixtures with the mutation applied to the inputs (face_table_swap);
// unchanged for the other mutations.
FixtureCategory mutate_fixtures(const FixtureCategory& f, Mutation m);

// The canonical structures and derived morphisms of a fixture category,
// built on demand and memoized. Probes of the structure on (X, K) are the
// objects, every X (.) L or X^L, and every Y (.) K or Y^K.
class Workspace {
 public:
  explicit Workspace(FixtureCategory f, SolverVariant solver = SolverVariant::standard);

  Enrichment& enrichment() { return *e_; }
  const FixtureCategory& fixtures() const { return f_; }
  int level() const { return f_.level; }

  SSetPtr cylinder_object(const SSetPtr& x, const SSetPtr& k);
  SSetPtr path_object(const SSetPtr& x, const SSetPtr& k);
  const CylinderStructure& cylinder(const SSetPtr& x, const SSetPtr& k);
  const PathStructure& path(const SSetPtr& x, const SSetPtr& k);

  // Every map a -> b, in enumeration order.
  const std::vector<SimplicialMap>& maps(const SSetPtr& a, const SSetPtr& b);

  // X (.) u, u (.) K, X^u and u^K. Reports of first solves accumulate in
  // derived_log().
  const SimplicialMap& tensor_sset(const SSetPtr& x, const SimplicialMap& u);
  const SimplicialMap& tensor_object(const SimplicialMap& u, const SSetPtr& k);
  const SimplicialMap& cotensor_sset(const SSetPtr& x, const SimplicialMap& u);
  const SimplicialMap& cotensor_object(const SimplicialMap& u, const SSetPtr& k);
  const VerificationReport& derived_log() const { return log_; }

 private:
  // (family, X or K, u.dom, u.cod, u's assignment)
  using Key = std::tuple<int, const FiniteSimplicialSet*, const FiniteSimplicialSet*,
                         const FiniteSimplicialSet*, std::vector<SimplexRef>>;
  std::vector<SSetPtr> probes_for(const SSetPtr& x, const SSetPtr& k, bool cylinder);
  const SimplicialMap& remember(const Key& key, DerivedMorphism d);

  FixtureCategory f_;
  SolverVariant solver_;
  std::unique_ptr<Enrichment> e_;
  std::map<std::pair<const FiniteSimplicialSet*, const FiniteSimplicialSet*>, CylinderStructure>
      cylinders_;
  std::map<std::pair<const FiniteSimplicialSet*, const FiniteSimplicialSet*>, PathStructure>
      paths_;
  std::map<std::pair<const FiniteSimplicialSet*, const FiniteSimplicialSet*>,
           std::vector<SimplicialMap>>
      maps_;
  std::map<Key, SimplicialMap> derived_;
  VerificationReport log_{"derived"};
};

// Identity and composition laws of the four derived families, the squares
// defining them, both interchange identities, and equality with the direct
// constructions X (.) u = id x u, u (.) K = u x id, X^u = F(u, X),
// u^K = F(K, u).
VerificationReport verify_functoriality(const FixtureCategory& f,
                                        SolverVariant solver = SolverVariant::standard);

// The six naturality equations of phi and psi, each slot separately plus one
// instance moving all three slots at once. Each equation is compared as a
// map into F(K, C) and again after sharp, and the two verdicts must agree.
VerificationReport verify_naturality(const FixtureCategory& f);

// sSet(K, F(X, Y)) = sSet(X (.) K, Y), sSet(K, F(Y, X)) = sSet(Y, X^K) and
// sSet(X (.) K, Y) = sSet(X, Y^K) through level 0 of phi and psi: equal
// counts, round trips, and naturality of the first two in each variable.
VerificationReport verify_adjunctions(const FixtureCategory& f);

// phi_0(f~) = (F(X, f) alpha)~, psi_0(f~) = (F(f, X) beta)~, and the
// levelwise squares relating alpha or beta to u (.) K or u^K.
VerificationReport verify_lemma_squares(const FixtureCategory& f);

// Canonical cylinders and path objects on every (X, K), against their
// definitions, with the fixture objects as probes.
VerificationReport verify_cylinders(const FixtureCategory& f, Mutation m = Mutation::none);
VerificationReport verify_paths(const FixtureCategory& f);

// Shuffles every canonical structure along a relabelling (and, on X x X,
// along the swap) and recovers the isomorphism with uniqueness_solve.
VerificationReport verify_uniqueness(const FixtureCategory& f);

struct SuiteConfig {
  std::vector<Suite> suites;  // every suite when empty
  std::optional<std::string> fixtures;  // per-suite defaults when empty
  std::optional<int> level;
  Mutation mutation = Mutation::none;
};

// One suite, after validating the fixtures and auditing them.
VerificationReport run_one(Suite s, const FixtureCategory& f, Mutation m = Mutation::none);
// The configured suites in run order, merged.
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace cylpath

#endif  // CYLPATH_HARNESS_HPP_
