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

#include "io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cylpath/enumerate.hpp"
#include "cylpath/product.hpp"

namespace cylpath {
namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(CYLPATH_DATA_DIR) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Runs parse and returns the error, failing the test when it parses.
ParseError rejection(const std::string& text) {
  try {
    parse_sset(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return ParseError(0, 0, "");
}

ParseError map_rejection(const std::string& text, Registry& registry) {
  try {
    parse_map(text, registry);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return ParseError(0, 0, "");
}

TEST(SSetDocument, ShippedIntervalHasTheLevelSizesOfAnEdge) {
  const SSetPtr x = parse_sset(slurp("delta1.sset"));
  EXPECT_EQ(x->name(), "interval");
  EXPECT_EQ(x->level_size(0), 2u);
  EXPECT_EQ(x->level_size(1), 3u);
  EXPECT_EQ(x->level_size(2), 4u);
  EXPECT_EQ(count_maps(x, standard_simplex(1)), 3u);
}

TEST(SSetDocument, PrintParsePrintIsByteIdentical) {
  ProductCache cache;
  for (const SSetPtr& x :
       {standard_simplex(0), standard_simplex(2), boundary_simplex(2), horn(2, 1),
        cache.product(standard_simplex(1), standard_simplex(1)),
        cache.product(standard_simplex(2), standard_simplex(1)),
        truncate(standard_simplex(3), 1)}) {
    const std::string once = print_sset(*x);
    const SSetPtr back = parse_sset(once);
    EXPECT_EQ(print_sset(*back), once) << x->name();
    EXPECT_TRUE(validate_sset(*back).ok());
    for (int n = 0; n <= std::min(2, x->trunc_dim()); ++n) {
      EXPECT_EQ(back->level_size(n), x->level_size(n)) << x->name() << " n=" << n;
    }
  }
}

TEST(SSetDocument, HeaderOnlyIsEmpty) {
  const SSetPtr x = parse_sset("sset nothing\n");
  EXPECT_EQ(x->size(), 0u);
  EXPECT_EQ(print_sset(*x), "sset nothing\n");
}

TEST(SSetDocument, CommentsAndBlankLinesAreSkipped) {
  const SSetPtr x = parse_sset("# a point\n\nsset pt\n  simplex   p 0\n");
  EXPECT_EQ(x->size(), 1u);
}

TEST(SSetDocument, DanglingFaceNamesTheMissingId) {
  const auto e = rejection(
      "sset bad\nsimplex 0 0\nsimplex 01 1\nface 01 0 ghost 0\nface 01 1 0 0\n");
  EXPECT_EQ(e.line(), 4);
  EXPECT_EQ(e.column(), 11);
  EXPECT_NE(e.reason().find("'ghost'"), std::string::npos) << e.what();
}

TEST(SSetDocument, RejectsMalformedDeclarations) {
  const std::string head = "sset bad\nsimplex 0 0\nsimplex 1 0\nsimplex 01 1\n";
  EXPECT_EQ(rejection(head + "simplex 0 0\n").line(), 5);
  EXPECT_NE(rejection(head + "face 01 0 1 0,0\nface 01 1 0 0\n").reason().find("dimension mismatch"),
            std::string::npos);
  EXPECT_NE(rejection(head + "face 01 0 1 1\nface 01 1 0 0\n").reason().find("invalid surjection"),
            std::string::npos);
  EXPECT_NE(rejection(head + "face 01 0 1 0\nface 01 0 0 0\n").reason().find("duplicate face"),
            std::string::npos);
  EXPECT_NE(rejection(head + "face 01 0 1 0\n").reason().find("missing face 1"), std::string::npos);
  EXPECT_NE(rejection(head + "face 01 2 1 0\n").reason().find("out of range"), std::string::npos);
  EXPECT_NE(rejection("sset bad\nsimplex x -1\n").reason().find("non-negative"), std::string::npos);
  EXPECT_EQ(rejection("simplex 0 0\n").line(), 1);
  EXPECT_EQ(rejection("sset bad\nvertex 0\n").column(), 1);
}

TEST(SSetDocument, BrokenSimplicialIdentityIsPositionedAtTheSimplex) {
  const SSetPtr bad = with_swapped_faces(standard_simplex(2), standard_simplex(2)->first(2), 0, 2);
  const std::string text = print_sset(*bad);
  const auto e = rejection(text);
  // Line of "simplex 012 2": header, three vertices, three edges, then it.
  EXPECT_EQ(e.line(), 8);
  EXPECT_NE(e.reason().find("simplicial identity"), std::string::npos) << e.what();
}

TEST(MapDocument, ShippedSwapIsAnInvolution) {
  Registry registry;
  const MapDocument doc = parse_map(slurp("swap_square.smap"), registry);
  EXPECT_EQ(doc.name, "swap");
  EXPECT_TRUE(validate_map(doc.map).ok());
  const SSetPtr sq = registry.resolve("delta1*delta1");
  EXPECT_EQ(doc.map.dom, sq);
  EXPECT_TRUE(same_map(compose(doc.map, doc.map), identity_map(sq)));
  EXPECT_TRUE(same_map(doc.map, canonical_iso(IsoKind::swap, sq, sq).forward));
  EXPECT_EQ(print_map(doc.map, doc.name), slurp("swap_square.smap").substr(
                                              slurp("swap_square.smap").find('\n') + 1));
}

TEST(MapDocument, IdentityDocumentParsesToTheIdentity) {
  Registry registry;
  const SSetPtr d2 = registry.resolve("delta2");
  const std::string text = print_map(identity_map(d2), "id");
  EXPECT_TRUE(same_map(parse_map(text, registry).map, identity_map(d2)));
}

TEST(MapDocument, FaceIncompatibleSendIsRejectedWithWitness) {
  Registry registry;
  // 01 -> 01 while vertex 1 -> 0 breaks d_0.
  const std::string text =
      "smap bad delta1 delta1\nsend 0 0 0\nsend 1 0 0\nsend 01 01 0,1\n";
  const auto e = map_rejection(text, registry);
  EXPECT_EQ(e.line(), 4);
  EXPECT_NE(e.reason().find("d_0"), std::string::npos) << e.what();
}

TEST(MapDocument, RejectsMissingAndUnknown) {
  Registry registry;
  EXPECT_NE(map_rejection("smap m delta1 delta0\nsend 0 0 0\n", registry)
                .reason()
                .find("no send for simplex '1'"),
            std::string::npos);
  const auto unknown = map_rejection("smap m nowhere delta0\n", registry);
  EXPECT_EQ(unknown.column(), 8);
  EXPECT_NE(map_rejection("smap m delta1 delta0\nsend 0 0 0\nsend 0 0 0\n", registry)
                .reason()
                .find("duplicate send"),
            std::string::npos);
}

TEST(Registry, NamesDenoteOneObject) {
  Registry registry;
  EXPECT_EQ(registry.resolve("bdelta2"), registry.resolve("bdelta2"));
  const SSetPtr p = registry.resolve("(delta1*delta0)*delta1");
  EXPECT_EQ(p, registry.resolve("(delta1*delta0)*delta1"));
  EXPECT_EQ(left_factor(*p), registry.resolve("delta1*delta0"));
  EXPECT_EQ(registry.resolve("horn2_1")->name(), "horn2_1");
  EXPECT_THROW(registry.resolve("delta1*"), std::invalid_argument);
  EXPECT_THROW(registry.resolve("(delta1"), std::invalid_argument);
  EXPECT_THROW(registry.resolve("blob"), std::invalid_argument);
  EXPECT_THROW(registry.add(standard_simplex(1)), std::invalid_argument);
  registry.add(parse_sset("sset blob\nsimplex p 0\n"));
  EXPECT_EQ(registry.resolve("blob*blob")->size(), 1u);
  EXPECT_THROW(registry.add(parse_sset("sset blob\n")), std::invalid_argument);
}

}  // namespace
}  // namespace cylpath
