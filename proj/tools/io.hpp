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

// Text documents for simplicial sets (.sset) and maps (.smap).
//
// Both formats are line based. Tokens are separated by blank space; blank
// lines and lines starting with '#' are skipped. A degeneracy is written as
// the value list of its surjection, comma separated ("0,0,1").
//
//   sset <name> [trunc <n>]
//   simplex <label> <dim>
//   face <label> <i> <target-label> <values>
//
//   smap <name> <dom> <cod>
//   send <dom-label> <cod-label> <values>
//
// Faces and sends may refer to simplices declared later. Printing emits
// simplices in id order, then their faces in id and index order, so
// print(parse(print(x))) == print(x).

#ifndef CYLPATH_TOOLS_IO_HPP_
#define CYLPATH_TOOLS_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "cylpath/simplicial_map.hpp"
#include "registry.hpp"

namespace cylpath {

// A rejected document, positioned at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& reason)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + reason),
        line_(line),
        column_(column),
        reason_(reason) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  int column_;
  std::string reason_;
};

// Throws std::invalid_argument when a name or label is not a single token.
std::string print_sset(const FiniteSimplicialSet& x);
// The object must satisfy the simplicial identities; violations are
// reported at the declaration of the offending simplex.
SSetPtr parse_sset(std::string_view text);

struct MapDocument {
  std::string name;
  SimplicialMap map;
};

std::string print_map(const SimplicialMap& f, std::string_view name);
// dom and cod are resolved in `registry`. Every nondegenerate simplex of dom
// needs exactly one send, and sends must commute with faces.
MapDocument parse_map(std::string_view text, Registry& registry);

}  // namespace cylpath

#endif  // CYLPATH_TOOLS_IO_HPP_
