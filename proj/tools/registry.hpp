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

// Named simplicial sets for the command line.
//
// A name is a product expression over atoms, left associative, with
// parentheses: "delta1*delta1", "(delta1*delta0)*delta1". Atoms are the
// built-ins deltaN, bdeltaN, hornN_K and every added object.

#ifndef CYLPATH_TOOLS_REGISTRY_HPP_
#define CYLPATH_TOOLS_REGISTRY_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "cylpath/product.hpp"

namespace cylpath {

class Registry {
 public:
  Registry() : cache_(std::make_shared<ProductCache>()) {}

  // Throws std::invalid_argument when the name is already taken.
  void add(SSetPtr x);
  // Throws std::invalid_argument for unknown atoms and malformed expressions.
  SSetPtr resolve(std::string_view expr);

  const std::shared_ptr<ProductCache>& cache() const { return cache_; }

 private:
  SSetPtr atom(std::string_view name);

  std::shared_ptr<ProductCache> cache_;
  std::map<std::string, SSetPtr, std::less<>> added_;
};

}  // namespace cylpath

#endif  // CYLPATH_TOOLS_REGISTRY_HPP_
