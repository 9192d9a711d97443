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

// Exhaustive enumeration of simplicial maps X -> Y.
//
// Backtracking over the nondegenerate simplices of X, each vertex followed
// by the simplices whose last vertex it is. A simplex x of dimension m > 0
// may only go to an m-simplex y whose faces are the images of the faces of
// x; candidates are bucketed by d_0 and tried in dense order of Y_m.
// enumerate_maps sorts its output lexicographically by the dense indices of
// the images of x_0, x_1, ...

#ifndef CYLPATH_ENUMERATE_HPP_
#define CYLPATH_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "cylpath/simplicial_map.hpp"

namespace cylpath {

// Calls visit for every map until it returns false. The assignment vector
// is only valid during the call. Maps out of a truncated X carry
// bound = X.trunc_dim().
//
// Throws std::invalid_argument when X has nondegenerate simplices above
// up_to, and TruncationError when Y is not stored up to the top dimension
// of X.
void for_each_map(const SSetPtr& x, const SSetPtr& y,
                  const std::function<bool(const std::vector<SimplexRef>&)>& visit,
                  int up_to = kExact);

std::vector<SimplicialMap> enumerate_maps(const SSetPtr& x, const SSetPtr& y,
                                          int up_to = kExact);
std::uint64_t count_maps(const SSetPtr& x, const SSetPtr& y, int up_to = kExact);

}  // namespace cylpath

#endif  // CYLPATH_ENUMERATE_HPP_
