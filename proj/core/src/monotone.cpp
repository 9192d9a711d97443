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

#include "cylpath/monotone.hpp"

#include <stdexcept>
#include <string>

namespace cylpath {
namespace {

[[noreturn, gnu::noinline]] void bad_dim(int d, const char* what) {
  throw std::invalid_argument(std::string(what) + " dimension " + std::to_string(d) +
                              " outside [0, " + std::to_string(kMaxDim) + "]");
}

inline void check_dim(int d, const char* what) {
  if (d < 0 || d > kMaxDim) [[unlikely]] bad_dim(d, what);
}

// Recursive lexicographic enumeration of weakly increasing sequences.
void enumerate(int n, int m, int pos, int lo, std::vector<int>& cur,
               std::vector<MonotoneMap>& out) {
  if (pos > n) {
    out.emplace_back(m, cur);
    return;
  }
  for (int v = lo; v <= m; ++v) {
    cur[static_cast<std::size_t>(pos)] = v;
    enumerate(n, m, pos + 1, v, cur, out);
  }
}

}  // namespace

MonotoneMap::MonotoneMap(int target_dim, std::span<const int> values) {
  if (values.empty()) throw std::invalid_argument("empty monotone map");
  const int n = static_cast<int>(values.size()) - 1;
  check_dim(n, "source");
  check_dim(target_dim, "target");
  src_ = static_cast<std::uint8_t>(n);
  tgt_ = static_cast<std::uint8_t>(target_dim);
  int prev = 0;
  for (int i = 0; i <= n; ++i) {
    const int x = values[static_cast<std::size_t>(i)];
    if (x < prev || x > target_dim) {
      throw std::invalid_argument("value list is not a monotone map into [" +
                                  std::to_string(target_dim) + "]");
    }
    v_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
    prev = x;
  }
}

MonotoneMap::MonotoneMap(int target_dim, std::initializer_list<int> values)
    : MonotoneMap(target_dim,
                  std::span<const int>(values.begin(), values.size())) {}

MonotoneMap MonotoneMap::unchecked(int target_dim, std::span<const int> values) {
  MonotoneMap f;
  f.src_ = static_cast<std::uint8_t>(values.size() - 1);
  f.tgt_ = static_cast<std::uint8_t>(target_dim);
  for (std::size_t i = 0; i < values.size(); ++i) f.v_[i] = static_cast<std::uint8_t>(values[i]);
  return f;
}

MonotoneMap MonotoneMap::identity(int n) {
  check_dim(n, "identity");
  MonotoneMap f;
  f.src_ = f.tgt_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i <= n; ++i) f.v_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return f;
}

MonotoneMap MonotoneMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("bad coface index");
  check_dim(n, "coface");
  MonotoneMap f;
  f.src_ = static_cast<std::uint8_t>(n - 1);
  f.tgt_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) {
    f.v_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k < i ? k : k + 1);
  }
  return f;
}

MonotoneMap MonotoneMap::codegeneracy(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw std::invalid_argument("bad codegeneracy index");
  check_dim(n + 1, "codegeneracy");
  MonotoneMap f;
  f.src_ = static_cast<std::uint8_t>(n + 1);
  f.tgt_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k <= n + 1; ++k) {
    f.v_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k <= j ? k : k - 1);
  }
  return f;
}

MonotoneMap MonotoneMap::collapse(int n) {
  check_dim(n, "collapse");
  MonotoneMap f;
  f.src_ = static_cast<std::uint8_t>(n);
  return f;
}

MonotoneMap MonotoneMap::vertex(int n, int v) {
  check_dim(n, "vertex");
  if (v < 0 || v > n) throw std::invalid_argument("vertex out of range");
  MonotoneMap f;
  f.tgt_ = static_cast<std::uint8_t>(n);
  f.v_[0] = static_cast<std::uint8_t>(v);
  return f;
}

std::vector<int> MonotoneMap::values() const {
  return std::vector<int>(v_.begin(), v_.begin() + src_ + 1);
}

bool MonotoneMap::is_surjective() const {
  if (v_[0] != 0 || v_[src_] != tgt_) return false;
  for (int i = 1; i <= src_; ++i) {
    if (v_[static_cast<std::size_t>(i)] - v_[static_cast<std::size_t>(i - 1)] > 1) return false;
  }
  return true;
}

bool MonotoneMap::is_injective() const {
  for (int i = 1; i <= src_; ++i) {
    if (v_[static_cast<std::size_t>(i)] == v_[static_cast<std::size_t>(i - 1)]) return false;
  }
  return true;
}

bool MonotoneMap::is_identity() const { return src_ == tgt_ && is_injective(); }

std::size_t MonotoneMap::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ (static_cast<std::uint64_t>(src_) << 8 | tgt_);
  for (int i = 0; i <= src_; ++i) {
    h ^= v_[static_cast<std::size_t>(i)];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.tgt_ != g.src_) {
    throw std::invalid_argument("composing monotone maps with mismatched ordinals");
  }
  MonotoneMap h;
  h.src_ = f.src_;
  h.tgt_ = g.tgt_;
  for (int i = 0; i <= f.src_; ++i) {
    h.v_[static_cast<std::size_t>(i)] = g.v_[f.v_[static_cast<std::size_t>(i)]];
  }
  return h;
}

EpiMonoFactorization factor_monotone(const MonotoneMap& f) {
  EpiMonoFactorization r;
  int k = 0;
  r.injection.v_[0] = f.v_[0];
  for (int i = 1; i <= f.src_; ++i) {
    if (f.v_[static_cast<std::size_t>(i)] != f.v_[static_cast<std::size_t>(i - 1)]) {
      r.injection.v_[static_cast<std::size_t>(++k)] = f.v_[static_cast<std::size_t>(i)];
    }
    r.surjection.v_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k);
  }
  r.surjection.src_ = f.src_;
  r.surjection.tgt_ = static_cast<std::uint8_t>(k);
  r.injection.src_ = static_cast<std::uint8_t>(k);
  r.injection.tgt_ = f.tgt_;
  return r;
}

std::vector<MonotoneMap> monotone_maps(int n, int m) {
  check_dim(n, "source");
  check_dim(m, "target");
  std::vector<MonotoneMap> out;
  std::vector<int> cur(static_cast<std::size_t>(n + 1));
  enumerate(n, m, 0, 0, cur, out);
  return out;
}

std::vector<MonotoneMap> surjections(int n, int m) {
  std::vector<MonotoneMap> out;
  if (m > n || m < 0) return out;
  const std::uint64_t count = binomial(n, m);
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(surjection_unrank(n, m, r));
  return out;
}

std::vector<MonotoneMap> injections(int n, int m) {
  std::vector<MonotoneMap> out;
  for (auto& f : monotone_maps(n, m)) {
    if (f.is_injective()) out.push_back(f);
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

// A surjection [n] ->> [m] is determined by the positions i in 1..n where it
// steps up. Lexicographic order on value lists is lexicographic order on the
// step indicator string with "step" ranked above "stay".
std::uint64_t surjection_rank(const MonotoneMap& s) {
  const int n = s.source_dim();
  int remaining = s.target_dim();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    if (s(i) != s(i - 1)) {
      rank += binomial(n - i, remaining);
      --remaining;
    }
  }
  return rank;
}

MonotoneMap surjection_unrank(int n, int m, std::uint64_t rank) {
  check_dim(n, "source");
  MonotoneMap s;
  s.src_ = static_cast<std::uint8_t>(n);
  s.tgt_ = static_cast<std::uint8_t>(m);
  int remaining = m;
  int cur = 0;
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t stay = binomial(n - i, remaining);
    if (remaining > 0 && rank >= stay) {
      rank -= stay;
      --remaining;
      ++cur;
    }
    s.v_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(cur);
  }
  if (remaining != 0 || rank != 0) throw std::invalid_argument("surjection rank out of range");
  return s;
}

std::string to_string(const MonotoneMap& f) {
  std::string s;
  for (int i = 0; i <= f.source_dim(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(f(i));
  }
  return s;
}

}  // namespace cylpath
