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

#include "registry.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <optional>
#include <stdexcept>

namespace cylpath {

namespace {

// Built-in atoms stay below this dimension; larger ones are never useful
// at desk scale and would only invite runaway enumeration.
constexpr int kMaxBuiltinDim = 8;

std::optional<int> number(std::string_view s) {
  int v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) return std::nullopt;
  if (v < 0 || v > kMaxBuiltinDim) return std::nullopt;
  return v;
}

SSetPtr builtin(std::string_view name) {
  if (name.starts_with("delta")) {
    if (auto n = number(name.substr(5))) return standard_simplex(*n);
  } else if (name.starts_with("bdelta")) {
    if (auto n = number(name.substr(6)); n && *n >= 1) return boundary_simplex(*n);
  } else if (name.starts_with("horn")) {
    const auto rest = name.substr(4);
    const auto us = rest.find('_');
    if (us != std::string_view::npos) {
      const auto n = number(rest.substr(0, us));
      const auto k = number(rest.substr(us + 1));
      if (n && k && *n >= 1 && *k <= *n) return horn(*n, *k);
    }
  }
  return nullptr;
}

}  // namespace

void Registry::add(SSetPtr x) {
  const std::string& name = x->name();
  if (builtin(name) || name.find_first_of("*()") != std::string::npos) {
    throw std::invalid_argument("object name '" + name + "' is reserved");
  }
  if (added_.contains(name)) {
    throw std::invalid_argument("object '" + name + "' is already registered");
  }
  added_.emplace(name, std::move(x));
}

SSetPtr Registry::atom(std::string_view name) {
  if (auto it = added_.find(name); it != added_.end()) return it->second;
  // Built-ins are memoized so that a name always denotes one object.
  if (SSetPtr b = builtin(name)) return added_.emplace(std::string(name), b).first->second;
  throw std::invalid_argument("unknown object '" + std::string(name) + "'");
}

SSetPtr Registry::resolve(std::string_view expr) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) -> SSetPtr {
    throw std::invalid_argument("object expression '" + std::string(expr) + "': " + why +
                                " at offset " + std::to_string(pos));
  };
  // term := atom | '(' product ')'; product := term ('*' term)*
  std::function<SSetPtr()> product_expr;
  const auto term = [&]() -> SSetPtr {
    if (pos < expr.size() && expr[pos] == '(') {
      ++pos;
      SSetPtr inner = product_expr();
      if (pos >= expr.size() || expr[pos] != ')') return fail("expected ')'");
      ++pos;
      return inner;
    }
    const std::size_t start = pos;
    while (pos < expr.size() && expr[pos] != '*' && expr[pos] != '(' && expr[pos] != ')') ++pos;
    if (pos == start) return fail("expected an object name");
    return atom(expr.substr(start, pos - start));
  };
  product_expr = [&]() -> SSetPtr {
    SSetPtr acc = term();
    while (pos < expr.size() && expr[pos] == '*') {
      ++pos;
      acc = cache_->product(acc, term());
    }
    return acc;
  };
  SSetPtr out = product_expr();
  if (pos != expr.size()) return fail("unexpected '" + std::string(1, expr[pos]) + "'");
  return out;
}

}  // namespace cylpath
