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

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace cylpath {

namespace {

struct Token {
  std::string_view text;
  int column = 1;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      const std::size_t from = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > from) line.tokens.push_back({raw.substr(from, i - from), static_cast<int>(from) + 1});
    }
    if (!line.tokens.empty() && !line.tokens.front().text.starts_with('#')) {
      lines.push_back(std::move(line));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void error_at(const Line& line, const Token& token, const std::string& reason) {
  throw ParseError(line.number, token.column, reason);
}

void expect_arity(const Line& line, std::size_t n, std::string_view shape) {
  if (line.tokens.size() != n) {
    const Token& at = line.tokens.size() > n ? line.tokens[n] : line.tokens.back();
    error_at(line, at, "expected '" + std::string(shape) + "'");
  }
}

int natural(const Line& line, const Token& t, std::string_view what) {
  int v = 0;
  const auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || end != t.text.data() + t.text.size() || v < 0) {
    error_at(line, t, std::string(what) + " must be a non-negative integer, got '" +
                          std::string(t.text) + "'");
  }
  return v;
}

// The surjection [source_dim] ->> [target_dim] written as `t`.
MonotoneMap surjection(const Line& line, const Token& t, int source_dim, int target_dim) {
  std::vector<int> values;
  std::size_t from = 0;
  while (from <= t.text.size()) {
    std::size_t comma = t.text.find(',', from);
    if (comma == std::string_view::npos) comma = t.text.size();
    Token part{t.text.substr(from, comma - from), t.column + static_cast<int>(from)};
    values.push_back(natural(line, part, "degeneracy value"));
    from = comma + 1;
  }
  if (static_cast<int>(values.size()) != source_dim + 1) {
    error_at(line, t,
             "dimension mismatch: expected " + std::to_string(source_dim + 1) +
                 " degeneracy values, got " + std::to_string(values.size()));
  }
  std::optional<MonotoneMap> m;
  try {
    m.emplace(target_dim, values);
  } catch (const std::invalid_argument&) {
  }
  if (!m || !m->is_surjective()) {
    error_at(line, t,
             "invalid surjection list '" + std::string(t.text) + "' onto [" +
                 std::to_string(target_dim) + "]");
  }
  return *m;
}

std::string values_of(const MonotoneMap& m) {
  std::string out;
  for (int v : m.values()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

const std::string& token_checked(const std::string& s, std::string_view what) {
  if (s.empty() || s.starts_with('#') ||
      s.find_first_of(" \t\r\n") != std::string::npos) {
    throw std::invalid_argument(std::string(what) + " '" + s + "' is not a single token");
  }
  return s;
}

}  // namespace

std::string print_sset(const FiniteSimplicialSet& x) {
  std::ostringstream out;
  out << "sset " << token_checked(x.name(), "name");
  if (!x.is_exact()) out << " trunc " << x.trunc_dim();
  out << '\n';
  for (SimplexId id = 0; id < x.size(); ++id) {
    out << "simplex " << token_checked(x.label(id), "label") << ' ' << x.dim(id) << '\n';
  }
  for (SimplexId id = 0; id < x.size(); ++id) {
    if (x.dim(id) == 0) continue;
    const auto faces = x.faces(id);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      out << "face " << x.label(id) << ' ' << i << ' ' << x.label(faces[i].base) << ' '
          << values_of(faces[i].deg) << '\n';
    }
  }
  return out.str();
}

SSetPtr parse_sset(std::string_view text) {
  const std::vector<Line> lines = lex(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'sset <name>' header");
  const Line& head = lines.front();
  if (head.tokens[0].text != "sset") error_at(head, head.tokens[0], "expected 'sset <name>'");
  int trunc = kExact;
  if (head.tokens.size() == 4 && head.tokens[2].text == "trunc") {
    trunc = natural(head, head.tokens[3], "truncation");
  } else {
    expect_arity(head, 2, "sset <name> [trunc <n>]");
  }
  SimplicialSetBuilder builder(std::string(head.tokens[1].text), trunc);

  struct Declared {
    SimplexId id;
    int dim;
    const Line* line;
  };
  std::map<std::string_view, Declared> simplices;
  std::vector<std::string_view> order;
  std::vector<const Line*> face_lines;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const Token& kw = line.tokens[0];
    if (kw.text == "simplex") {
      expect_arity(line, 3, "simplex <label> <dim>");
      const Token& label = line.tokens[1];
      const int dim = natural(line, line.tokens[2], "dimension");
      if (simplices.contains(label.text)) {
        error_at(line, label, "duplicate simplex '" + std::string(label.text) + "'");
      }
      simplices.emplace(label.text,
                        Declared{builder.add_simplex(dim, std::string(label.text)), dim, &line});
      order.push_back(label.text);
    } else if (kw.text == "face") {
      face_lines.push_back(&line);
    } else {
      error_at(line, kw, "unknown declaration '" + std::string(kw.text) + "'");
    }
  }

  std::map<std::pair<std::string_view, int>, bool> seen;
  for (const Line* line : face_lines) {
    expect_arity(*line, 5, "face <label> <i> <target> <values>");
    const auto& t = line->tokens;
    const auto s = simplices.find(t[1].text);
    if (s == simplices.end()) error_at(*line, t[1], "unknown simplex '" + std::string(t[1].text) + "'");
    const int i = natural(*line, t[2], "face index");
    if (s->second.dim == 0) error_at(*line, t[1], "a vertex has no faces");
    if (i > s->second.dim) {
      error_at(*line, t[2], "face index " + std::to_string(i) + " out of range for a " +
                                std::to_string(s->second.dim) + "-simplex");
    }
    if (!seen.emplace(std::pair{t[1].text, i}, true).second) {
      error_at(*line, t[2], "duplicate face " + std::to_string(i) + " of '" +
                                std::string(t[1].text) + "'");
    }
    const auto target = simplices.find(t[3].text);
    if (target == simplices.end()) {
      error_at(*line, t[3], "unknown simplex '" + std::string(t[3].text) + "'");
    }
    const MonotoneMap deg = surjection(*line, t[4], s->second.dim - 1, target->second.dim);
    builder.set_face(s->second.id, i, SimplexRef{target->second.id, deg});
  }
  for (const auto& label : order) {
    const Declared& d = simplices.at(label);
    for (int i = 0; i < (d.dim == 0 ? 0 : d.dim + 1); ++i) {
      if (!seen.contains({label, i})) {
        error_at(*d.line, d.line->tokens[1],
                 "missing face " + std::to_string(i) + " of '" + std::string(label) + "'");
      }
    }
  }

  SSetPtr x;
  try {
    x = builder.build();
  } catch (const std::invalid_argument& e) {
    error_at(head, head.tokens[0], e.what());
  }
  // d_i d_j = d_{j-1} d_i for i < j, reported at the simplex's declaration.
  for (const auto& label : order) {
    const Declared& d = simplices.at(label);
    const SimplexRef s = x->nondegenerate(builder.final_id(d.id));
    for (int j = 1; j <= d.dim && d.dim >= 2; ++j) {
      for (int i = 0; i < j; ++i) {
        const SimplexRef a = face(*x, face(*x, s, j), i);
        const SimplexRef b = face(*x, face(*x, s, i), j - 1);
        if (a != b) {
          error_at(*d.line, d.line->tokens[1],
                   "simplicial identity fails on '" + std::string(label) + "': d_" +
                       std::to_string(i) + " d_" + std::to_string(j) + " = " +
                       format_simplex(*x, a) + " but d_" + std::to_string(j - 1) + " d_" +
                       std::to_string(i) + " = " + format_simplex(*x, b));
        }
      }
    }
  }
  const VerificationReport report = validate_sset(*x);
  if (const CheckRecord* bad = report.first_failure()) {
    error_at(head, head.tokens[0], bad->witness);
  }
  return x;
}

std::string print_map(const SimplicialMap& f, std::string_view name) {
  std::ostringstream out;
  out << "smap " << token_checked(std::string(name), "name") << ' ' << f.dom->name() << ' '
      << f.cod->name() << '\n';
  for (SimplexId id = 0; id < f.assign.size(); ++id) {
    const SimplexRef& s = f.assign[id];
    out << "send " << f.dom->label(id) << ' ' << f.cod->label(s.base) << ' ' << values_of(s.deg)
        << '\n';
  }
  return out.str();
}

MapDocument parse_map(std::string_view text, Registry& registry) {
  const std::vector<Line> lines = lex(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'smap <name> <dom> <cod>' header");
  const Line& head = lines.front();
  if (head.tokens[0].text != "smap") {
    error_at(head, head.tokens[0], "expected 'smap <name> <dom> <cod>'");
  }
  expect_arity(head, 4, "smap <name> <dom> <cod>");
  const auto resolve = [&](const Token& t) {
    try {
      return registry.resolve(t.text);
    } catch (const std::invalid_argument& e) {
      error_at(head, t, e.what());
    }
  };
  MapDocument doc{std::string(head.tokens[1].text), {}};
  SimplicialMap& f = doc.map;
  f.dom = resolve(head.tokens[2]);
  f.cod = resolve(head.tokens[3]);
  f.bound = f.dom->is_exact() ? kExact : f.dom->trunc_dim();

  std::vector<std::optional<SimplexRef>> sends(f.dom->size());
  std::vector<const Line*> where(f.dom->size(), nullptr);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto& t = line.tokens;
    if (t[0].text != "send") error_at(line, t[0], "unknown declaration '" + std::string(t[0].text) + "'");
    expect_arity(line, 4, "send <dom-label> <cod-label> <values>");
    const auto a = f.dom->find(t[1].text);
    if (!a) error_at(line, t[1], "unknown simplex '" + std::string(t[1].text) + "' of " + f.dom->name());
    const auto b = f.cod->find(t[2].text);
    if (!b) error_at(line, t[2], "unknown simplex '" + std::string(t[2].text) + "' of " + f.cod->name());
    if (sends[*a]) error_at(line, t[1], "duplicate send of '" + std::string(t[1].text) + "'");
    sends[*a] = SimplexRef{*b, surjection(line, t[3], f.dom->dim(*a), f.cod->dim(*b))};
    where[*a] = &line;
  }
  for (SimplexId id = 0; id < sends.size(); ++id) {
    if (!sends[id]) {
      throw ParseError(lines.back().number + 1, 1,
                       "no send for simplex '" + f.dom->label(id) + "'");
    }
    f.assign.push_back(*sends[id]);
  }
  // Sends must commute with faces; reported at the offending send.
  for (SimplexId id = 0; id < f.assign.size(); ++id) {
    const int n = f.dom->dim(id);
    for (int i = 0; n > 0 && i <= n; ++i) {
      const SimplexRef lhs = f(face(*f.dom, f.dom->nondegenerate(id), i));
      const SimplexRef rhs = face(*f.cod, f.assign[id], i);
      if (lhs != rhs) {
        error_at(*where[id], where[id]->tokens[2],
                 "send of '" + f.dom->label(id) + "' does not commute with d_" +
                     std::to_string(i) + ": f(d_" + std::to_string(i) + " x) = " +
                     format_simplex(*f.cod, lhs) + " but d_" + std::to_string(i) +
                     " f(x) = " + format_simplex(*f.cod, rhs));
      }
    }
  }
  const VerificationReport report = validate_map(f);
  if (const CheckRecord* bad = report.first_failure()) {
    error_at(head, head.tokens[0], bad->witness);
  }
  return doc;
}

}  // namespace cylpath
