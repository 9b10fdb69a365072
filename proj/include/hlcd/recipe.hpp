/*
 * Copyright 2026 The hlcd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once
#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hlcd/code.hpp"
#include "hlcd/enumerator.hpp"
#include "hlcd/error.hpp"
#include "hlcd/qmat.hpp"

namespace hlcd {

enum class RecipeOp { matrix, identity_augment, puncture, shorten, extend, row_subcode, simplex };

inline const char* to_string(RecipeOp op) {
  switch (op) {
    case RecipeOp::matrix: return "matrix";
    case RecipeOp::identity_augment: return "identity_augment";
    case RecipeOp::puncture: return "puncture";
    case RecipeOp::shorten: return "shorten";
    case RecipeOp::extend: return "extend";
    case RecipeOp::row_subcode: return "row_subcode";
    case RecipeOp::simplex: return "simplex";
  }
  return "?";
}

inline bool is_root_op(RecipeOp op) {
  return op == RecipeOp::matrix || op == RecipeOp::identity_augment || op == RecipeOp::simplex;
}

struct Expected {
  std::optional<std::size_t> n, k, d;
  std::optional<bool> lcd;
  std::optional<std::vector<std::uint64_t>> enumerator;  // full printed distribution
  std::optional<std::vector<std::uint64_t>> enum_prefix;  // printed leading terms only
  std::size_t enum_prefix_len = 0;                        // highest exponent printed + 1
};

struct Recipe {
  std::string id;
  RecipeOp op = RecipeOp::matrix;
  std::optional<std::string> parent;
  std::optional<std::string> matrix_ref;
  CoordSet coords;
  std::vector<std::size_t> rows;  // row_subcode, 1-based
  std::size_t simplex_k = 0;
  bool published = true;  // false: generator never printed
  Expected expected;
  std::string provenance;
  std::string source;  // file:line of the block
};

namespace detail {

inline std::vector<std::size_t> parse_index_list(const std::string& v, const std::string& where) {
  std::vector<std::size_t> out;
  std::stringstream ss(v);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    const auto dots = tok.find("..");
    try {
      if (dots != std::string::npos) {
        const std::size_t a = std::stoul(tok.substr(0, dots)), b = std::stoul(tok.substr(dots + 2));
        if (a > b) throw ParseError(where + ": empty range '" + tok + "'");
        for (std::size_t i = a; i <= b; ++i) out.push_back(i);
      } else {
        std::size_t used = 0;
        out.push_back(std::stoul(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      }
    } catch (const std::logic_error&) {
      throw ParseError(where + ": bad index '" + tok + "'");
    }
  }
  return out;
}

inline std::size_t parse_count(const std::string& v, const std::string& where) {
  std::size_t used = 0;
  unsigned long x = 0;
  try {
    x = std::stoul(v, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != v.size() || v[0] == '-') throw ParseError(where + ": bad count '" + v + "'");
  return x;
}

inline bool parse_bool(const std::string& v, const std::string& where) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ParseError(where + ": expected true or false, got '" + v + "'");
}

inline RecipeOp parse_op(const std::string& v, const std::string& where) {
  for (auto op : {RecipeOp::matrix, RecipeOp::identity_augment, RecipeOp::puncture, RecipeOp::shorten,
                  RecipeOp::extend, RecipeOp::row_subcode, RecipeOp::simplex})
    if (v == to_string(op)) return op;
  throw ParseError(where + ": unknown op '" + v + "'");
}

inline void finish_recipe(Recipe& r, const std::map<std::string, std::string>& kv, const std::string& where) {
  std::string enum_text, prefix_text;
  bool have_op = false;
  for (const auto& [key, v] : kv) {
    if (key == "id") r.id = v;
    else if (key == "op") r.op = parse_op(v, where), have_op = true;
    else if (key == "parent") r.parent = v;
    else if (key == "matrix") r.matrix_ref = v;
    else if (key == "coords") r.coords = CoordSet(parse_index_list(v, where));
    else if (key == "rows") r.rows = parse_index_list(v, where);
    else if (key == "simplex_k") r.simplex_k = parse_count(v, where);
    else if (key == "published") r.published = parse_bool(v, where);
    else if (key == "expected_n") r.expected.n = parse_count(v, where);
    else if (key == "expected_k") r.expected.k = parse_count(v, where);
    else if (key == "expected_d") r.expected.d = parse_count(v, where);
    else if (key == "expected_lcd") r.expected.lcd = parse_bool(v, where);
    else if (key == "expected_enum") enum_text = v;
    else if (key == "expected_enum_prefix") prefix_text = v;
    else if (key == "provenance") r.provenance = v;
    else throw ParseError(where + ": unknown key '" + key + "'");
  }
  if (r.id.empty()) throw ParseError(where + ": recipe without id");
  if (!have_op) throw ParseError(where + ": recipe '" + r.id + "' has no op");
  if (is_root_op(r.op) == r.parent.has_value())
    throw ParseError(where + ": op " + to_string(r.op) + (r.parent ? " must not have" : " needs") + " a parent");
  if ((r.op == RecipeOp::matrix || r.op == RecipeOp::identity_augment) && r.published && !r.matrix_ref)
    throw ParseError(where + ": recipe '" + r.id + "' needs matrix=");
  if ((r.op == RecipeOp::puncture || r.op == RecipeOp::shorten) && r.coords.empty())
    throw ParseError(where + ": recipe '" + r.id + "' needs coords=");
  if (r.op == RecipeOp::row_subcode && r.rows.empty()) throw ParseError(where + ": row_subcode needs rows=");
  if (r.op == RecipeOp::simplex && r.simplex_k < 2) throw ParseError(where + ": simplex needs simplex_k >= 2");
  if (!enum_text.empty() || !prefix_text.empty()) {
    if (!r.expected.n) throw ParseError(where + ": expected enumerator needs expected_n");
    try {
      if (!enum_text.empty()) r.expected.enumerator = parse_weight_polynomial(enum_text, *r.expected.n);
      if (!prefix_text.empty()) {
        if (prefix_text.size() >= 3 && prefix_text.ends_with("..."))
          prefix_text.resize(prefix_text.size() - 3);
        while (!prefix_text.empty() && (prefix_text.back() == '+' || prefix_text.back() == ' ')) prefix_text.pop_back();
        auto p = parse_weight_polynomial(prefix_text, *r.expected.n);
        std::size_t len = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
          if (p[i]) len = i + 1;
        r.expected.enum_prefix = std::move(p);
        r.expected.enum_prefix_len = len;
      }
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
}

}  // namespace detail

// Blank-line separated key=value blocks; '#' starts a comment line.
inline std::vector<Recipe> parse_recipes(std::istream& in, const std::string& source = "<recipes>") {
  std::vector<Recipe> out;
  std::map<std::string, std::string> kv;
  std::string line, where;
  std::size_t lineno = 0;
  auto flush = [&] {
    if (kv.empty()) return;
    Recipe r;
    r.source = where;
    detail::finish_recipe(r, kv, where);
    out.push_back(std::move(r));
    kv.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      flush();
      continue;
    }
    if (line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(source + ":" + std::to_string(lineno) + ": expected key=value");
    if (kv.empty()) where = source + ":" + std::to_string(lineno);
    std::string key = line.substr(first, eq - first);
    while (!key.empty() && key.back() == ' ') key.pop_back();
    if (kv.count(key)) throw ParseError(source + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv[key] = line.substr(eq + 1);
  }
  flush();
  return out;
}

struct KnownDiscrepancy {
  std::string tag;
  std::string note;
};

/// Everything under a data directory: matrices, recipes and the discrepancy ledger.
struct Registry {
  std::map<std::string, QmatFile> matrices;
  std::map<std::string, Recipe> recipes;  // ordered by id
  std::map<std::string, KnownDiscrepancy> known;

  void add_recipe(Recipe r) {
    if (recipes.count(r.id)) throw CorpusError("duplicate recipe id '" + r.id + "' at " + r.source);
    recipes.emplace(r.id, std::move(r));
  }
};

inline std::map<std::string, KnownDiscrepancy> parse_known_discrepancies(std::istream& in,
                                                                         const std::string& source) {
  std::map<std::string, KnownDiscrepancy> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw ParseError(source + ":" + std::to_string(lineno) + ": expected id<TAB>tag<TAB>note");
    out[line.substr(0, t1)] = {line.substr(t1 + 1, t2 - t1 - 1), line.substr(t2 + 1)};
  }
  return out;
}

inline Registry load_registry(const std::filesystem::path& data_dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(data_dir)) throw CorpusError("data directory not found: " + data_dir.string());
  Registry reg;
  auto sorted_files = [](const fs::path& dir, const std::string& ext) {
    std::vector<fs::path> files;
    if (fs::is_directory(dir))
      for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ext) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
  };
  for (const auto& p : sorted_files(data_dir / "matrices", ".qmat")) {
    QmatFile q = load_qmat(p.string());
    if (q.id != p.stem().string())
      throw CorpusError(p.string() + ": header id '" + q.id + "' does not match the file name");
    reg.matrices.emplace(q.id, std::move(q));
  }
  for (const auto& p : sorted_files(data_dir / "recipes", ".rcp")) {
    std::ifstream f(p);
    if (!f) throw CorpusError("cannot open " + p.string());
    for (auto& r : parse_recipes(f, p.string())) reg.add_recipe(std::move(r));
  }
  const fs::path ledger = data_dir / "known_discrepancies.tsv";
  if (fs::exists(ledger)) {
    std::ifstream f(ledger);
    reg.known = parse_known_discrepancies(f, ledger.string());
  }
  return reg;
}

/// Outcome of resolving one recipe: a code, or the reason it cannot be built.
struct Resolution {
  std::optional<LinearCode> code;
  std::string unavailable;  // set when !code, e.g. the unpublished ancestor

  bool available() const { return code.has_value(); }
};

/**
 * Builds recipe codes on demand, memoizing every node. Unpublished roots and
 * their descendants resolve to an unavailable marker; a cycle, an unknown
 * parent or a missing matrix throws CorpusError.
 */
class Resolver {
 public:
  explicit Resolver(const Registry& reg) : reg_(reg) {}

  const Resolution& resolve(const std::string& id) {
    if (auto it = done_.find(id); it != done_.end()) return it->second;
    auto rit = reg_.recipes.find(id);
    if (rit == reg_.recipes.end()) throw CorpusError("unknown recipe '" + id + "'");
    if (!active_.insert(id).second) throw CorpusError("recipe cycle through '" + id + "'");
    Resolution res;
    try {
      res = build(rit->second);
    } catch (...) {
      active_.erase(id);
      throw;
    }
    active_.erase(id);
    return done_.emplace(id, std::move(res)).first->second;
  }

 private:
  const Gf4Matrix& matrix(const Recipe& r) {
    auto it = reg_.matrices.find(*r.matrix_ref);
    if (it == reg_.matrices.end())
      throw CorpusError("recipe '" + r.id + "' refers to missing matrix file '" + *r.matrix_ref + ".qmat'");
    return it->second.matrix;
  }

  Resolution build(const Recipe& r) {
    if (!r.published) return {std::nullopt, "generator of " + r.id + " was never published"};
    switch (r.op) {
      case RecipeOp::matrix: return {LinearCode::from_generator(matrix(r), r.id), {}};
      case RecipeOp::identity_augment: return {identity_augment(matrix(r), r.id), {}};
      case RecipeOp::simplex: return {simplex(r.simplex_k).with_label(r.id), {}};
      default: break;
    }
    const Resolution& parent = resolve(*r.parent);
    if (!parent.available()) return {std::nullopt, parent.unavailable};
    const LinearCode& p = *parent.code;
    switch (r.op) {
      case RecipeOp::puncture: return {puncture(p, r.coords).with_label(r.id), {}};
      case RecipeOp::shorten: return {shorten(p, r.coords).with_label(r.id), {}};
      case RecipeOp::extend: return {extend_parity(p).with_label(r.id), {}};
      case RecipeOp::row_subcode: return {row_subcode(p, r.rows).with_label(r.id), {}};
      default: break;
    }
    throw CorpusError("unhandled op in recipe '" + r.id + "'");
  }

  const Registry& reg_;
  std::map<std::string, Resolution> done_;
  std::set<std::string> active_;
};

// One-shot convenience; prefer a shared Resolver when resolving many ids.
inline Resolution resolve_recipe(const std::string& id, const Registry& reg) {
  Resolver r(reg);
  return r.resolve(id);
}

}  // namespace hlcd
