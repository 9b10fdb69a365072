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

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hlcd/error.hpp"

namespace hlcd {

struct BoundsEntry {
  std::optional<std::size_t> lcd_lower;    // LCD bounds table
  std::optional<std::size_t> lcd_upper;
  bool improved = false;                   // printed as a new construction
  std::optional<std::size_t> linear_best;  // best-known linear code
};

/**
 * LCD distance bounds and best-known linear distances keyed by (n, k).
 *
 * Rows that break lcd_lower <= lcd_upper <= linear_best are kept as loaded
 * and listed by inconsistencies(); loading never rejects them.
 */
class BoundsTable {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  const BoundsEntry* find(std::size_t n, std::size_t k) const {
    auto it = entries_.find({n, k});
    return it == entries_.end() ? nullptr : &it->second;
  }

  BoundsEntry& at(std::size_t n, std::size_t k) { return entries_[{n, k}]; }
  const std::map<Key, BoundsEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Columns: n k lcd_lower lcd_upper improved. Header and '#' lines skipped.
  void read_lcd_table(std::istream& in, const std::string& source = "lcd table") {
    for_each_row(in, source, 5, [&](const std::vector<std::size_t>& v) {
      auto& e = at(v[0], v[1]);
      e.lcd_lower = v[2];
      e.lcd_upper = v[3];
      e.improved = v[4] != 0;
    });
  }

  // Columns: n k d.
  void read_linear_table(std::istream& in, const std::string& source = "linear table") {
    for_each_row(in, source, 3, [&](const std::vector<std::size_t>& v) { at(v[0], v[1]).linear_best = v[2]; });
  }

  static BoundsTable load(const std::string& lcd_path, const std::string& linear_path) {
    BoundsTable t;
    std::ifstream a(lcd_path);
    if (!a) throw CorpusError("cannot open " + lcd_path);
    t.read_lcd_table(a, lcd_path);
    std::ifstream b(linear_path);
    if (!b) throw CorpusError("cannot open " + linear_path);
    t.read_linear_table(b, linear_path);
    return t;
  }

  struct Inconsistency {
    std::size_t n, k;
    std::string what;
  };

  std::vector<Inconsistency> inconsistencies() const {
    std::vector<Inconsistency> out;
    for (const auto& [key, e] : entries_) {
      auto [n, k] = key;
      if (e.lcd_lower && e.lcd_upper && *e.lcd_lower > *e.lcd_upper)
        out.push_back({n, k, "lcd_lower > lcd_upper"});
      if (e.lcd_upper && e.linear_best && *e.lcd_upper > *e.linear_best)
        out.push_back({n, k, "lcd_upper " + std::to_string(*e.lcd_upper) + " > linear_best " +
                                 std::to_string(*e.linear_best)});
      else if (e.lcd_lower && e.linear_best && *e.lcd_lower > *e.linear_best)
        out.push_back({n, k, "lcd_lower > linear_best"});
    }
    return out;
  }

  bool row_consistent(std::size_t n, std::size_t k) const {
    for (const auto& i : inconsistencies())
      if (i.n == n && i.k == k) return false;
    return true;
  }

 private:
  template <class F>
  static void for_each_row(std::istream& in, const std::string& source, std::size_t width, F&& f) {
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ss(line);
      std::vector<std::string> cells;
      for (std::string c; ss >> c;) cells.push_back(c);
      if (cells.empty()) continue;
      if (!header_seen && cells[0] == "n") {
        header_seen = true;
        continue;
      }
      if (cells.size() != width)
        throw ParseError(source + ":" + std::to_string(lineno) + ": expected " + std::to_string(width) + " columns");
      std::vector<std::size_t> v;
      for (const auto& c : cells) {
        std::size_t used = 0;
        unsigned long x = 0;
        try {
          x = std::stoul(c, &used);
        } catch (const std::logic_error&) {
          used = 0;
        }
        if (used != c.size() || c[0] == '-')
          throw ParseError(source + ":" + std::to_string(lineno) + ": bad number '" + c + "'");
        v.push_back(x);
      }
      f(v);
    }
  }

  std::map<Key, BoundsEntry> entries_;
};

}  // namespace hlcd
