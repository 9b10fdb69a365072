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
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hlcd/bounds.hpp"
#include "hlcd/error.hpp"
#include "hlcd/verify.hpp"

namespace hlcd {

enum class CellMark { reproduced, claimed_only, discrepancy };

inline char mark_letter(CellMark m) {
  switch (m) {
    case CellMark::reproduced: return 'R';
    case CellMark::claimed_only: return 'C';
    case CellMark::discrepancy: return 'D';
  }
  return '?';
}

struct TableCell {
  std::size_t d = 0;     // distance an LCD code must reach
  std::string text;      // as displayed, e.g. "9" or "7-8"
  bool improved = false;
};

struct ClaimTable {
  std::string title;
  std::map<std::pair<std::size_t, std::size_t>, TableCell> cells;
};

// Columns n k d, '#' comments and an optional header line.
inline ClaimTable load_claim_table(const std::string& path, std::string title) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open " + path);
  ClaimTable t{std::move(title), {}};
  BoundsTable tmp;
  tmp.read_linear_table(in, path);
  for (const auto& [key, e] : tmp.entries()) t.cells[key] = {*e.linear_best, std::to_string(*e.linear_best), false};
  return t;
}

inline ClaimTable lcd_bounds_table(const BoundsTable& bounds, std::string title) {
  ClaimTable t{std::move(title), {}};
  for (const auto& [key, e] : bounds.entries()) {
    if (!e.lcd_lower || !e.lcd_upper) continue;
    std::string text = std::to_string(*e.lcd_lower);
    if (*e.lcd_upper != *e.lcd_lower) text += "-" + std::to_string(*e.lcd_upper);
    t.cells[key] = {*e.lcd_lower, text, e.improved};
  }
  return t;
}

/**
 * reproduced: some built LCD code has this (n,k) and d at least the cell;
 * discrepancy: a recipe aimed at this cell was built but fell short;
 * claimed_only: nothing buildable targets the cell.
 */
inline CellMark mark_cell(std::size_t n, std::size_t k, const TableCell& cell, const VerificationReport& report) {
  bool attempted = false;
  for (const auto& r : report.records) {
    if (r.n && *r.n == n && *r.k == k && r.lcd && *r.lcd && r.d && *r.d >= cell.d) return CellMark::reproduced;
    const bool aimed = r.expected.n == n && r.expected.k == k && r.expected.lcd.value_or(false);
    if (aimed && r.status != RecordStatus::unverifiable) attempted = true;
  }
  return attempted ? CellMark::discrepancy : CellMark::claimed_only;
}

inline std::map<std::pair<std::size_t, std::size_t>, CellMark> mark_table(const ClaimTable& t,
                                                                          const VerificationReport& report) {
  std::map<std::pair<std::size_t, std::size_t>, CellMark> out;
  for (const auto& [key, cell] : t.cells) out[key] = mark_cell(key.first, key.second, cell, report);
  return out;
}

inline std::string render_table(const ClaimTable& t, const VerificationReport& report) {
  std::set<std::size_t> ns, ks;
  for (const auto& [key, cell] : t.cells) {
    ns.insert(key.first);
    ks.insert(key.second);
  }
  const auto marks = mark_table(t, report);
  std::size_t width = 4;
  for (const auto& [key, cell] : t.cells) width = std::max(width, cell.text.size() + 3);

  std::ostringstream os;
  os << t.title << '\n';
  auto pad = [&](const std::string& s) { os << std::string(width - std::min(width, s.size()), ' ') << s; };
  pad("n\\k");
  for (auto k : ks) pad(std::to_string(k));
  os << '\n';
  std::size_t counts[3] = {0, 0, 0};
  for (auto n : ns) {
    pad(std::to_string(n));
    for (auto k : ks) {
      auto it = t.cells.find({n, k});
      if (it == t.cells.end()) {
        pad("");
        continue;
      }
      const CellMark m = marks.at({n, k});
      ++counts[static_cast<int>(m)];
      pad(it->second.text + (it->second.improved ? "*" : "") + mark_letter(m));
    }
    os << '\n';
  }
  os << "cells: R=" << counts[0] << " C=" << counts[1] << " D=" << counts[2] << '\n';
  return os.str();
}

struct CorpusTables {
  ClaimTable table1, table2, table3;
};

inline CorpusTables load_corpus_tables(const std::string& data_dir, const BoundsTable& bounds) {
  return {load_claim_table(data_dir + "/bounds/table1.tsv", "Table 1: optimal LCD codes, 21 <= n <= 25, 13 <= k <= 19"),
          load_claim_table(data_dir + "/bounds/table2.tsv", "Table 2: LCD codes, 21 <= n <= 25, 8 <= k <= 15"),
          lcd_bounds_table(bounds, "Table 3: LCD distance bounds (lower-upper), * = improved")};
}

// The three grids, a legend, and the summary line.
inline std::string render_tables(const CorpusTables& t, const VerificationReport& report) {
  std::ostringstream os;
  for (const auto* table : {&t.table1, &t.table2, &t.table3}) {
    if (table->cells.empty()) continue;
    os << render_table(*table, report) << '\n';
  }
  os << "R = reproduced, C = claimed only, D = discrepancy\n";
  os << summary_line(report) << '\n';
  return os.str();
}

}  // namespace hlcd
