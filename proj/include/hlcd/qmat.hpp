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
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hlcd/error.hpp"
#include "hlcd/matrix.hpp"

namespace hlcd {

/**
 * A matrix file:
 *
 *   # comment
 *   qmat <rows> <cols> <id> [transposed]
 *   <digit> <digit> ...
 *
 * rows/cols describe the printed block. With `transposed` the stored matrix
 * is the transpose of what was printed.
 */
struct QmatFile {
  std::string id;
  std::size_t printed_rows = 0;
  std::size_t printed_cols = 0;
  bool transposed = false;
  Gf4Matrix matrix;
};

inline QmatFile parse_qmat(std::string_view text, const std::string& source = "<qmat>") {
  QmatFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::vector<Gf4> entries;
  std::size_t rows_read = 0;
  auto fail = [&](const std::string& msg) { return ParseError(source + ":" + std::to_string(lineno) + ": " + msg); };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string magic, flag;
      long long r = 0, c = 0;
      if (!(ls >> magic >> r >> c >> out.id) || magic != "qmat") throw fail("expected 'qmat <rows> <cols> <id>'");
      if (r <= 0 || c <= 0) throw fail("dimensions must be positive");
      if (ls >> flag) {
        if (flag != "transposed") throw fail("unknown flag '" + flag + "'");
        out.transposed = true;
      }
      if (ls >> flag) throw fail("trailing text after header");
      out.printed_rows = static_cast<std::size_t>(r);
      out.printed_cols = static_cast<std::size_t>(c);
      have_header = true;
      continue;
    }
    std::size_t count = 0;
    for (std::string tok; ls >> tok; ++count) {
      if (tok.size() != 1 || tok[0] < '0' || tok[0] > '3') throw fail("bad digit '" + tok + "'");
      entries.push_back(Gf4::from_bits(static_cast<std::uint8_t>(tok[0] - '0')));
    }
    if (count != out.printed_cols)
      throw fail("row has " + std::to_string(count) + " entries, header says " + std::to_string(out.printed_cols));
    ++rows_read;
  }
  if (!have_header) throw ParseError(source + ": missing qmat header");
  if (rows_read != out.printed_rows)
    throw ParseError(source + ": found " + std::to_string(rows_read) + " rows, header says " +
                     std::to_string(out.printed_rows));
  Gf4Matrix printed(out.printed_rows, out.printed_cols, std::move(entries));
  out.matrix = out.transposed ? printed.transpose() : std::move(printed);
  return out;
}

inline QmatFile load_qmat(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CorpusError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_qmat(ss.str(), path);
}

inline std::string format_qmat(const Gf4Matrix& m, const std::string& id) {
  std::ostringstream os;
  os << "qmat " << m.rows() << ' ' << m.cols() << ' ' << (id.empty() ? "code" : id) << '\n' << m;
  return os.str();
}

}  // namespace hlcd
