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

// hlcd: command-line front end for GF(4) codes and the bundled corpus.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hlcd/hlcd.hpp"

namespace {

using nlohmann::ordered_json;

struct Settings {
  std::string format = "text";
  std::size_t limit = hlcd::kDefaultExhaustiveLimit;
  bool limit_set = false;
  unsigned threads = 0;
  std::string data = "./data";
  std::string input = "-";
  std::string coords;
  std::size_t simplex_k = 0;
};

// A usage or input problem; the message is printed and the exit code is 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hlcd::LinearCode read_code(const std::string& path) {
  std::string text, source = path;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    source = "<stdin>";
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  hlcd::QmatFile q = hlcd::parse_qmat(text, source);
  return hlcd::LinearCode::from_generator(q.matrix, q.id);
}

hlcd::EnumerationOptions enum_opts(const Settings& s, std::size_t fallback) {
  return {s.limit_set ? s.limit : fallback, s.threads};
}

hlcd::CoordSet parse_coords(const std::string& text) {
  if (text.empty()) throw UsageError("--coords is required");
  std::vector<std::size_t> idx;
  try {
    idx = hlcd::detail::parse_index_list(text, "--coords");
  } catch (const hlcd::ParseError& e) {
    throw UsageError(e.what());
  }
  for (auto i : idx)
    if (i == 0) throw UsageError("--coords: coordinates are 1-based, 0 is not allowed");
  try {
    return hlcd::CoordSet(idx);
  } catch (const hlcd::InvalidArgument& e) {
    throw UsageError(std::string("--coords: ") + e.what());
  }
}

std::string params(std::size_t n, std::size_t k, std::size_t d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

void emit_code(const hlcd::LinearCode& c) { std::cout << hlcd::format_qmat(c.generator(), c.label()); }

int cmd_info(const Settings& s) {
  const auto c = read_code(s.input);
  const std::size_t g = hlcd::gram_rank(c);
  if (s.format == "json") {
    ordered_json j{{"id", c.label()}, {"n", c.length()}, {"k", c.dimension()}, {"gram_rank", g},
                   {"hull_dimension", hlcd::hull_dimension(c)}, {"lcd", g == c.dimension()},
                   {"self_orthogonal", g == 0}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "id " << c.label() << "\nn " << c.length() << "\nk " << c.dimension() << "\ngram_rank " << g
              << "\nhull_dimension " << hlcd::hull_dimension(c) << "\nlcd " << (g == c.dimension() ? "true" : "false")
              << "\nself_orthogonal " << (g == 0 ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_dist(const Settings& s) {
  const auto c = read_code(s.input);
  const std::size_t d = hlcd::min_distance(c, enum_opts(s, hlcd::kDefaultExhaustiveLimit));
  if (s.format == "json")
    std::cout << ordered_json{{"n", c.length()}, {"k", c.dimension()}, {"d", d}}.dump() << '\n';
  else
    std::cout << params(c.length(), c.dimension(), d) << '\n';
  return 0;
}

int cmd_wenum(const Settings& s) {
  const auto c = read_code(s.input);
  const auto w = hlcd::weight_enumerator(c, enum_opts(s, hlcd::kDefaultExhaustiveLimit));
  if (s.format == "json")
    std::cout << ordered_json{{"n", w.n}, {"k", w.k}, {"coefficients", w.coeffs}}.dump() << '\n';
  else
    std::cout << w.to_string() << '\n';
  return 0;
}

int cmd_lcd(const Settings& s) {
  const auto c = read_code(s.input);
  const bool lcd = hlcd::is_lcd(c);
  if (s.format == "json")
    std::cout << ordered_json{{"lcd", lcd}, {"gram_rank", hlcd::gram_rank(c)}, {"k", c.dimension()}}.dump() << '\n';
  else
    std::cout << (lcd ? "true" : "false") << '\n';
  return 0;
}

int cmd_eaqecc(const Settings& s) {
  const auto c = read_code(s.input);
  const std::size_t d = hlcd::min_distance(c, enum_opts(s, hlcd::kDefaultExhaustiveLimit));
  const auto e = hlcd::eaqecc_params(c, d);
  if (s.format == "json")
    std::cout << ordered_json{{"n", e.n}, {"dim", e.dim}, {"d", e.d}, {"c", e.c}}.dump() << '\n';
  else
    std::cout << e.to_string() << '\n';
  return 0;
}

struct Corpus {
  hlcd::Registry reg;
  hlcd::BoundsTable bounds;
  hlcd::VerificationReport report;
};

Corpus run_corpus(const Settings& s) {
  Corpus c;
  c.reg = hlcd::load_registry(s.data);
  c.bounds = hlcd::BoundsTable::load(s.data + "/bounds/table3.tsv", s.data + "/bounds/grassl_snapshot.tsv");
  hlcd::VerifyOptions opts;
  opts.enumeration = enum_opts(s, opts.enumeration.limit);
  c.report = hlcd::verify_all(c.reg, c.bounds, opts);
  return c;
}

int cmd_verify(const Settings& s, bool tables_only) {
  const Corpus c = run_corpus(s);
  if (s.format == "json" && !tables_only) {
    std::cout << hlcd::to_json(c.report).dump(2) << '\n';
  } else {
    std::cout << hlcd::render_tables(hlcd::load_corpus_tables(s.data, c.bounds), c.report);
    if (!tables_only) {
      for (const auto& r : c.report.records)
        if (r.unexplained()) std::cout << "unexplained discrepancy: " << r.id << '\n';
      for (const auto& b : c.report.bounds_inconsistencies)
        std::cout << "bounds row (" << b.n << "," << b.k << "): " << b.what << '\n';
    }
  }
  if (tables_only) return 0;
  return c.report.summary().unexplained_discrepancy ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternary Hermitian LCD code toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option_function<std::size_t>(
      "--limit", [&](std::size_t v) { s.limit = v, s.limit_set = true; }, "exhaustive enumeration limit");
  app.add_option("--threads", s.threads, "worker threads (0 = all cores)");
  app.add_option("--data", s.data, "corpus root directory");

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", s.input, "qmat file, or - for stdin");
    return sub;
  };
  auto* info = with_input(app.add_subcommand("info", "dimensions, Gram rank, hull, LCD flag"));
  auto* dist = with_input(app.add_subcommand("dist", "print [n,k,d]"));
  auto* wenum = with_input(app.add_subcommand("wenum", "print the weight enumerator"));
  auto* lcd = with_input(app.add_subcommand("lcd", "test the LCD property"));
  auto* dual = with_input(app.add_subcommand("dual", "Hermitian dual, as qmat"));
  auto* punct = with_input(app.add_subcommand("puncture", "delete coordinates, as qmat"));
  auto* shrt = with_input(app.add_subcommand("shorten", "shorten on coordinates, as qmat"));
  auto* ext = with_input(app.add_subcommand("extend", "append a parity coordinate, as qmat"));
  auto* splx = app.add_subcommand("simplex", "simplex code generator, as qmat");
  auto* eaq = with_input(app.add_subcommand("eaqecc", "entanglement-assisted parameters"));
  auto* verify = app.add_subcommand("verify", "verify every corpus recipe");
  auto* tables = app.add_subcommand("tables", "render the claim tables");
  for (auto* sub : {punct, shrt}) sub->add_option("--coords", s.coords, "1-based coordinates, e.g. 1,3,6")->required();
  splx->add_option("k", s.simplex_k, "dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (info->parsed()) return cmd_info(s);
    if (dist->parsed()) return cmd_dist(s);
    if (wenum->parsed()) return cmd_wenum(s);
    if (lcd->parsed()) return cmd_lcd(s);
    if (eaq->parsed()) return cmd_eaqecc(s);
    if (verify->parsed()) return cmd_verify(s, false);
    if (tables->parsed()) return cmd_verify(s, true);
    if (splx->parsed()) {
      emit_code(hlcd::simplex(s.simplex_k));
      return 0;
    }
    if (punct->parsed() || shrt->parsed()) {
      const hlcd::CoordSet cs = parse_coords(s.coords);
      const auto c = read_code(s.input);
      emit_code(punct->parsed() ? hlcd::puncture(c, cs) : hlcd::shorten(c, cs));
      return 0;
    }
    if (dual->parsed()) {
      emit_code(hlcd::hermitian_dual(read_code(s.input)));
      return 0;
    }
    if (ext->parsed()) {
      emit_code(hlcd::extend_parity(read_code(s.input)));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "hlcd: " << e.what() << '\n';
    return 1;
  } catch (const hlcd::Error& e) {
    std::cerr << "hlcd: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
