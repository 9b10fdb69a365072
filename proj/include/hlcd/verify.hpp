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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "hlcd/analysis.hpp"
#include "hlcd/bounds.hpp"
#include "hlcd/code.hpp"
#include "hlcd/enumerator.hpp"
#include "hlcd/recipe.hpp"

namespace hlcd {

enum class RecordStatus { match, discrepancy, unverifiable };

inline const char* to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::match: return "match";
    case RecordStatus::discrepancy: return "discrepancy";
    case RecordStatus::unverifiable: return "unverifiable-parent";
  }
  return "?";
}

struct VerificationRecord {
  std::string id;
  RecordStatus status = RecordStatus::match;
  Expected expected;
  std::string provenance;

  // Computed values; empty when the recipe could not be built.
  std::optional<std::size_t> n, k, d;
  std::optional<bool> lcd;
  std::optional<std::size_t> gram_rank, hull_dimension;
  std::optional<WeightEnumerator> enumerator;
  std::optional<EaqeccParams> eaqecc;
  std::optional<OptimalityVerdict> optimality;

  std::vector<std::string> deltas;      // expected-vs-computed differences
  std::vector<std::string> bounds_flags;
  std::vector<std::string> invariant_failures;
  std::string unavailable;              // reason, for unverifiable records
  std::string error;                    // construction failed
  std::optional<KnownDiscrepancy> known;

  bool unexplained() const { return status == RecordStatus::discrepancy && !known; }
};

struct ReportSummary {
  std::size_t match = 0, discrepancy = 0, unverifiable = 0;
  std::size_t known_discrepancy = 0, unexplained_discrepancy = 0, invariant_failures = 0;
};

struct VerificationReport {
  std::vector<VerificationRecord> records;  // sorted by id
  std::vector<BoundsTable::Inconsistency> bounds_inconsistencies;

  ReportSummary summary() const {
    ReportSummary s;
    for (const auto& r : records) {
      if (r.status == RecordStatus::match) ++s.match;
      if (r.status == RecordStatus::discrepancy) ++(r.known ? s.known_discrepancy : s.unexplained_discrepancy);
      if (r.status == RecordStatus::unverifiable) ++s.unverifiable;
      s.invariant_failures += r.invariant_failures.size();
    }
    s.discrepancy = s.known_discrepancy + s.unexplained_discrepancy;
    return s;
  }

  const VerificationRecord* find(const std::string& id) const {
    for (const auto& r : records)
      if (r.id == id) return &r;
    return nullptr;
  }
};

struct VerifyOptions {
  // Large enough for the [31,16,10] parent, whose smaller side is 15.
  EnumerationOptions enumeration{15, 0};
};

namespace detail {

inline std::uint64_t coeff_sum(const std::vector<std::uint64_t>& c) {
  std::uint64_t s = 0;
  for (auto x : c) s += x;
  return s;
}

inline std::string coeffs_to_string(const std::vector<std::uint64_t>& c) {
  WeightEnumerator w{c.size() - 1, 0, c};
  return w.to_string();
}

inline void compare_enumerators(VerificationRecord& rec) {
  const auto& got = rec.enumerator->coeffs;
  if (rec.expected.enumerator) {
    const auto& want = *rec.expected.enumerator;
    const std::uint64_t total = std::uint64_t{1} << (2 * *rec.k);
    if (coeff_sum(want) != total)
      rec.deltas.push_back("printed enumerator sums to " + std::to_string(coeff_sum(want)) + ", not 4^" +
                           std::to_string(*rec.k) + " = " + std::to_string(total));
    if (want.size() != got.size()) {
      rec.deltas.push_back("printed enumerator has a different length");
    } else {
      for (std::size_t i = 0; i < got.size(); ++i)
        if (want[i] != got[i])
          rec.deltas.push_back("A_" + std::to_string(i) + ": printed " + std::to_string(want[i]) + ", computed " +
                               std::to_string(got[i]));
    }
  }
  if (rec.expected.enum_prefix) {
    const auto& want = *rec.expected.enum_prefix;
    for (std::size_t i = 0; i < rec.expected.enum_prefix_len && i < got.size(); ++i)
      if (want[i] != got[i])
        rec.deltas.push_back("A_" + std::to_string(i) + ": printed " + std::to_string(want[i]) + ", computed " +
                             std::to_string(got[i]));
  }
}

inline void check_bounds(VerificationRecord& rec, const BoundsTable& bounds) {
  const BoundsEntry* e = bounds.find(*rec.n, *rec.k);
  if (!e) return;
  const std::size_t d = *rec.d;
  if (e->linear_best && d > *e->linear_best)
    rec.bounds_flags.push_back("d = " + std::to_string(d) + " exceeds best-known linear " +
                               std::to_string(*e->linear_best));
  if (*rec.lcd) {
    if (e->lcd_lower && d < *e->lcd_lower)
      rec.bounds_flags.push_back("d = " + std::to_string(d) + " below LCD lower bound " +
                                 std::to_string(*e->lcd_lower));
    if (e->lcd_upper && d > *e->lcd_upper)
      rec.bounds_flags.push_back("d = " + std::to_string(d) + " above LCD upper bound " +
                                 std::to_string(*e->lcd_upper));
    if (e->linear_best) rec.optimality = classify_optimality(*rec.n, *rec.k, d, bounds);
  }
}

template <class T>
void compare_field(VerificationRecord& rec, const char* name, const std::optional<T>& want,
                   const std::optional<T>& got) {
  if (!want || !got || *want == *got) return;
  auto show = [](const T& v) {
    if constexpr (std::is_same_v<T, bool>) return std::string(v ? "true" : "false");
    else return std::to_string(v);
  };
  rec.deltas.push_back(std::string(name) + ": expected " + show(*want) + ", computed " + show(*got));
}

}  // namespace detail

// Builds and checks a single recipe. Never throws for mathematical failures.
inline VerificationRecord verify_recipe(const Recipe& recipe, Resolver& resolver, const Registry& reg,
                                        const BoundsTable& bounds, const VerifyOptions& opts = {}) {
  VerificationRecord rec;
  rec.id = recipe.id;
  rec.expected = recipe.expected;
  rec.provenance = recipe.provenance;
  if (auto it = reg.known.find(recipe.id); it != reg.known.end()) rec.known = it->second;

  std::optional<LinearCode> code;
  try {
    const Resolution& res = resolver.resolve(recipe.id);
    if (!res.available()) {
      rec.status = RecordStatus::unverifiable;
      rec.unavailable = res.unavailable;
      return rec;
    }
    code = res.code;
  } catch (const InvalidArgument& e) {
    rec.status = RecordStatus::discrepancy;
    rec.error = e.what();
    return rec;
  }

  const LinearCode& c = *code;
  rec.n = c.length();
  rec.k = c.dimension();
  rec.gram_rank = gram_rank(c);
  rec.lcd = *rec.gram_rank == *rec.k;
  rec.hull_dimension = hull_dimension(c);
  if (*rec.hull_dimension != *rec.k - *rec.gram_rank)
    rec.invariant_failures.push_back("hull dimension != k - gram rank");

  try {
    rec.enumerator = weight_enumerator(c, opts.enumeration);
    rec.d = rec.enumerator->min_weight();
    if (auto err = rec.enumerator->normalization_error()) rec.invariant_failures.push_back(*err);
  } catch (const LimitExceeded& e) {
    rec.deltas.push_back(std::string("distance not computed: ") + e.what());
  }

  detail::compare_field(rec, "n", recipe.expected.n, rec.n);
  detail::compare_field(rec, "k", recipe.expected.k, rec.k);
  detail::compare_field(rec, "d", recipe.expected.d, rec.d);
  detail::compare_field(rec, "lcd", recipe.expected.lcd, rec.lcd);

  if (rec.d) {
    detail::compare_enumerators(rec);
    rec.eaqecc = eaqecc_params(c, *rec.d);
    if (*rec.lcd && rec.eaqecc->c != *rec.n - *rec.k)
      rec.invariant_failures.push_back("LCD code with c != n - k");
    detail::check_bounds(rec, bounds);
  }

  const bool bad = !rec.deltas.empty() || !rec.invariant_failures.empty();
  rec.status = bad ? RecordStatus::discrepancy : RecordStatus::match;
  return rec;
}

/**
 * Resolves every recipe and compares the computed code with its expected
 * values, the printed enumerator and the bounds table. All failures become
 * report rows; records come out sorted by id.
 */
inline VerificationReport verify_all(const Registry& reg, const BoundsTable& bounds,
                                     const VerifyOptions& opts = {}) {
  VerificationReport report;
  Resolver resolver(reg);
  for (const auto& [id, recipe] : reg.recipes)
    report.records.push_back(verify_recipe(recipe, resolver, reg, bounds, opts));
  report.bounds_inconsistencies = bounds.inconsistencies();
  return report;
}

inline nlohmann::ordered_json to_json(const VerificationRecord& r) {
  using nlohmann::ordered_json;
  auto opt = [](const auto& v) -> ordered_json { return v ? ordered_json(*v) : ordered_json(nullptr); };
  ordered_json j;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  j["n"] = opt(r.n);
  j["k"] = opt(r.k);
  j["d"] = opt(r.d);
  j["lcd"] = opt(r.lcd);

  ordered_json e;
  e["n"] = opt(r.expected.n);
  e["k"] = opt(r.expected.k);
  e["d"] = opt(r.expected.d);
  e["lcd"] = opt(r.expected.lcd);
  if (r.expected.enumerator) e["enumerator"] = detail::coeffs_to_string(*r.expected.enumerator);
  if (r.expected.enum_prefix) e["enumerator_prefix"] = detail::coeffs_to_string(*r.expected.enum_prefix);
  j["expected"] = e;

  ordered_json c;
  if (r.n) {
    c["n"] = *r.n;
    c["k"] = *r.k;
    c["d"] = opt(r.d);
    c["lcd"] = *r.lcd;
    c["gram_rank"] = *r.gram_rank;
    c["hull_dimension"] = *r.hull_dimension;
    if (r.enumerator) {
      c["enumerator"] = r.enumerator->to_string();
      c["coefficients"] = r.enumerator->coeffs;
    }
    if (r.eaqecc) c["eaqecc"] = r.eaqecc->to_string();
  }
  j["computed"] = r.n ? c : ordered_json(nullptr);

  j["deltas"] = r.deltas;
  if (r.optimality) {
    j["optimality"] = {{"status", to_string(r.optimality->status)},
                       {"d_computed", r.optimality->d_computed},
                       {"d_reference", r.optimality->d_reference}};
  }
  if (!r.bounds_flags.empty()) j["bounds_flags"] = r.bounds_flags;
  if (!r.invariant_failures.empty()) j["invariant_failures"] = r.invariant_failures;
  if (!r.unavailable.empty()) j["unavailable"] = r.unavailable;
  if (!r.error.empty()) j["error"] = r.error;
  if (r.known) j["known_discrepancy"] = {{"tag", r.known->tag}, {"note", r.known->note}};
  j["provenance"] = r.provenance;
  return j;
}

inline nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  const auto s = report.summary();
  j["summary"] = {{"match", s.match},
                  {"discrepancy", s.discrepancy},
                  {"unverifiable", s.unverifiable},
                  {"known_discrepancy", s.known_discrepancy},
                  {"unexplained_discrepancy", s.unexplained_discrepancy},
                  {"invariant_failures", s.invariant_failures}};
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) j["records"].push_back(to_json(r));
  j["bounds_inconsistencies"] = nlohmann::ordered_json::array();
  for (const auto& b : report.bounds_inconsistencies)
    j["bounds_inconsistencies"].push_back({{"n", b.n}, {"k", b.k}, {"what", b.what}});
  return j;
}

inline std::string summary_line(const VerificationReport& report) {
  const auto s = report.summary();
  return "match=" + std::to_string(s.match) + " discrepancy=" + std::to_string(s.discrepancy) +
         " unverifiable=" + std::to_string(s.unverifiable);
}

}  // namespace hlcd
