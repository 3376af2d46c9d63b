#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "confstab/catalog.hpp"
#include "confstab/curvature_tensor.hpp"
#include "confstab/space_builder.hpp"
#include "confstab/stability.hpp"
#include "confstab/version.hpp"

namespace confstab {

// Analysis exponent: a fixed number or "half-dim" resolved per entry to n/2.
struct PExponent {
  bool half_dim = true;
  double value = 0.0;
};

inline PExponent parse_p(const std::string& text) {
  if (text == "half-dim") return {true, 0.0};
  PExponent p;
  p.half_dim = false;
  std::size_t used = 0;
  try {
    p.value = std::stod(text, &used);
  } catch (...) {
    throw CatalogError("p must be a number or \"half-dim\": " + text);
  }
  if (used != text.size() || !std::isfinite(p.value))
    throw CatalogError("p must be a number or \"half-dim\": " + text);
  return p;
}

inline double resolve_p(const PExponent& p, int n) {
  return p.half_dim ? 0.5 * n : p.value;
}

inline std::string p_policy_name(const PExponent& p) {
  if (p.half_dim) return "half-dim";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", p.value);
  return buf;
}

namespace detail {

inline std::string num15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

inline nlohmann::ordered_json opt_num(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace detail

// Expected-verdict comparison is meaningful only at the entry's own
// half-dimensional exponent; elsewhere the regression column is vacuous.
inline bool p_matches_half_dim(double p, int n) {
  return std::abs(p - 0.5 * n) <= 1e-12 * std::max(1.0, std::abs(p));
}

inline bool verdict_matches_expected(const CatalogEntry& e, const StabilityReport& r) {
  if (!e.expected_verdict) return true;
  if (!p_matches_half_dim(r.p, r.n)) return true;
  return r.verdict == *e.expected_verdict;
}

inline nlohmann::ordered_json report_fragment(const CatalogEntry& e,
                                              const SymmetricSpaceModel& m,
                                              const StabilityReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["family"] = e.family;
  j["n"] = r.n;
  j["p"] = r.p;
  j["s"] = m.s;
  j["norm_sq_r"] = m.norm_sq_r;
  j["lambda1"] = detail::opt_num(r.lambda1);
  j["lambda1_over_s"] =
      r.lambda1 ? nlohmann::ordered_json(*r.lambda1 / m.s) : nlohmann::ordered_json(nullptr);
  j["s_sq_over_norm_sq_r"] = m.s * m.s / m.norm_sq_r;
  j["a"] = r.coeffs.a;
  j["b"] = r.coeffs.b;
  j["c"] = r.coeffs.c;
  j["q_lambda1"] = detail::opt_num(r.q_lambda1);
  j["min_q_sampled"] = detail::opt_num(r.min_q_sampled);
  j["verdict"] = verdict_name(r.verdict);
  j["lambda1_threshold_met"] = r.lambda1_threshold_met
                                   ? nlohmann::ordered_json(*r.lambda1_threshold_met)
                                   : nlohmann::ordered_json(nullptr);
  j["saddle"] = {{"lambda_minus", detail::opt_num(r.saddle.lambda_minus)},
                 {"lambda_plus", detail::opt_num(r.saddle.lambda_plus)}};
  j["p_below_two_flag"] = r.p_below_two_flag;
  if (e.expected_verdict) {
    j["expected_verdict"] = verdict_name(*e.expected_verdict);
    j["expected_applies_at_p"] = p_matches_half_dim(r.p, r.n);
    j["match"] = verdict_matches_expected(e, r);
  }
  if (e.published_verdict) j["published_verdict"] = verdict_name(*e.published_verdict);
  if (!e.note.empty()) j["note"] = e.note;
  j["provenance"] = r.provenance;
  return j;
}

inline const CatalogEntry& require_entry(const std::vector<CatalogEntry>& entries,
                                         const std::string& id) {
  const CatalogEntry* e = find_entry(entries, id);
  if (!e) throw CatalogError("unknown space id: " + id);
  return *e;
}

inline nlohmann::ordered_json analyze_entry(const std::vector<CatalogEntry>& entries,
                                            const std::string& id, const PExponent& p,
                                            int spectrum_count = 10) {
  const CatalogEntry& e = require_entry(entries, id);
  const SymmetricSpaceModel m = build_model(e, spectrum_count);
  const StabilityReport r = classify(m, resolve_p(p, m.n));
  return report_fragment(e, m, r);
}

// Ratio audit for compact models: s^2/|R|^2 < n(n-1)/2, with equality exactly
// in constant curvature. The bound often quoted as 2/(n(n-1)) does not hold
// for the computed ratios; the report states the computed bound instead.
struct WeylRatioRow {
  std::string id;
  int n = 0;
  double ratio = 0.0;
  double bound = 0.0;
  bool constant_curvature = false;
  bool strictly_below = false;
};

inline WeylRatioRow weyl_ratio_row(const CatalogEntry& e, const SymmetricSpaceModel& m) {
  WeylRatioRow row;
  row.id = e.id;
  row.n = m.n;
  row.ratio = m.s * m.s / m.norm_sq_r;
  row.bound = 0.5 * m.n * (m.n - 1);
  if (m.curvature) {
    const WeylSplit split = weyl_split(*m.curvature);
    row.constant_curvature = split.weyl.norm_sq() <= 1e-10 * m.curvature->norm_sq();
  } else {
    // cataloged entries: constant curvature iff the ratio saturates the bound
    row.constant_curvature = std::abs(row.ratio - row.bound) <= 1e-10 * row.bound;
  }
  row.strictly_below = row.ratio < row.bound * (1.0 - 1e-14);
  return row;
}

inline const char* weyl_ratio_note() {
  return "computed bound for s^2/|R|^2 is n(n-1)/2; the constant 2/(n(n-1)) does not "
         "bound these ratios";
}

struct ClassifyResult {
  nlohmann::ordered_json document;
  std::string csv;
  std::vector<std::string> mismatches;
};

inline ClassifyResult classify_catalog(const std::vector<CatalogEntry>& entries,
                                       const PExponent& p, int spectrum_count = 10) {
  const auto t0 = std::chrono::steady_clock::now();
  ClassifyResult out;
  std::string csv = "id,n,p,lambda1_over_s,s_sq_over_R_sq,a,b,c,Q_lambda1,verdict,expected,match\n";
  nlohmann::ordered_json frags = nlohmann::ordered_json::array();
  nlohmann::ordered_json weyl_rows = nlohmann::ordered_json::array();
  bool weyl_all_ok = true;

  for (const CatalogEntry& e : entries) {
    const SymmetricSpaceModel m = build_model(e, spectrum_count);
    const double pe = resolve_p(p, m.n);
    const StabilityReport r = classify(m, pe);
    frags.push_back(report_fragment(e, m, r));

    const bool match = verdict_matches_expected(e, r);
    if (!match) out.mismatches.push_back(e.id);

    csv += e.id + ',' + std::to_string(r.n) + ',' + detail::num15(pe) + ',';
    csv += (r.lambda1 ? detail::num15(*r.lambda1 / m.s) : std::string()) + ',';
    csv += detail::num15(m.s * m.s / m.norm_sq_r) + ',';
    csv += detail::num15(r.coeffs.a) + ',' + detail::num15(r.coeffs.b) + ',' +
           detail::num15(r.coeffs.c) + ',';
    csv += (r.q_lambda1 ? detail::num15(*r.q_lambda1) : std::string()) + ',';
    csv += verdict_name(r.verdict) + ',';
    csv += (e.expected_verdict ? verdict_name(*e.expected_verdict) : std::string()) + ',';
    csv += (match ? "true" : "false");
    csv += '\n';

    if (m.s > 0) {
      const WeylRatioRow row = weyl_ratio_row(e, m);
      if (!row.constant_curvature && !row.strictly_below) weyl_all_ok = false;
      weyl_rows.push_back({{"id", row.id},
                           {"n", row.n},
                           {"ratio", row.ratio},
                           {"bound", row.bound},
                           {"constant_curvature", row.constant_curvature},
                           {"strictly_below", row.strictly_below}});
    }
  }

  const auto t1 = std::chrono::steady_clock::now();
  nlohmann::ordered_json doc;
  doc["tool_version"] = version_string;
  doc["p_policy"] = p_policy_name(p);
  doc["entries"] = std::move(frags);
  doc["weyl_ratio_check"] = {{"note", weyl_ratio_note()},
                             {"all_non_constant_strictly_below", weyl_all_ok},
                             {"entries", std::move(weyl_rows)}};
  doc["mismatches"] = out.mismatches;
  doc["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  out.document = std::move(doc);
  out.csv = std::move(csv);
  return out;
}

// Single-entry CSV with the classify-all columns.
inline std::string analyze_csv(const std::vector<CatalogEntry>& entries,
                               const std::string& id, const PExponent& p,
                               int spectrum_count = 10) {
  const CatalogEntry& e = require_entry(entries, id);
  std::vector<CatalogEntry> one{e};
  return classify_catalog(one, p, spectrum_count).csv;
}

}  // namespace confstab
