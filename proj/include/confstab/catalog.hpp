#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "confstab/default_catalog.hpp"
#include "confstab/stability.hpp"

namespace confstab {

// Maps to process exit code 2: the input file is unusable.
struct CatalogError : std::runtime_error {
  explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

struct SpectrumSpec {
  std::string root_system;
  std::vector<std::vector<int>> generators;
};

struct CatalogEntry {
  std::string id;
  std::string family;
  std::vector<int> params;
  int dim = 0;
  std::optional<double> lambda1_over_s;
  std::optional<double> s_sq_over_norm_sq_r;
  std::string provenance;  // required alongside cataloged ratios
  std::optional<Verdict> expected_verdict;
  std::optional<Verdict> published_verdict;
  std::string note;
  std::optional<SpectrumSpec> spectrum;
};

namespace detail {

inline bool family_is_lie(const std::string& f) {
  return f == "su_group" || f == "sp_group" || f == "so_group" || f == "su_over_sp" ||
         f == "sp_over_sp_sp";
}

inline bool family_known(const std::string& f) {
  return family_is_lie(f) || f == "sphere" || f == "hyperbolic" || f == "exceptional";
}

inline int expected_param_count(const std::string& f) {
  if (f == "sp_over_sp_sp") return 2;
  if (f == "exceptional") return 0;
  return 1;
}

inline void check_params(const CatalogEntry& e) {
  const auto fail = [&](const std::string& msg) {
    throw CatalogError("catalog entry '" + e.id + "': " + msg);
  };
  if (static_cast<int>(e.params.size()) != expected_param_count(e.family))
    fail("family " + e.family + " takes " + std::to_string(expected_param_count(e.family)) +
         " integer parameter(s)");
  int dim = -1;
  if (e.family == "su_group") {
    if (e.params[0] < 2) fail("su(q) needs q >= 2");
    dim = e.params[0] * e.params[0] - 1;
  } else if (e.family == "sp_group") {
    if (e.params[0] < 1) fail("sp(q) needs q >= 1");
    dim = e.params[0] * (2 * e.params[0] + 1);
  } else if (e.family == "so_group") {
    if (e.params[0] < 3 || e.params[0] == 4) fail("so(q) needs q >= 3, q != 4");
    dim = e.params[0] * (e.params[0] - 1) / 2;
  } else if (e.family == "su_over_sp") {
    if (e.params[0] < 2) fail("su(2m)/sp(m) needs m >= 2");
    const int m = e.params[0];
    dim = 2 * m * m - m - 1;
  } else if (e.family == "sp_over_sp_sp") {
    if (e.params[0] < 1 || e.params[1] < 1) fail("sp(q+l)/sp(q)+sp(l) needs q, l >= 1");
    dim = 4 * e.params[0] * e.params[1];
  } else if (e.family == "sphere" || e.family == "hyperbolic") {
    if (e.params[0] < 3) fail("constant-curvature entries need n >= 3");
    dim = e.params[0];
  } else {  // exceptional
    if (e.dim < 3) fail("exceptional entries need dim >= 3");
    dim = e.dim;
  }
  if (e.dim != dim)
    fail("dim " + std::to_string(e.dim) + " does not match the family formula (" +
         std::to_string(dim) + ")");
}

inline void check_cataloged_fields(const CatalogEntry& e) {
  const auto fail = [&](const std::string& msg) {
    throw CatalogError("catalog entry '" + e.id + "': " + msg);
  };
  const bool has_ratio = e.lambda1_over_s.has_value() || e.s_sq_over_norm_sq_r.has_value();
  const bool cataloged_family = e.family == "exceptional" || e.family == "hyperbolic";
  if (has_ratio && !cataloged_family)
    fail("cataloged ratios are only permitted for exceptional or hyperbolic entries");
  if (has_ratio && e.provenance.empty()) fail("cataloged ratios require a provenance note");
  if (e.family == "exceptional") {
    if (!e.lambda1_over_s || !e.s_sq_over_norm_sq_r)
      fail("exceptional entries need both lambda1_over_s and s_sq_over_normSqR");
    if (!e.spectrum) fail("exceptional entries need spherical weight data");
  }
  if (e.family == "hyperbolic") {
    if (!e.s_sq_over_norm_sq_r) fail("hyperbolic entries need s_sq_over_normSqR");
    if (e.lambda1_over_s)
      fail("hyperbolic entries carry no first-eigenvalue ratio (lambda_1 is not universal)");
  }
  if (e.lambda1_over_s && !(*e.lambda1_over_s > 0.0)) fail("lambda1_over_s must be positive");
  if (e.s_sq_over_norm_sq_r && !(*e.s_sq_over_norm_sq_r > 0.0))
    fail("s_sq_over_normSqR must be positive");
  if (family_is_lie(e.family) && !e.spectrum)
    fail("Lie-theoretic entries need spherical weight data");
  if ((e.family == "sphere" || e.family == "hyperbolic") && e.spectrum)
    fail("constant-curvature entries must not carry weight data");
  if (e.published_verdict && e.note.empty())
    fail("a published_verdict divergence requires an explanatory note");
}

inline Verdict parse_verdict_tag(const std::string& id, const std::string& field,
                                 const std::string& value) {
  const auto v = verdict_from_name(value);
  // Inconclusive is a computation outcome, never a recorded expectation.
  if (!v || *v == Verdict::Inconclusive)
    throw CatalogError("catalog entry '" + id + "': " + field + " '" + value +
                       "' is not one of UnstableConformal, StableConformal, "
                       "StableConformalDegenerate");
  return *v;
}

}  // namespace detail

inline std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw CatalogError(std::string("catalog is not valid JSON: ") + err.what());
  }
  if (!doc.is_array()) throw CatalogError("catalog must be a JSON array of entries");
  if (doc.empty()) throw CatalogError("catalog is empty");

  const std::set<std::string> known_keys = {
      "id",   "family",         "params",            "dim",      "lambda1_over_s",
      "s_sq_over_normSqR",      "provenance",        "expected_verdict",
      "published_verdict",      "note",              "spectrum"};

  std::vector<CatalogEntry> entries;
  std::set<std::string> seen_ids;
  for (const auto& item : doc) {
    if (!item.is_object()) throw CatalogError("catalog entries must be JSON objects");
    CatalogEntry e;
    try {
      for (const auto& [key, value] : item.items())
        if (!known_keys.count(key))
          throw CatalogError("unknown field '" + key + "'");
      e.id = item.at("id").get<std::string>();
      e.family = item.at("family").get<std::string>();
      e.params = item.at("params").get<std::vector<int>>();
      e.dim = item.at("dim").get<int>();
      if (item.contains("lambda1_over_s"))
        e.lambda1_over_s = item.at("lambda1_over_s").get<double>();
      if (item.contains("s_sq_over_normSqR"))
        e.s_sq_over_norm_sq_r = item.at("s_sq_over_normSqR").get<double>();
      if (item.contains("provenance")) e.provenance = item.at("provenance").get<std::string>();
      if (item.contains("note")) e.note = item.at("note").get<std::string>();
      if (item.contains("expected_verdict"))
        e.expected_verdict = detail::parse_verdict_tag(
            e.id, "expected_verdict", item.at("expected_verdict").get<std::string>());
      if (item.contains("published_verdict"))
        e.published_verdict = detail::parse_verdict_tag(
            e.id, "published_verdict", item.at("published_verdict").get<std::string>());
      if (item.contains("spectrum")) {
        SpectrumSpec sp;
        sp.root_system = item.at("spectrum").at("root_system").get<std::string>();
        sp.generators =
            item.at("spectrum").at("generators").get<std::vector<std::vector<int>>>();
        if (sp.generators.empty())
          throw CatalogError("spectrum.generators must be nonempty");
        e.spectrum = std::move(sp);
      }
    } catch (const CatalogError&) {
      throw;
    } catch (const nlohmann::json::exception& err) {
      throw CatalogError("catalog entry '" + (e.id.empty() ? "?" : e.id) +
                         "': " + err.what());
    }
    if (e.id.empty()) throw CatalogError("catalog entry with empty id");
    if (!detail::family_known(e.family))
      throw CatalogError("catalog entry '" + e.id + "': unknown family '" + e.family + "'");
    if (!seen_ids.insert(e.id).second)
      throw CatalogError("duplicate catalog id '" + e.id + "'");
    detail::check_params(e);
    detail::check_cataloged_fields(e);
    entries.push_back(std::move(e));
  }
  return entries;
}

inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("cannot open catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

inline std::vector<CatalogEntry> default_catalog() {
  return parse_catalog(default_catalog_text());
}

inline const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries,
                                      const std::string& id) {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace confstab
