#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "confstab/catalog.hpp"
#include "confstab/report.hpp"
#include "confstab/space_builder.hpp"
#include "confstab/verification.hpp"

namespace {

using confstab::CatalogEntry;

std::vector<CatalogEntry> load(const std::string& path) {
  if (path.empty()) return confstab::default_catalog();
  return confstab::load_catalog(path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw confstab::CatalogError("cannot open output file: " + out_path);
  out << text;
}

std::string num15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string list_text(const std::vector<CatalogEntry>& entries, const std::string& format) {
  if (format == "csv") {
    std::string csv = "id,family,dim,expected\n";
    for (const auto& e : entries) {
      csv += e.id + ',' + e.family + ',' + std::to_string(e.dim) + ',';
      csv += e.expected_verdict ? confstab::verdict_name(*e.expected_verdict) : "";
      csv += '\n';
    }
    return csv;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j{{"id", e.id}, {"family", e.family}, {"dim", e.dim}};
    if (e.expected_verdict) j["expected_verdict"] = confstab::verdict_name(*e.expected_verdict);
    if (!e.note.empty()) j["note"] = e.note;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string spectrum_text(const std::vector<CatalogEntry>& entries, const std::string& id,
                          int count, const std::string& format) {
  const CatalogEntry& e = confstab::require_entry(entries, id);
  const confstab::SymmetricSpaceModel m = confstab::build_model(e, count);
  if (m.spectrum.empty())
    throw confstab::CatalogError("entry carries no eigenvalue sample: " + id);
  if (format == "csv") {
    std::string csv = "index,lambda,lambda_over_s\n";
    for (std::size_t i = 0; i < m.spectrum.size(); ++i) {
      csv += std::to_string(i + 1) + ',' + num15(m.spectrum[i]) + ',' +
             num15(m.spectrum[i] / m.s) + '\n';
    }
    return csv;
  }
  nlohmann::ordered_json j;
  j["id"] = m.id;
  j["n"] = m.n;
  j["s"] = m.s;
  j["lambda1"] = m.spectrum.front();
  j["eigenvalues"] = m.spectrum;
  return j.dump(2) + "\n";
}

std::string verify_text(const std::vector<confstab::VerificationReport>& reports) {
  std::string out;
  for (const auto& rep : reports) {
    out += "suite " + rep.suite + "\n";
    for (const auto& c : rep.checks) {
      out += std::string(c.pass ? "  pass  " : "  FAIL  ") + c.name;
      out += "  expected=" + num15(c.expected) + " observed=" + num15(c.observed) +
             " tolerance=" + num15(c.tolerance) + "\n";
    }
    out += std::string("suite ") + rep.suite + (rep.all_pass ? ": pass" : ": FAIL") + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conformal stability classifier for compact symmetric spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string catalog_path, space_id, p_text = "half-dim", format = "json", out_path;
  std::string suite = "all";
  int spectrum_count = 10;

  app.add_option("--catalog", catalog_path, "catalog file (defaults to the built-in catalog)");
  CLI::Option* format_opt = app.add_option("--format", format, "output format")
                                ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  CLI::App* cmd_list = app.add_subcommand("list", "list catalog entries");

  CLI::App* cmd_analyze = app.add_subcommand("analyze", "classify a single space");
  cmd_analyze->add_option("--space", space_id, "catalog id")->required();
  cmd_analyze->add_option("--p", p_text, "exponent: a number or \"half-dim\"");

  CLI::App* cmd_classify = app.add_subcommand("classify-all", "classify every entry");
  cmd_classify->add_option("--p", p_text, "exponent policy: a number or \"half-dim\"");

  CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "print the eigenvalue sample");
  cmd_spectrum->add_option("--space", space_id, "catalog id")->required();
  cmd_spectrum->add_option("--count", spectrum_count, "sample size")
      ->check(CLI::PositiveNumber);

  CLI::App* cmd_verify = app.add_subcommand("verify", "run verification suites");
  cmd_verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"invariants", "sphere-oracle", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_list->parsed()) {
      emit(list_text(load(catalog_path), format), out_path);
      return 0;
    }
    if (cmd_analyze->parsed()) {
      const auto entries = load(catalog_path);
      const confstab::PExponent p = confstab::parse_p(p_text);
      if (format == "csv") {
        emit(confstab::analyze_csv(entries, space_id, p), out_path);
      } else {
        emit(confstab::analyze_entry(entries, space_id, p).dump(2) + "\n", out_path);
      }
      return 0;
    }
    if (cmd_classify->parsed()) {
      const auto entries = load(catalog_path);
      const confstab::PExponent p = confstab::parse_p(p_text);
      const confstab::ClassifyResult result = confstab::classify_catalog(entries, p);
      emit(format == "csv" ? result.csv : result.document.dump(2) + "\n", out_path);
      if (!result.mismatches.empty()) {
        for (const auto& id : result.mismatches)
          std::cerr << "verdict mismatch: " << id << "\n";
        return 1;
      }
      return 0;
    }
    if (cmd_spectrum->parsed()) {
      emit(spectrum_text(load(catalog_path), space_id, spectrum_count, format), out_path);
      return 0;
    }
    if (cmd_verify->parsed()) {
      const auto entries = load(catalog_path);
      const auto reports = confstab::run_verification(entries, suite);
      // default is the per-check text table; json on request, csv unsupported
      if (format_opt->count() > 0 && format == "csv")
        throw confstab::CatalogError("verify output is text or json; csv is not supported");
      const bool as_json = format_opt->count() > 0 && format == "json";
      emit(as_json ? confstab::verification_to_json(reports).dump(2) + "\n"
                   : verify_text(reports),
           out_path);
      bool ok = true;
      for (const auto& rep : reports) ok = ok && rep.all_pass;
      return ok ? 0 : 1;
    }
  } catch (const confstab::CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
