#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + CONFSTAB_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path write_temp_catalog(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("cli reports schema and lookup failures with exit 2", "[cli]") {
  CHECK(run_cli("analyze --space 'SU(99)'").exit_code == 2);
  const auto bad = write_temp_catalog("confstab_cli_bad.json", "{\"bad\": true}");
  CHECK(run_cli("classify-all --catalog " + bad.string()).exit_code == 2);
  CHECK(run_cli("classify-all --catalog /nonexistent/catalog.json").exit_code == 2);
  CHECK(run_cli("analyze --space S3 --p nonsense").exit_code == 2);
  CHECK(run_cli("spectrum --space H3").exit_code == 2);
  CHECK(run_cli("no-such-subcommand").exit_code == 2);
}

TEST_CASE("cli help exits 0", "[cli]") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("analyze --help").exit_code == 0);
}

TEST_CASE("classify-all over the shipped catalog is clean and deterministic", "[cli]") {
  const CliResult a = run_cli("classify-all --format csv");
  const CliResult b = run_cli("classify-all --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("id,n,p,lambda1_over_s,s_sq_over_R_sq,a,b,c,Q_lambda1,verdict,expected,match\n",
                    0) == 0);
  CHECK(a.out.find("\r") == std::string::npos);
}

TEST_CASE("regression mismatch forces exit 1", "[cli]") {
  const auto path = write_temp_catalog(
      "confstab_cli_mismatch.json",
      R"json([{"id":"S3","family":"sphere","params":[3],"dim":3,"expected_verdict":"StableConformal"}])json");
  const CliResult r = run_cli("classify-all --catalog " + path.string() + " --format csv");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find(",false\n") != std::string::npos);
}

TEST_CASE("single-entry catalog yields one matching row", "[cli]") {
  const auto path = write_temp_catalog(
      "confstab_cli_single.json",
      R"json([{"id":"S3","family":"sphere","params":[3],"dim":3,"expected_verdict":"StableConformalDegenerate"}])json");
  const CliResult r = run_cli("classify-all --catalog " + path.string() + " --format csv");
  CHECK(r.exit_code == 0);
  // header plus exactly one data row
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
  CHECK(r.out.find("S3,3,1.5,") != std::string::npos);
  CHECK(r.out.find(",true\n") != std::string::npos);
}

TEST_CASE("analyze emits a machine-readable fragment", "[cli]") {
  const CliResult r = run_cli("analyze --space S3 --p 2");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("verdict") == "StableConformalDegenerate");
  CHECK(j.at("n") == 3);
  CHECK(j.at("p") == 2.0);
  CHECK(std::abs(j.at("q_lambda1").get<double>()) < 1e-12);
  CHECK(j.at("saddle").at("lambda_plus").get<double>() == 8.0);

  const CliResult h = run_cli("analyze --space H3 --p half-dim");
  REQUIRE(h.exit_code == 0);
  const auto hj = nlohmann::json::parse(h.out);
  CHECK(hj.at("verdict") == "StableConformal");
  CHECK(hj.at("lambda1").is_null());
}

TEST_CASE("spectrum subcommand prints the eigenvalue sample", "[cli]") {
  const CliResult r = run_cli("spectrum --space 'SU(3)' --count 5");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("eigenvalues").size() == 5);
  CHECK(j.at("lambda1").get<double>() == Catch::Approx(4.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("verify subcommand passes on the shipped catalog", "[cli]") {
  const CliResult r = run_cli("verify --suite invariants");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("suite invariants: pass") != std::string::npos);

  const CliResult j = run_cli("verify --suite sphere-oracle --format json");
  REQUIRE(j.exit_code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc.is_array());
  CHECK(doc.at(0).at("all_pass") == true);
}

TEST_CASE("output lands in the requested file", "[cli]") {
  const auto out = std::filesystem::temp_directory_path() / "confstab_cli_out.csv";
  std::filesystem::remove(out);
  const CliResult r = run_cli("classify-all --format csv --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("id,n,p,", 0) == 0);
}
