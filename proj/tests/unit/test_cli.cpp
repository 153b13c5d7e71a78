#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qkgr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = qkgr::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("present") {
  auto r = run({"present", "--k", "2", "--n", "5", "--kind", "coulomb", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["generators"].size() == 5);

  r = run({"present", "--k", "1", "--n", "4", "--kind", "eliminated-hat", "--non-equivariant"});
  CHECK(r.code == 0);
  CHECK(r.out.find(": e1^4 - q\n") != std::string::npos);

  r = run({"present", "--k", "3", "--n", "4", "--kind", "eliminated-tilde", "--non-equivariant"});
  CHECK(r.code == 0);
  CHECK(r.out.find("e1^2 - 2*e1*q + e2*q - e2 - 3*q") != std::string::npos);

  r = run({"present", "--k", "2", "--n", "4", "--kind", "gk"});
  CHECK(r.code == 0);
  CHECK(r.out.find("non-equivariant") != std::string::npos);
  CHECK(run({"present", "--k", "2", "--n", "4", "--kind", "gk", "--equivariant"}).code == 2);
  CHECK(run({"present", "--k", "2", "--n", "4", "--kind", "klein"}).code == 2);
  CHECK(run({"present", "--k", "3", "--n", "3"}).code == 2);
  CHECK(run({"present", "--k", "1", "--n", "9", "--kind", "coulomb"}).code == 2);
  CHECK(run({"--max-n", "9", "present", "--k", "1", "--n", "9", "--kind", "coulomb"}).code == 0);
  CHECK(run({"present", "--k", "2", "--n", "4", "--format", "pdf"}).code == 2);
  CHECK(run({"present", "--k", "2", "--n", "4", "--zeta", "1,2"}).code == 2);

  r = run({"present", "--k", "2", "--n", "4", "--kind", "coulomb", "--format", "latex"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\\hat{g}") != std::string::npos);
  CHECK(r.out.find("e_{1}(\\zeta)") != std::string::npos);
}

TEST_CASE("present is byte-stable") {
  auto a = run({"present", "--k", "2", "--n", "5"});
  auto b = run({"present", "--k", "2", "--n", "5"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == read_file(fs::path(QKGR_GOLDEN_DIR) / "present_k2_n5.txt"));
  auto j = run({"present", "--k", "2", "--n", "5", "--format", "json"});
  CHECK(j.out == read_file(fs::path(QKGR_GOLDEN_DIR) / "present_k2_n5.json"));
}

TEST_CASE("reduce") {
  for (int n = 2; n <= 6; ++n) {
    auto r = run({"--no-cache", "reduce", "--k", "1", "--n", std::to_string(n), "--non-equivariant",
                  "G[1]^" + std::to_string(n)});
    CHECK(r.code == 0);
    CHECK(r.out == "q\n");
  }
  CHECK(run({"--no-cache", "reduce", "--k", "2", "--n", "4", "0"}).out == "0\n");
  auto r = run({"--no-cache", "reduce", "--k", "2", "--n", "4", "e[7]"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
  CHECK(r.err.find("warning") != std::string::npos);
  r = run({"--no-cache", "reduce", "--k", "2", "--n", "4", "q^"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 2") != std::string::npos);
  r = run({"--no-cache", "reduce", "--k", "2", "--n", "4", "--kind", "whitney", "eX2*eXt2*eX2 - (1-q)*eX2*eT4"});
  CHECK(r.out == "0\n");
  CHECK(run({"--no-cache", "reduce", "--k", "2", "--n", "4", "z_3"}).code == 2);
}

TEST_CASE("dim") {
  auto r = run({"--no-cache", "dim", "--k", "2", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
  r = run({"--no-cache", "dim", "--k", "2", "--n", "4", "--q", "0", "--zeta", "2,3,4,5", "--kind", "eliminated-tilde"});
  CHECK(r.out == "6\n");
  CHECK(run({"--no-cache", "dim", "--k", "2", "--n", "4", "--q", "1"}).code == 2);
  CHECK(run({"--no-cache", "dim", "--k", "2", "--n", "4", "--zeta", "1,2,3,4"}).code == 2);
  r = run({"--no-cache", "dim", "--k", "2", "--n", "4", "--kind", "coulomb"});
  CHECK(r.out == "6\n");
}

TEST_CASE("verify") {
  auto r = run({"--no-cache", "verify", "--check", "cauchy", "--kmax", "2", "--nmax", "4"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 5);
  for (const auto& e : j) CHECK(e["check"] == "cauchy");

  r = run({"--no-cache", "verify", "--check", "rank", "--k", "2", "--n", "5"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["details"]["expected"] == 10);
  CHECK(j[0]["status"] == "pass");

  r = run({"--no-cache", "verify", "--check", "rank", "--check", "gell", "--kmax", "2", "--nmax", "4", "-j", "2"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  std::vector<std::tuple<std::string, int, int>> keys;
  for (const auto& e : j) keys.emplace_back(e["check"], e["k"], e["n"]);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::get<0>(keys.front()) == "gell");

  CHECK(run({"--no-cache", "verify", "--check", "nope"}).code == 2);
  CHECK(run({"--no-cache", "verify", "--all", "--check", "rank"}).code == 2);
  CHECK(run({"--no-cache", "verify", "--check", "gell", "--mode", "fast"}).code == 2);
}

TEST_CASE("verify the whole suite on a small grid") {
  auto r = run({"--no-cache", "verify", "--all", "--kmax", "2", "--nmax", "5"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() > 50);
  for (const auto& e : j) CHECK(e["status"] == "pass");
}

TEST_CASE("limit2d") {
  auto r = run({"limit2d", "--k", "2", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ghat_4: L^4 * (m1*m2*m3*m4 + q2d)") != std::string::npos);
  r = run({"limit2d", "--k", "2", "--n", "4", "--expr", "e[1]"});
  CHECK(r.out == "L^1 * (sigma1 + sigma2)\n");
  CHECK(run({"limit2d", "--k", "2", "--n", "4", "--convention", "sideways"}).code == 2);
}

TEST_CASE("configuration file and cache") {
  auto dir = fs::temp_directory_path() / "qkgr-cli-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto cfg = dir / "qkgr.toml";
  std::ofstream(cfg) << "cache-dir = \"" << (dir / "cache").string() << "\"\n[verify]\ncheck = [\"gell\"]\nkmax = 1\nnmax = 3\n";
  auto r = run({"--config", cfg.string(), "verify"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 2);
  r = run({"--config", cfg.string(), "verify", "--nmax", "4"});
  CHECK(nlohmann::json::parse(r.out).size() == 3);

  r = run({"--config", cfg.string(), "cache", "path"});
  CHECK(r.out == (dir / "cache").string() + "\n");
  run({"--config", cfg.string(), "reduce", "--k", "2", "--n", "4", "h[3]"});
  r = run({"--config", cfg.string(), "cache", "list"});
  CHECK(r.out.find("gb-") != std::string::npos);
  r = run({"--config", cfg.string(), "cache", "clear"});
  CHECK(r.out == "removed 1 entries\n");
  CHECK(run({"--config", cfg.string(), "cache", "explode"}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("help and usage errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"present"}).code == 2);
}
