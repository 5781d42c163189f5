#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string binary() {
  const char* path = std::getenv("BHWALK_BIN");
  REQUIRE(path != nullptr);
  return path;
}

int run(const std::string& args) {
  const std::string cmd = binary() + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("bhwalk_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

size_t count_lines(const std::string& text) {
  size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("spectrum writes one labeled row per eigenstate and sign") {
  const auto dir = fresh_dir("spectrum");
  REQUIRE(run("spectrum --n 6 --v 8 --out " + dir.string()) == 0);
  const auto text = slurp(dir / "bands.csv");
  CHECK(count_lines(text) == 1 + 2 * 21);
  CHECK(text.rfind("sign,nu,K,omega,band", 0) == 0);
  CHECK(text.find("miniband") != std::string::npos);
  CHECK(text.find("main") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical files") {
  const auto dir1 = fresh_dir("det1");
  const auto dir2 = fresh_dir("det2");
  const std::string args =
      "evolve --n 18 --v 8 --state psi5 --tau-max 2 --tau-steps 11 --out ";
  REQUIRE(run(args + dir1.string()) == 0);
  REQUIRE(run(args + dir2.string()) == 0);
  for (const char* name :
       {"density.csv", "correlation.csv", "entanglement.csv", "summary.csv"})
    CHECK(slurp(dir1 / name) == slurp(dir2 / name));
}

TEST_CASE("config file values are overridden by flags") {
  const auto dir = fresh_dir("config");
  const auto cfg = dir / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "[deviation]\n" << "n=4\n" << "n=5\n" << "v=8\n";
  }
  REQUIRE(run("deviation --config " + cfg.string() + " --out " + dir.string()) ==
          0);
  CHECK(count_lines(slurp(dir / "deviation.csv")) == 3);

  // flag replaces the configured list
  REQUIRE(run("deviation --config " + cfg.string() + " --n 6 --out " +
              dir.string()) == 0);
  const auto text = slurp(dir / "deviation.csv");
  CHECK(count_lines(text) == 2);
  CHECK(text.find("\n6,") != std::string::npos);
}

TEST_CASE("json format emits a schema-versioned bundle") {
  const auto dir = fresh_dir("json");
  REQUIRE(run("deviation --n 4 --n 6 --v 8 --format json --out " +
              dir.string()) == 0);
  const auto doc = nlohmann::json::parse(slurp(dir / "deviation.json"));
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["columns"].size() == 2);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(double(doc["rows"][0][1]) < 1e-8);
}

TEST_CASE("delta emits one row per interaction value") {
  const auto dir = fresh_dir("delta");
  REQUIRE(run("delta --n 8 --state 3,3,1 --v 2 --v 8 --out " + dir.string()) ==
          0);
  const auto text = slurp(dir / "delta.csv");
  CHECK(count_lines(text) == 3);
  CHECK(text.rfind("V,delta", 0) == 0);
}

TEST_CASE("symmetry reports land in json with pass flags") {
  const auto dir = fresh_dir("symmetry");
  REQUIRE(run("symmetry --n 18 --v 8 --state psi4 --tau-max 1 --tau-steps 3 "
              "--out " +
              dir.string()) == 0);
  const auto doc = nlohmann::json::parse(slurp(dir / "symmetry.json"));
  CHECK(doc["boost_relation"]["pass"] == true);
  REQUIRE(doc["invariance"].size() == 4);
  for (const auto& report : doc["invariance"]) CHECK(report["pass"] == true);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("") == 2);
  CHECK(run("spectrum --format yaml") == 2);
  CHECK(run("no-such-command") == 2);
}

TEST_CASE("symmetry on an odd ring exits with code 3") {
  const auto dir = fresh_dir("odd");
  CHECK(run("symmetry --n 5 --v 8 --out " + dir.string()) == 3);
}

TEST_CASE("domain errors exit with code 4") {
  const auto dir = fresh_dir("domain");
  // preset packet does not fit on a 6-site ring
  CHECK(run("evolve --n 6 --v 8 --state psi1 --out " + dir.string()) == 4);
  CHECK(run("evolve --n 18 --v 8 --state garbage --out " + dir.string()) == 4);
}

TEST_CASE("evolve summary separates invariant and discriminating packets") {
  const auto blind = fresh_dir("blind");
  REQUIRE(run("evolve --n 18 --v 8 --state psi4 --tau-max 2 --tau-steps 9 "
              "--partition 1..9 --out " +
              blind.string()) == 0);
  const auto sharp = fresh_dir("sharp");
  REQUIRE(run("evolve --n 18 --v 8 --state psi5 --tau-max 2 --tau-steps 9 "
              "--partition 1..9 --out " +
              sharp.string()) == 0);

  auto max_column = [](const std::string& text, int column) {
    std::stringstream rows(text);
    std::string line;
    std::getline(rows, line);  // header
    double peak = 0.0;
    while (std::getline(rows, line)) {
      std::stringstream fields(line);
      std::string cell;
      for (int c = 0; c <= column; ++c) std::getline(fields, cell, ',');
      peak = std::max(peak, std::stod(cell));
    }
    return peak;
  };

  const auto blind_text = slurp(blind / "summary.csv");
  const auto sharp_text = slurp(sharp / "summary.csv");
  CHECK(max_column(blind_text, 1) < 1e-8);   // max_gamma_diff
  CHECK(max_column(blind_text, 2) < 1e-8);   // ep_diff
  CHECK(max_column(sharp_text, 1) > 1e-2);
}
