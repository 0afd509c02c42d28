#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the ssqn binary with stdout+stderr captured.
RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path out = fs::temp_directory_path() /
                       ("ssqn_cli_out_" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(SSQN_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  fs::remove(out);
  return r;
}

fs::path write_temp(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream os(p);
  os << contents;
  return p;
}

}  // namespace

TEST_CASE("simulate: five violating observers from the margin recursion") {
  const RunResult r = run(
      "simulate --state bell --strategy ms1 --channel phase-flip --p 0.95 "
      "--theta 0.01 --epsilon 0.1 --n 5");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "k,gamma,witness_sim,witness_closed");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    ++rows;
    // witness_sim is the third column
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    std::getline(cells, cell, ',');
    std::getline(cells, cell, ',');
    CHECK(std::stod(cell) > 2.0);
  }
  CHECK(rows == 5);
}

TEST_CASE("simulate: explicit gamma list bypasses the recursion") {
  const RunResult r = run(
      "simulate --strategy ms1 --channel bit-flip --p 0.9 --theta 0.5 "
      "--gamma 0.3323,1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("k,gamma,witness_sim,witness_closed\n1,") != std::string::npos);
}

TEST_CASE("simulate: infeasible recursion exits 3") {
  const RunResult r = run(
      "simulate --strategy ms1 --channel bit-flip --p 0.95 --theta 0.01 "
      "--epsilon 0.1 --n 5");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("infeasible") != std::string::npos);
}

TEST_CASE("simulate: ms4 under phase-flip matches ms3 under bit-flip") {
  const RunResult a = run(
      "simulate --strategy ms4 --channel phase-flip --p 0.85 --theta 0.97 "
      "--epsilon 0.1 --n 3");
  const RunResult b = run(
      "simulate --strategy ms3 --channel bit-flip --p 0.85 --theta 0.97 "
      "--epsilon 0.1 --n 3");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  // closed-form column is computed by the shared immune expression; the
  // simulated column agrees to 1e-12, so the printed bytes coincide
  CHECK(a.out == b.out);
}

TEST_CASE("invalid input exits 1 with a diagnostic") {
  CHECK(run("simulate --strategy ms9 --channel noiseless --theta 0.3").exit_code == 1);
  CHECK(run("simulate --strategy ms1 --channel noiseless").exit_code == 1);
  CHECK(run("count --strategy ms1 --channel phase-flip --theta 0.3 --epsilon 0.1")
            .exit_code == 1);  // missing p
  CHECK(run("reproduce fig9").exit_code == 1);
  const RunResult r = run("simulate --strategy ms1 --channel phase-flip --p 2 "
                          "--theta 0.3 --epsilon 0.1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("config file and flags produce identical bytes") {
  const fs::path cfg = write_temp("ssqn_cfg.json", R"({
    "state": "bell", "strategy": "ms1", "channel": "phase-flip",
    "p": 0.95, "theta": 0.01, "epsilon": 0.1, "n": 4
  })");
  const RunResult from_file = run("simulate --config " + cfg.string());
  const RunResult from_flags = run(
      "simulate --state bell --strategy ms1 --channel phase-flip --p 0.95 "
      "--theta 0.01 --epsilon 0.1 --n 4");
  REQUIRE(from_file.exit_code == 0);
  CHECK(from_file.out == from_flags.out);

  // flags override the file
  const RunResult overridden = run("simulate --config " + cfg.string() + " --n 2");
  std::istringstream lines(overridden.out);
  int rows = -1;  // header
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 2);
  fs::remove(cfg);
}

TEST_CASE("count command emits a single row") {
  const RunResult r = run(
      "count --strategy ms3 --channel bit-flip --p 0.85 --theta 0.99 --epsilon 0.1 "
      "--n 5");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("theta,epsilon,p,strategy,channel,count\n") == 0);
  CHECK(r.out.find(",ms3,bit-flip,") != std::string::npos);
}

TEST_CASE("double-violation command reports the table I row") {
  const RunResult r = run(
      "double-violation --strategy ms1 --channel phase-flip --p 0.9 --theta 0.5");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("0.3014") != std::string::npos);
  CHECK(r.out.find("0.3323") != std::string::npos);

  // non-immune channel at small theta: no root, exit 3
  const RunResult none = run(
      "double-violation --strategy ms1 --channel bit-flip --p 0.9 --theta 0.05");
  CHECK(none.exit_code == 3);
}

TEST_CASE("sweep command honors the grid flag") {
  const RunResult r = run(
      "sweep --kind count --strategy ms1 --channel phase-flip --p 0.95 "
      "--epsilon 0.1 --n 3 --grid 1e-4:0.7:5:log");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  int rows = -1;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 5);
}

TEST_CASE("jsonl format") {
  const RunResult r = run(
      "simulate --strategy ms1 --channel noiseless --theta 0.785398163397 "
      "--gamma 1 --n 1 --format jsonl");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("{\"k\":1,") == 0);
  CHECK(r.out.find("2.82842712475") != std::string::npos);
}

TEST_CASE("reproduce writes deterministic files") {
  const fs::path dir = fs::temp_directory_path() / "ssqn_repro_test";
  fs::remove_all(dir);
  const RunResult r = run("reproduce table1 --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  const fs::path file = dir / "table1.csv";
  REQUIRE(fs::exists(file));
  const std::string first = slurp(file);
  std::istringstream lines(first);
  int rows = -1;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 14);

  const RunResult again = run("reproduce table1 --out " + dir.string());
  REQUIRE(again.exit_code == 0);
  CHECK(slurp(file) == first);
  fs::remove_all(dir);
}

TEST_CASE("reproduce fig7 emits the four panel files") {
  const fs::path dir = fs::temp_directory_path() / "ssqn_repro_fig7";
  fs::remove_all(dir);
  const RunResult r = run("reproduce fig7 --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  for (const char* name : {"fig7_a.csv", "fig7_b.csv", "fig7_c.csv", "fig7_d.csv"})
    CHECK(fs::exists(dir / name));
  fs::remove_all(dir);
}

TEST_CASE("verify exits 0 by default and 2 at an impossible tolerance") {
  const RunResult ok = run("verify --draws 15 --seed 7");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("seed=7") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  const RunResult repeat = run("verify --draws 15 --seed 7");
  CHECK(repeat.out == ok.out);

  const RunResult bad = run("verify --draws 10 --seed 7 --tolerance 1e-17");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}
