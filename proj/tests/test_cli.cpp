// End-to-end checks of the installed binary: output shapes, determinism,
// and exit codes.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "qclearn/analysis.hpp"
#include "qclearn/csv.hpp"

using Catch::Approx;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QCLEARN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (const char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

TEST_CASE("spectrum subcommand prints one eigenvalue per index") {
  const auto res = run_cli("spectrum --family battleship --N 8 --r 1");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 8);
  const auto spec = qclearn::analysis::battleship_spectrum(8, 3);
  for (std::size_t j = 0; j < 8; ++j) {
    const double got = std::strtod(lines[j].c_str(), nullptr);
    REQUIRE(got == Approx(spec.values[j].real()).margin(1e-9));
  }
}

TEST_CASE("amplify subcommand reports the N=16 search run") {
  const auto res = run_cli("amplify --family grover --N 16 --target 5");
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.output.find(" m=1 ") != std::string::npos);
  REQUIRE(res.output.find("predicted=0.581704139709") != std::string::npos);
  REQUIRE(res.output.find("membership_queries=3") != std::string::npos);
  REQUIRE(res.output.find("equivalence_queries=1") != std::string::npos);
}

TEST_CASE("gamma subcommand prints the exact rational") {
  const auto res = run_cli("gamma --family grover --N 8");
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.output == "1/8\n");
}

TEST_CASE("hybrid subcommand finds the planted target") {
  const auto res =
      run_cli("hybrid --family battleship --N 256 --d 63 --target 100 --seed 7");
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.output.find("found=100") != std::string::npos);
}

TEST_CASE("sweep subcommand writes the CSV report") {
  const std::string path =
      "qclearn_cli_rows_" + std::to_string(::getpid()) + ".csv";
  const auto res =
      run_cli("sweep --family majority --n 8,10,12 --out " + path);
  REQUIRE(res.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  REQUIRE(header == qclearn::csv::kHeader);
  int data_rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++data_rows;
  REQUIRE(data_rows == 3);
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("impatient subcommand reports the plan and warnings") {
  const auto res = run_cli("impatient --family grover --N 2");
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.output.find("path=group_sign") != std::string::npos);
  REQUIRE(res.output.find("warnings=ZeroBand") != std::string::npos);

  const auto big = run_cli("impatient --family bigship --alpha 1/4 --N 256");
  REQUIRE(big.exit_code == 0);
  REQUIRE(big.output.find("constant_diagonal=true") != std::string::npos);

  REQUIRE(run_cli("impatient --family bigship --alpha nonsense --N 256").exit_code == 2);
}

TEST_CASE("sweep pretty format prints one line per size") {
  const auto res =
      run_cli("sweep --family battleship --d 3 --N 16,32 --format pretty");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 2);
  REQUIRE(lines[0].find("battleship N=16 param=3") != std::string::npos);
  REQUIRE(lines[1].find("m=1") != std::string::npos);
}

TEST_CASE("identical flags produce byte-identical output") {
  const std::string args = "sweep --family battleship --d 3 --N 16,32,64";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  REQUIRE(first.output == second.output);

  const std::string amp = "amplify --family grover --N 64 --target 9 --seed 11";
  REQUIRE(run_cli(amp).output == run_cli(amp).output);
}

TEST_CASE("custom tables load through --table") {
  const std::string path =
      "qclearn_cli_table_" + std::to_string(::getpid()) + ".txt";
  {
    std::ofstream out(path);
    out << "3\n011\n101\n110\n";
  }
  const auto res = run_cli("gamma --family custom --table " + path);
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.output == "1/3\n");
  std::remove(path.c_str());
}

TEST_CASE("flag errors exit with status 2") {
  REQUIRE(run_cli("spectrum --family battleship --r 1").exit_code == 2);  // no N... missing
  REQUIRE(run_cli("nosuchcommand").exit_code == 2);
  REQUIRE(run_cli("amplify --family grover --N 16").exit_code == 2);  // target required
  const auto res = run_cli("sweep --family grover");
  REQUIRE(res.exit_code == 2);
}

TEST_CASE("computation errors exit with status 3 and name the error") {
  const auto res = run_cli("gamma --family grover --N 20");
  REQUIRE(res.exit_code == 3);
  REQUIRE(res.output.find("DimensionCap") != std::string::npos);

  const auto res2 = run_cli("spectrum --family battleship --N 8 --d 4");
  REQUIRE(res2.exit_code == 3);
  REQUIRE(res2.output.find("BadParams") != std::string::npos);
}
