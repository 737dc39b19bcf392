#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#ifndef TW_BINARY
#error "TW_BINARY must name the tw executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" TW_BINARY "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "tw_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construct then compute") {
  auto file = scratch() / "t3.txt";
  auto c = run("construct fig1 --id 3 -o " + file.string());
  REQUIRE(c.code == 0);
  auto r = run("compute " + file.string() + " --method both");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pairwise"] == 2508);
  CHECK(j["edgecut"] == 2508);
  CHECK(j["n"] == 40);
  CHECK(j["diameter"] == 6);
}

TEST_CASE("compute reads the plain tree format") {
  auto file = scratch() / "star.txt";
  std::ofstream(file) << "# star\n5\n0 1\n0 2\n\n0 3\n0 4\n";
  auto r = run("compute " + file.string() + " --method pairwise");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["pairwise"] == 12);
  std::ofstream(scratch() / "broken.txt") << "4\n0 1\n2 3\n0 1\n";
  CHECK(run("compute " + (scratch() / "broken.txt").string()).code != 0);
}

TEST_CASE("bounds as json") {
  auto r = run("bounds --n 23 --d 4");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(r.out.find("580") != std::string::npos);
  CHECK(r.out.find("\"l0\": 11") != std::string::npos);
  auto d3 = run("bounds --n 10 --max-degree 3");
  REQUIRE(d3.code == 0);
  CHECK(d3.out.find("55") != std::string::npos);
}

TEST_CASE("enumerate counts") {
  auto r = run("enumerate --n 10 --count-only");
  CHECK(r.code == 0);
  CHECK(std::stoi(r.out) == 106);
  auto d = run("enumerate --n 23 --d 4 --count-only");
  CHECK(std::stoi(d.out) == 980);
  auto dir = scratch() / "emit";
  std::filesystem::remove_all(dir);
  CHECK(run("enumerate --n 7 --emit " + dir.string()).code == 0);
  int files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 11);
}

TEST_CASE("fmax") {
  auto r = run("fmax --weights 2,1,1 --method both");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["brute"]["value"] == 7);
  CHECK(j["valley"]["value"] == 7);
}

TEST_CASE("verify exit codes and reports") {
  auto report = scratch() / "r.json";
  auto csv = scratch() / "r.csv";
  auto ok = run("verify thm-3.11 --report " + report.string() + " --csv " + csv.string());
  CHECK(ok.code == 0);
  auto j = nlohmann::json::parse(std::ifstream(report));
  CHECK(j["status"] == "pass");
  CHECK(j["rows"].size() == 13);
  std::ifstream in(csv);
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 14);

  CHECK(run("verify fig-1").code == 3);
  CHECK(run("verify lem-3.2 --n-max 6").code == 1);
  CHECK(run("verify thm-2.5 --n-max 10 --inject-fault 4").code == 1);
  CHECK(run("verify thm-2.5 --n-max 10", "TW_JOBS=3").code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("verify no-such-check").code == 2);
  CHECK(run("verify thm-2.1 --n-max 99").code == 2);
  CHECK(run("verify lem-2.4 --inject-fault 1").code == 2);
  CHECK(run("bounds").code == 2);
  CHECK(run("fmax --weights 1,2 --method nope").code == 2);
}

}  // TEST_SUITE
