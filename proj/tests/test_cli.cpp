#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run bsol(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + BSOL_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("orbit text and json") {
  const auto text = bsol("orbit --variant bulgarian --state 4,3,3");
  REQUIRE(text.code == 0);
  CHECK(text.out.find("9: 4,3,2,1") != std::string::npos);
  CHECK(text.out.find("tail 9, cycle length 1") != std::string::npos);

  const auto json_out = bsol("orbit --state 4,3,3 --format json");
  REQUIRE(json_out.code == 0);
  CHECK(count_lines(json_out.out) == 11);
  std::size_t start = 0;
  for (std::size_t line = 0; line < 11; ++line) {
    const auto end = json_out.out.find('\n', start);
    const auto j = nlohmann::json::parse(json_out.out.substr(start, end - start));
    CHECK(j.at("step") == line);
    start = end + 1;
  }
}

TEST_CASE("orbit for compound variants") {
  const auto a = bsol("orbit --variant austrian --state 3,2 --L 3");
  REQUIRE(a.code == 0);
  CHECK(a.out.find("1: 2,1|bank=2|L=3") != std::string::npos);
  const auto j = bsol("orbit --variant janetzko --state 2,1,0 --pointer 1");
  REQUIRE(j.code == 0);
  CHECK(j.out.find("1: 0,2,1|pointer=3") != std::string::npos);
  const auto m = bsol("orbit --variant montreal --state 3,2,2");
  REQUIRE(m.code == 0);
  CHECK(m.out.find("tail 0, cycle length 18") != std::string::npos);
  const auto mp = bsol("orbit --variant multiplayer --state 3/1,1");
  REQUIRE(mp.code == 0);
  CHECK(mp.out.find("1: 2,2/1") != std::string::npos);
}

TEST_CASE("graph formats and determinism across workers") {
  const auto text = bsol("graph --n 8");
  REQUIRE(text.code == 0);
  CHECK(text.out.find("components: 2") != std::string::npos);
  const auto one = bsol("graph --n 20 --format json --workers 1");
  const auto four = bsol("graph --n 20 --format json --workers 4");
  REQUIRE(one.code == 0);
  CHECK(one.out == four.out);
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j.at("state_count") == 627);
  const auto dot = bsol("graph --n 5 --format dot");
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(dot.out.find("label=\"1,1,1,1,1\", shape=box") != std::string::npos);
}

TEST_CASE("theorem commands") {
  const auto ge = bsol("ge --n 10 --format json");
  REQUIRE(ge.code == 0);
  CHECK(nlohmann::json::parse(ge.out).at("holds") == true);
  const auto nk = bsol("necklaces --n 12 --cycles --format json");
  REQUIRE(nk.code == 0);
  const auto j = nlohmann::json::parse(nk.out);
  CHECK(j.at("components") == 2);
  CHECK(j.at("cycles").size() == 2);
  const auto big = bsol("necklaces --n 1000");
  CHECK(big.code == 0);
  const auto knuth = bsol("knuth --k 5");
  CHECK(knuth.code == 0);
  CHECK(knuth.out.find("176 states, 0 exceptions") != std::string::npos);
  const auto toom = bsol("toom --k 5 --format json");
  REQUIRE(toom.code == 0);
  CHECK(nlohmann::json::parse(toom.out).at("minimal_s") == 20);
}

TEST_CASE("simulate") {
  const auto a = bsol("simulate --variant popov --n 21 --p 0.9 --seed 42 --samples 2000 --format json");
  const auto b = bsol("simulate --variant popov --n 21 --p 0.9 --seed 42 --samples 2000 --format json");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("generator") == "mt19937_64/u53");
  CHECK(j.at("samples") == 2000);
  const auto csv = bsol("simulate --variant ejs --n 10 --p 0.5 --samples 100 --format csv");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("index,mean_part", 0) == 0);
}

TEST_CASE("render") {
  CHECK(bsol("render --state 4,3,3").out == "####\n###\n###\n");
  CHECK(bsol("render --state 3,2,1 --style cradle").out == "# # #\n # #\n  #\n");
}

TEST_CASE("exit codes") {
  CHECK(bsol("").code == 2);
  CHECK(bsol("orbit").code == 2);
  CHECK(bsol("orbit --state 4,x").code == 2);
  CHECK(bsol("orbit --state 4,-3").code == 2);
  CHECK(bsol("orbit --variant montreal --state 0,1").code == 2);
  CHECK(bsol("orbit --variant nope --state 1").code == 2);
  CHECK(bsol("graph --n 8 --format csv").code == 2);
  CHECK(bsol("render --state 3 --style diagonal").code == 2);
  CHECK(bsol("graph --n 30 --limit 100").code == 3);
  CHECK(bsol("graph --n 30", "BSOL_MAX_STATES=100").code == 3);
  CHECK(bsol("graph --n 30", "BSOL_MAX_STATES=100000").code == 0);
  CHECK(bsol("graph --n 12 --variant carolina --limit 100").code == 3);
  CHECK(bsol("orbit --state 9 --step-bound 2").code == 4);
  CHECK(bsol("--help").code == 0);
}

}
