#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "mckay/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mckay::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify local E8") {
  const Run r = run({"verify", "local", "--type", "E8"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("pass") == true);
  const auto& checks = j.at("result").at("checks");
  CHECK(checks.size() == 4);
  for (const auto& c : checks) CHECK(c.at("pass") == true);
  CHECK(j.at("manifest").at("seed") == 0x5eed);
}

TEST_CASE("McKay graph as DOT") {
  const Run r = run({"mckay", "--type", "D4", "--format", "dot"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int vertices = 0;
  std::map<std::string, int> degree;
  while (std::getline(lines, line)) {
    const auto edge = line.find(" -- ");
    if (edge != std::string::npos) {
      std::istringstream ws(line);
      std::string a, dash, b;
      ws >> a >> dash >> b;
      if (!b.empty() && b.back() == ';') b.pop_back();
      ++degree[a];
      ++degree[b];
    } else if (line.find("[label=") != std::string::npos) {
      ++vertices;
    }
  }
  CHECK(vertices == 5);
  int max_degree = 0;
  for (const auto& [v, d] : degree) max_degree = std::max(max_degree, d);
  CHECK(max_degree == 4);
}

TEST_CASE("input errors exit with 2") {
  const Run d3 = run({"verify", "local", "--type", "D3"});
  CHECK(d3.code == 2);
  CHECK(d3.err.find("D_n requires n >= 4") != std::string::npos);
  CHECK(run({"verify", "local"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "global", "--config", "/nonexistent/surface.json"}).code == 2);
  CHECK(run({"minor", "--group", "NoSuchGroup"}).code == 2);
}

TEST_CASE("other subcommands") {
  const Run minor = run({"minor", "--group", "S3"});
  CHECK(minor.code == 0);
  CHECK(nlohmann::json::parse(minor.out).at("pass") == true);

  const Run info = run({"group", "info", "E6", "--json"});
  CHECK(info.code == 0);
  CHECK(nlohmann::json::parse(info.out).at("result").at("order") == 24);

  const Run table = run({"chartable", "Q8"});
  CHECK(table.code == 0);

  const Run global = run({"verify", "global", "--config", MCKAY_TEST_DATA_DIR "/surface_a2_d4_e8.json"});
  CHECK(global.code == 0);
}

TEST_CASE("reports are deterministic apart from the manifest") {
  auto strip = [](const std::string& text) {
    auto j = nlohmann::json::parse(text);
    j.erase("manifest");
    return j.dump();
  };
  const Run a = run({"--seed", "1", "verify", "local", "--type", "D6"});
  const Run b = run({"--seed", "99", "verify", "local", "--type", "D6"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(strip(a.out) == strip(b.out));
  CHECK(a.out != b.out);
}
