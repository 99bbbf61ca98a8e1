#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& redirect = " 2>/dev/null") {
  const std::string cmd = std::string(SKEIN_CLI_PATH) + " " + args + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run run_stderr(const std::string& args) {
  return run(args, " 2>&1 >/dev/null");
}

fs::path write_manifold(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("cli invariant on the sphere") {
  const auto file = write_manifold("skein-empty.json", R"({"vertices":[],"edges":[]})");
  const Run r = run("invariant --manifold " + file.string() + " --rank 2 --level 2 --mode spin --json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("tau").at("rational") == 1);

  const Run refined =
      run("invariant --manifold " + file.string() + " --rank 2 --level 2 --mode spin --refined --json");
  REQUIRE(refined.code == 0);
  const json t = json::parse(refined.out);
  CHECK(t.at("checks").at("decomposition") == "pass");
  CHECK(t.at("refined").size() == 1);
}

TEST_CASE("cli check") {
  CHECK(run("check --rank 2 --level 2 --mode spin").code == 0);
  const Run loose = run("check --rank 2 --level 2 --mode spin --calibration unanchored");
  CHECK(loose.code == 1);
  CHECK(loose.out.find("class 1") != std::string::npos);
  CHECK(run("check --rank 2 --level 2 --mode spin --calibration linear").code == 1);
}

TEST_CASE("cli structures") {
  const auto file = write_manifold("skein-s1s2.json", R"({"vertices":[{"id":"a","framing":0}],"edges":[]})");
  const Run r = run("structures --manifold " + file.string() + " --mode spin --json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("count") == 2);
  CHECK(j.at("structures").size() == 2);
}

TEST_CASE("cli dims") {
  const Run r = run("dims --rank 2 --level 2 --genus 2");
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
  CHECK(run("dims --rank 2 --level 2 --genus 2 --grading 0,1").out == "2\n");
}

TEST_CASE("cli errors") {
  CHECK(run("").code == 2);
  CHECK(run("category --rank 2").code == 2);
  CHECK(run("dims --rank 2 --level 2 --genus x").code == 2);
  CHECK(run("category --rank 6 --level 6 --mode spin").code == 2);
  CHECK(run("invariant --manifold /nonexistent --rank 2 --level 2 --mode spin").code == 2);
  const auto bad = write_manifold("skein-cycle.json",
                                  R"({"vertices":[{"id":"a","framing":1},{"id":"b","framing":1},{"id":"c","framing":1}],
                                      "edges":[["a","b"],["b","c"],["c","a"]]})");
  const Run e = run_stderr("invariant --manifold " + bad.string() + " --rank 2 --level 2 --mode spin --json");
  CHECK(e.code == 1);
  const json j = json::parse(e.out);
  CHECK(j.at("error").at("kind") == "InvalidForest");
}

TEST_CASE("cli category cache is byte identical") {
  const fs::path dir = fs::temp_directory_path() / "skein-cli-cache";
  fs::remove_all(dir);
  const std::string args = "category --rank 2 --level 6 --mode spin --json --cache-dir " + dir.string();
  const Run a = run(args);
  const Run b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!fs::is_empty(dir));
  const Run c = run("category --rank 2 --level 6 --mode spin --json");
  CHECK(c.out == a.out);
  fs::remove_all(dir);
}
