#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "gkmcycle/fixtures.hpp"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the installed binary through the shell and captures stdout.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  std::string tmp = "/tmp/gkm_cli_" + std::to_string(getpid()) + "_" +
                    std::to_string(counter++);
  std::string cmd = env + (env.empty() ? "" : " ") + GKM_CYCLE_CLI_PATH +
                    " " + args + " > " + tmp + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(tmp.c_str());
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// Copies the golden directory, applies one replacement to one file, and
// returns the environment prefix pointing the binary at the copy.
std::string corrupted_fixtures(const std::string& file,
                               const std::string& needle,
                               const std::string& replacement) {
  namespace fs = std::filesystem;
  static int counter = 0;
  std::string dir = "/tmp/gkm_fx_" + std::to_string(getpid()) + "_" +
                    std::to_string(counter++);
  fs::remove_all(dir);
  fs::copy(gkmcycle::fixtures_dir(), dir);
  std::string text = read_file(dir + "/" + file);
  size_t at = text.find(needle);
  REQUIRE(at != std::string::npos);
  text.replace(at, needle.size(), replacement);
  write_file(dir + "/" + file, text);
  return "GKM_CYCLE_FIXTURES=" + dir;
}

const char* kLoopDot =
    "digraph moment_graph {\n"
    "  \"(0,1,1)\";\n"
    "  \"(1,0,1)\";\n"
    "  \"(1,1,0)\";\n"
    "  \"(2,0,0)\";\n"
    "  \"(1,0,1)\" -> \"(0,1,1)\" [label=\"e2-e1-d\"];\n"
    "  \"(1,1,0)\" -> \"(0,1,1)\" [label=\"e3-e1-d\"];\n"
    "  \"(1,1,0)\" -> \"(1,0,1)\" [label=\"e3-e2\"];\n"
    "  \"(2,0,0)\" -> \"(1,0,1)\" [label=\"e3-e1\"];\n"
    "  \"(2,0,0)\" -> \"(1,1,0)\" [label=\"e2-e1\"];\n"
    "}\n";

}  // namespace

TEST_CASE("betti output") {
  auto r = run_cli("betti --fixture loop-gr");
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 2\n");
  auto same = run_cli("betti --fixture approx:2,1,1");
  CHECK(same.code == 0);
  CHECK(same.out == r.out);
}

TEST_CASE("moment graph dot and json output") {
  auto dot = run_cli("moment-graph --fixture loop-gr");
  CHECK(dot.code == 0);
  CHECK(dot.out == kLoopDot);
  auto explicit_dot = run_cli("moment-graph --fixture loop-gr --format dot");
  CHECK(explicit_dot.out == kLoopDot);

  auto js = run_cli("moment-graph --fixture loop-gr --format json");
  CHECK(js.code == 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 5);
  CHECK(js.out ==
        read_file(gkmcycle::fixtures_dir() + "/loop-gr.graph.json"));

  auto proj = run_cli("moment-graph --fixture loop-gr --format dot "
                      "--project-delta");
  CHECK(proj.code == 0);
  CHECK(proj.out.find("-d\"") == std::string::npos);
  CHECK(proj.out.find("e2-e1") != std::string::npos);
}

TEST_CASE("describe output") {
  auto r = run_cli("describe --fixture loop-gr");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "name: loop-gr\n"
        "cycle vertices: 1\n"
        "segments: U(1;2) U(1;1) U(1;1)\n"
        "level dimensions: 4\n"
        "total dimension: 4\n"
        "subspace dimensions: 2\n"
        "grading step D: 1\n"
        "weights level 1: 1 2 3 4\n"
        "cocharacter: (1; 1,3,4)\n"
        "fixed points: 4\n"
        "betti numbers: 1 1 2\n");
  auto ex = run_cli("describe --fixture ex47");
  CHECK(ex.code == 0);
  CHECK(ex.out.find("subspace dimensions: none") != std::string::npos);
  CHECK(ex.out.find("cocharacter: (2; 4,9,6,9,12,1)") != std::string::npos);
  CHECK(ex.out.find("fixed points:") == std::string::npos);
}

TEST_CASE("fixed points listing") {
  auto r = run_cli("fixed-points --fixture loop-gr");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "(0,1,1) dim 0\n"
        "(1,0,1) dim 1\n"
        "(1,1,0) dim 2\n"
        "(2,0,0) dim 2\n");
  auto js = run_cli("fixed-points --fixture fl3a --format json");
  CHECK(js.code == 0);
  CHECK(nlohmann::json::parse(js.out).size() == 7);
}

TEST_CASE("unique basis matches the bundled golden") {
  auto js = run_cli("basis --fixture loop-gr --unique --format json");
  CHECK(js.code == 0);
  CHECK(js.out == read_file(gkmcycle::fixtures_dir() + "/loop-gr.basis.json"));

  auto table = run_cli("basis --fixture loop-gr --unique");
  CHECK(table.code == 0);
  CHECK(table.out.find("theta_2:\n  (1,0,1): e1-e2+d\n") !=
        std::string::npos);
  CHECK(table.out.find("(2,0,0): 2e1-e2-e3+d") != std::string::npos);

  auto flow = run_cli("basis --fixture fl3a --format json");
  CHECK(flow.code == 0);
  CHECK(flow.out == read_file(gkmcycle::fixtures_dir() + "/fl3a.basis.json"));
}

TEST_CASE("basis with an explicit table file") {
  auto r = run_cli("basis --fixture loop-gr --unique --euler-table " +
                   gkmcycle::fixtures_dir() + "/loop-gr.euler.json " +
                   "--format json");
  CHECK(r.code == 0);
  CHECK(r.out == read_file(gkmcycle::fixtures_dir() + "/loop-gr.basis.json"));
}

TEST_CASE("examples lists every fixture") {
  auto r = run_cli("examples");
  CHECK(r.code == 0);
  for (const auto& f : gkmcycle::fixtures()) {
    CHECK(r.out.find(f.name + ":") != std::string::npos);
  }
  CHECK(r.out.find("approx:n,k,N") != std::string::npos);
}

TEST_CASE("verify accepts every fixture") {
  for (const char* name :
       {"loop-gr", "fl3", "fl3a", "ex47", "approx:2,1,1"}) {
    auto r = run_cli(std::string("verify --fixture ") + name);
    INFO(name, ": ", r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed\n") != std::string::npos);
  }
  auto seeded = run_cli("verify --fixture loop-gr --seed 42");
  CHECK(seeded.code == 0);
  CHECK(seeded.out.find("numeric spot checks (seed 42)") !=
        std::string::npos);
}

TEST_CASE("verify catches corruption in any golden file") {
  struct Case {
    const char* fixture;
    const char* file;
    const char* needle;
    const char* replacement;
  };
  const Case cases[] = {
      {"loop-gr", "loop-gr.rep.json", "\"n\": 1", "\"n\": 2"},
      {"loop-gr", "loop-gr.graph.json", "\"delta\": -1", "\"delta\": -7"},
      {"loop-gr", "loop-gr.basis.json", "\"num\": \"1\"", "\"num\": \"3\""},
      {"loop-gr", "loop-gr.euler.json", "\"prov\": \"resolution\"",
       "\"prov\": \"external\""},
      {"loop-gr", "loop-gr.fibers.json", "\"j\": 2", "\"j\": 3"},
      {"fl3", "fl3.euler.json", "\"prov\": \"derived\"",
       "\"prov\": \"smooth-rule\""},
      {"ex47", "ex47.grading.json", "\"(2,5)\": 12", "\"(2,5)\": 99"},
  };
  for (const auto& c : cases) {
    std::string env = corrupted_fixtures(c.file, c.needle, c.replacement);
    auto r = run_cli(std::string("verify --fixture ") + c.fixture, env);
    INFO(c.file, " with ", c.needle, " -> ", c.replacement);
    CHECK(r.code == 1);
  }
  std::string env = corrupted_fixtures("loop-gr.euler.json", "{", "not json{");
  auto r = run_cli("verify --fixture loop-gr", env);
  CHECK(r.code == 1);
}

TEST_CASE("bad arguments exit with code 2") {
  CHECK(run_cli("betti").code == 2);
  CHECK(run_cli("nonsense").code == 2);
  CHECK(run_cli("betti --fixture nosuch").code == 2);
  CHECK(run_cli("betti --fixture approx:9").code == 2);
  CHECK(run_cli("moment-graph --fixture loop-gr --format yaml").code == 2);
  CHECK(run_cli("basis --fixture fl3a --unique").code == 2);
  CHECK(run_cli("fixed-points --fixture ex47").code == 2);
  CHECK(run_cli("betti --fixture loop-gr --input x.json").code == 2);
  CHECK(run_cli("--help").code == 0);

  write_file("/tmp/gkm_cli_bad_rep.json", "{\"bad\": 1}");
  CHECK(run_cli("describe --input /tmp/gkm_cli_bad_rep.json").code == 2);
  write_file("/tmp/gkm_cli_bad_rep.json", "not json at all");
  CHECK(run_cli("verify --input /tmp/gkm_cli_bad_rep.json").code == 2);
  std::remove("/tmp/gkm_cli_bad_rep.json");
}

TEST_CASE("input files work like fixtures") {
  nlohmann::json j;
  to_json(j, gkmcycle::fixture_rep("loop-gr"));
  write_file("/tmp/gkm_cli_rep.json", j.dump());
  auto r = run_cli("betti --input /tmp/gkm_cli_rep.json");
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 2\n");
  auto v = run_cli("verify --input /tmp/gkm_cli_rep.json");
  CHECK(v.code == 0);
  // No goldens are consulted for plain inputs.
  CHECK(v.out.find("golden") == std::string::npos);
  std::remove("/tmp/gkm_cli_rep.json");
}

TEST_CASE("output is stable across thread settings") {
  for (const char* sub :
       {"moment-graph --fixture fl3a --format json",
        "verify --fixture fl3a", "basis --fixture fl3 --unique"}) {
    auto base = run_cli(sub);
    REQUIRE(base.code == 0);
    for (const char* threads : {"1", "7", "0"}) {
      auto r = run_cli(sub, std::string("GKM_CYCLE_THREADS=") + threads);
      CHECK(r.code == 0);
      CHECK(r.out == base.out);
    }
  }
}

TEST_CASE("out flag writes the same bytes to a file") {
  std::string path = "/tmp/gkm_cli_outfile";
  auto direct = run_cli("moment-graph --fixture loop-gr");
  auto filed = run_cli("moment-graph --fixture loop-gr --out " + path);
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(read_file(path) == direct.out);
  std::remove(path.c_str());
}
