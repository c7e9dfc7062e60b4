#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "symconf/pointset_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path workDir() {
  static const fs::path d = [] {
    const fs::path p = fs::temp_directory_path() / ("symconf_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run cli(const std::string& args) {
  const fs::path log = workDir() / "last.log";
  const std::string cmd = "cd '" + workDir().string() + "' && '" SYMCONF_CLI_PATH "' " + args + " > '" + log.string() + "' 2>&1";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(log)};
}

void writeText(const std::string& name, const std::string& text) { std::ofstream(workDir() / name) << text; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("encode reports a per-family breakdown") {
    writeText("e.toml", "n = 8\nno_kgon = 5\nsymmetry_breaking = \"angular\"\n");
    const Run r = cli("encode --config e.toml --out e");
    CHECK(r.code == 0);
    CHECK(r.out.find("linear_order: 336") != std::string::npos);
    CHECK(r.out.find("no_kgon: 56") != std::string::npos);
    CHECK(fs::exists(workDir() / "e.cnf"));
    CHECK(fs::exists(workDir() / "e.map"));
    CHECK(slurp(workDir() / "e.cnf").rfind("c symconf n=8", 0) == 0);
  }

  TEST_CASE("stats on the 4-fold table") {
    symconf::writePointSetFile((workDir() / "t1.txt").string(), fixtures::fourFold());
    const Run r = cli("stats --points t1.txt --s 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("4-gons: 924") != std::string::npos);
    CHECK(r.out.find("no 6-gon: true") != std::string::npos);
    CHECK(r.out.find("4-fold symmetric: true") != std::string::npos);
  }

  TEST_CASE("plots are byte-identical across runs") {
    symconf::writePointSetFile((workDir() / "t1.txt").string(), fixtures::fourFold());
    REQUIRE(cli("plot --points t1.txt --out a.svg").code == 0);
    REQUIRE(cli("plot --points t1.txt --out b.svg").code == 0);
    const std::string a = slurp(workDir() / "a.svg");
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(workDir() / "b.svg"));
  }

  TEST_CASE("usage errors and unsatisfiable instances have distinct exit codes") {
    CHECK(cli("").code == 1);
    CHECK(cli("encode").code == 1);
    writeText("bad.toml", "n = 8\nno_such_key = 1\n");
    CHECK(cli("encode --config bad.toml --out bad").code == 1);
    writeText("u.toml", "n = 5\nno_kgon = 4\nsymmetry_breaking = \"angular\"\n");
    REQUIRE(cli("encode --config u.toml --out u").code == 0);
    CHECK(cli("solve --cnf u.cnf --out u.assign").code == 10);
  }

  TEST_CASE("3-fold 16-point pipeline ends unsatisfiable with a manifest") {
    writeText("t3.toml", "n = 16\ns = 3\ncenter = true\nno_kgon = 6\nsymmetry_breaking = \"layers\"\n");
    const Run r = cli("pipeline --config t3.toml --out run3");
    CHECK(r.code == 10);
    const std::string m = slurp(workDir() / "run3" / "manifest.txt");
    CHECK(m.find("solve_status=unsat\n") != std::string::npos);
    CHECK(m.find("exit_code=10\n") != std::string::npos);
  }

  TEST_CASE("pipeline runs replay bit-exactly from the same seed") {
    writeText("p.toml", "n = 8\nno_kgon = 5\nsymmetry_breaking = \"angular\"\nrealize = \"first\"\nseed = 3\n");
    REQUIRE(cli("pipeline --config p.toml --out ra").code == 0);
    REQUIRE(cli("pipeline --config p.toml --out rb").code == 0);
    const std::string a = slurp(workDir() / "ra" / "solution_0001.exact.txt");
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(workDir() / "rb" / "solution_0001.exact.txt"));
    CHECK(slurp(workDir() / "ra" / "manifest.txt").find("realized_certified=1\n") != std::string::npos);
    const Run v = cli("verify --points ra/solution_0001.exact.txt --assignment ra/solutions/solution_0001.txt");
    CHECK(v.code == 0);
  }
}
