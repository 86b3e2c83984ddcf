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

std::string cli_path() {
  const char* env = std::getenv("DOMSET_CLI");
  REQUIRE_MESSAGE(env != nullptr, "DOMSET_CLI must point at the built binary");
  return env;
}

RunResult run(const std::string& args, bool keep_stderr = false) {
  const std::string cmd =
      cli_path() + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_file(const char* name) {
  return fs::temp_directory_path() / (std::string("domset_cli_") + name);
}

}  // namespace

TEST_CASE("gen writes byte-identical files for identical flags") {
  const auto a = temp_file("gen_a.graph");
  const auto b = temp_file("gen_b.graph");
  CHECK(run("gen --n 24 --p 0.3 --seed 99 --out " + a.string()).exit_code == 0);
  CHECK(run("gen --n 24 --p 0.3 --seed 99 --out " + b.string()).exit_code == 0);
  const std::string contents = slurp(a);
  CHECK(contents == slurp(b));
  CHECK_FALSE(contents.empty());

  const auto c = temp_file("gen_c.graph");
  CHECK(run("gen --n 24 --p 0.3 --seed 100 --out " + c.string()).exit_code == 0);
  CHECK(contents != slurp(c));
}

TEST_CASE("gen requires a seed") {
  CHECK(run("gen --n 4 --p 0.5 --out /tmp/domset_noseed.graph").exit_code == 1);
}

TEST_CASE("gen degenerate probabilities") {
  const auto empty = temp_file("gen_p0.graph");
  CHECK(run("gen --n 5 --p 0 --seed 1 --out " + empty.string()).exit_code == 0);
  CHECK(slurp(empty) == "5 0\n");

  const auto full = temp_file("gen_p1.graph");
  CHECK(run("gen --n 3 --p 1 --seed 1 --out " + full.string()).exit_code == 0);
  CHECK(slurp(full) == "3 3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("solve agrees across algorithms on the worked instance") {
  const auto path = temp_file("p3.graph");
  std::ofstream(path) << "3 2\n0 1\n1 2\n";
  for (const char* algo : {"bb", "exhaustive", "oracle"}) {
    const auto res = run("solve --in " + path.string() + " --algo " + algo);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"opt_size\":1") != std::string::npos);
    CHECK(res.out.find("\"opt_set\":[1]") != std::string::npos);
  }
}

TEST_CASE("solve deterministic runs match byte for byte") {
  const auto path = temp_file("det.graph");
  CHECK(run("gen --n 18 --p 0.4 --seed 7 --out " + path.string()).exit_code == 0);
  const auto a = run("solve --in " + path.string() + " --tie det");
  const auto b = run("solve --in " + path.string() + " --tie det");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("solve exit codes") {
  const auto path = temp_file("cap.graph");
  CHECK(run("gen --n 10 --p 0.5 --seed 3 --out " + path.string()).exit_code == 0);
  const auto capped = run("solve --in " + path.string() + " --cap 1");
  CHECK(capped.exit_code == 2);
  CHECK(capped.out.find("\"capped\":true") != std::string::npos);
  CHECK(capped.out.find("expansion_cap") != std::string::npos);

  const auto bad = temp_file("bad.graph");
  std::ofstream(bad) << "3 1\n2 1\n";
  const auto err = run("solve --in " + bad.string(), true);
  CHECK(err.exit_code == 1);
  CHECK(err.out.find("line 2") != std::string::npos);

  CHECK(run("solve --in " + path.string() + " --tie rand").exit_code == 1);
  CHECK(run("solve --in " + path.string() + " --tie rand --seed 5").exit_code == 0);
  CHECK(run("solve --in " + path.string() + " --bogus-flag").exit_code == 1);
}

TEST_CASE("bounds records") {
  const auto gplus = run("bounds gplus --j 1e6");
  CHECK(gplus.exit_code == 0);
  CHECK(gplus.out.find("\"value\":2.718") != std::string::npos);

  const auto table = run("bounds feps-table --c 20");
  CHECK(table.exit_code == 0);
  std::size_t rows = 0, pos = 0;
  while ((pos = table.out.find("\"pass\":true", pos)) != std::string::npos) {
    ++rows;
    pos += 1;
  }
  CHECK(rows == 9);

  const auto eds = run("bounds expected-ds --n 1 --p 0.7");
  CHECK(eds.out.find("\"value\":1.0") != std::string::npos);
}

TEST_CASE("experiment sweeps are deterministic and schedule-independent") {
  const auto a = temp_file("sweep_a.csv");
  const auto b = temp_file("sweep_b.csv");
  const auto c = temp_file("sweep_c.csv");
  const std::string common =
      "experiment --regime c-over-n --param 2 --n-list 12,10 --trials 4 --seed 21 --algo bb "
      "--cap 100000 --out ";
  const auto first = run(common + a.string());
  CHECK(first.exit_code == 0);
  const auto second = run(common + b.string());
  CHECK(second.exit_code == 0);
  const auto threaded = run(common + c.string() + " --threads 3");
  CHECK(threaded.exit_code == 0);

  const std::string csv = slurp(a);
  CHECK(csv == slurp(b));
  CHECK(csv == slurp(c));
  // stdout summaries must match byte for byte when the full flag set does
  const auto rerun = run(common + a.string());
  CHECK(rerun.out == first.out);
  CHECK(csv.find("regime,param,n,p,trial,seed,algorithm,expansions,opt_size,capped") == 0);
}

TEST_CASE("verify battery passes") {
  const auto res = run("verify --max-n 3");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"pass\":true") != std::string::npos);
}
