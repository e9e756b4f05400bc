#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end checks of the mcq binary: exit statuses, report determinism and
// the file pipelines.  The binary path arrives in the MCQ_TOOL environment
// variable, set by CMake.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <mcq/affine.hpp>
#include <mcq/io.hpp>

#include "test_support.hpp"

using namespace mcq;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const char* tool = std::getenv("MCQ_TOOL");
  REQUIRE_MESSAGE(tool != nullptr, "MCQ_TOOL must point at the mcq binary");
  const std::string cmd = env + (env.empty() ? "" : " ") + tool + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  while (size_t got = fread(buffer, 1, sizeof buffer, pipe))
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("mcq_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

}  // namespace

TEST_CASE("verify exits 0 on a passing MCQ and 1 on a named failed condition") {
  TempDir dir;
  const FiniteMcq assoc = associated_mcq(mcqtest::z2_family_on_r3());
  write_file(dir.file("assoc.json"), io::serialize(assoc));
  const CliResult ok = run_cli("verify mcq " + dir.file("assoc.json"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.output == "PASS\n");

  const FiniteRing r = ring_zn(2);
  SixTuple t = trivial_tuple(assoc, r, module_self(r));
  t.f3[1][0][1] = 0;  // not a unit
  write_file(dir.file("bad_tuple.json"), io::serialize(t));
  const CliResult bad = run_cli("verify tuple " + dir.file("bad_tuple.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("(0-i)") != std::string::npos);
  CHECK(bad.output.find("witness") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  TempDir dir;
  write_file(dir.file("ragged.json"),
             R"({"format_version":1,"kind":"mcq",
                 "components":[{"order":2,"table":[[0,1],[1]],"identity":0}],
                 "triangle":[[0,0],[1,1]]})");
  CHECK(run_cli("verify mcq " + dir.file("ragged.json")).exit_code == 2);
  CHECK(run_cli("verify mcq /no/such/file.json").exit_code == 2);
  CHECK(run_cli("build cyclic-group 0 -o " + dir.file("g.json")).exit_code == 2);
  // a ring failing verification on load is a named failed condition
  write_file(dir.file("zero_one.json"),
             R"({"format_version":1,"kind":"ring","order":2,
                 "add":[[0,1],[1,0]],"mul":[[0,0],[0,1]],"zero":0,"one":0})");
  const CliResult load = run_cli("verify ring " + dir.file("zero_one.json"));
  CHECK(load.exit_code == 1);
  CHECK(load.output.find("one-ne-zero") != std::string::npos);
}

TEST_CASE("enumerate exits 3 when the budget is below the space size") {
  TempDir dir;
  write_file(dir.file("x.json"), io::serialize(mcq_from_group(cyclic_group(2))));
  write_file(dir.file("z3.json"), io::serialize(ring_zn(3)));
  const std::string base =
      "enumerate pairs --mcq " + dir.file("x.json") + " --ring " + dir.file("z3.json");
  CHECK(run_cli(base + " --budget 10").exit_code == 3);
  CHECK(run_cli(base, "MCQ_BUDGET=10").exit_code == 3);

  const CliResult ok = run_cli(base);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output == "count=2\n");
  // byte-identical reports across runs and task counts
  CHECK(run_cli(base).output == ok.output);
  CHECK(run_cli(base + " --tasks 4").output == ok.output);
}

TEST_CASE("build, extend, reduce, certify, transport, iso pipeline") {
  TempDir dir;
  auto ok = [&](const std::string& args) {
    const CliResult r = run_cli(args);
    CAPTURE(args);
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);
    return r;
  };

  ok("build cyclic-group 3 -o " + dir.file("z3g.json"));
  ok("build ring-zn 3 -o " + dir.file("z3r.json"));
  ok("build module-self " + dir.file("z3r.json") + " -o " + dir.file("z3m.json"));
  ok("verify module " + dir.file("z3m.json") + " --ring " + dir.file("z3r.json"));
  ok("build mcq-from-group " + dir.file("z3g.json") + " -o " + dir.file("x.json"));
  ok("build trivial-tuple " + dir.file("x.json") + " " + dir.file("z3r.json") + " " +
     dir.file("z3m.json") + " -o " + dir.file("t.json"));
  ok("verify tuple " + dir.file("t.json") + " --alt-1ii");

  ok("transport " + dir.file("t.json") + " --seed 42 -o " + dir.file("t42.json") +
     " --witness-out " + dir.file("w42.json"));
  ok("verify tuple " + dir.file("t42.json"));

  // transport is deterministic for a fixed seed
  ok("transport " + dir.file("t.json") + " --seed 42 -o " + dir.file("t42b.json"));
  std::ifstream a(dir.file("t42.json")), b(dir.file("t42b.json"));
  std::string sa((std::istreambuf_iterator<char>(a)), {});
  std::string sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);

  ok("reduce " + dir.file("t42.json") + " -o " + dir.file("red.json") +
     " --witness-out " + dir.file("redw.json") + " --tuple-out " +
     dir.file("redt.json"));
  ok("verify augmented " + dir.file("red.json"));
  ok("verify tuple " + dir.file("redt.json"));

  const CliResult cert = ok("certify " + dir.file("t42.json") + " -o " +
                            dir.file("cert.json"));
  CHECK(cert.output.find("certificate ok") != std::string::npos);
  ok("verify certificate " + dir.file("cert.json"));

  ok("extend " + dir.file("t42.json") + " -o " + dir.file("ext.json") +
     " --projection-out " + dir.file("proj.json"));
  ok("verify mcq " + dir.file("ext.json"));

  // the pair route: trivial pair extends with M = R by default
  ok("build trivial-pair " + dir.file("x.json") + " " + dir.file("z3r.json") +
     " -o " + dir.file("p.json"));
  ok("verify pair " + dir.file("p.json") + " --properties");
  ok("extend " + dir.file("p.json") + " -o " + dir.file("pext.json"));
  ok("verify mcq " + dir.file("pext.json"));

  // iso: the extension of the transported tuple is isomorphic to the
  // extension of the original (the certificate's theorem, via files)
  ok("extend " + dir.file("t.json") + " -o " + dir.file("ext0.json"));
  const CliResult iso = ok("iso " + dir.file("ext0.json") + " " +
                           dir.file("ext.json") + " -o " + dir.file("iso.json"));
  CHECK(iso.output.find("isomorphism=[") != std::string::npos);

  // non-isomorphic inputs exit 1 with a named condition
  ok("build cyclic-group 6 -o " + dir.file("z6g.json"));
  ok("build mcq-from-group " + dir.file("z6g.json") + " -o " + dir.file("z6.json"));
  ok("build dihedral-quandle 3 -o " + dir.file("r3.json"));
  ok("build zfamily " + dir.file("r3.json") + " -o " + dir.file("fam.json"));
  ok("verify gfamily " + dir.file("fam.json"));
  ok("build associated-mcq " + dir.file("fam.json") + " -o " + dir.file("assoc.json"));
  const CliResult not_iso = run_cli("iso " + dir.file("z6.json") + " " +
                                    dir.file("assoc.json"));
  CHECK(not_iso.exit_code == 1);
  CHECK(not_iso.output.find("not-isomorphic") != std::string::npos);
}

TEST_CASE("command-line usage errors exit 2") {
  CHECK(run_cli("verify nonsense-kind somefile").exit_code == 2);
  CHECK(run_cli("no-such-verb").exit_code == 2);
  CHECK(run_cli("build unknown-constructor 1 -o /tmp/x.json").exit_code == 2);
}
