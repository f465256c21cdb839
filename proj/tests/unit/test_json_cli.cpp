#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "degenkit/catalog.hpp"
#include "degenkit/error.hpp"
#include "degenkit/json_io.hpp"
#include "degenkit/suites.hpp"

using namespace degenkit;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  const fs::path p = fs::path(DEGENKIT_TEST_TMP) / "cli";
  fs::create_directories(p);
  return p;
}

int run(const std::string& args) {
  const std::string cmd = std::string(DEGENKIT_CLI) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_text(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("algebra json round trip") {
  for (const char* name : {"J1", "p", "A5", "g2"}) {
    const Algebra a = build(name, 5, std::string(name) == "A5" ? Params{{"alpha", "2"}} : Params{});
    CHECK(algebra_from_json(algebra_to_json(a)) == a);
  }
  const Algebra c = build("nu", 3, {{"alpha", "1/2 + 1/3 i"}});
  const Json j = algebra_to_json(c);
  CHECK(j["field"] == "Qi");
  CHECK(algebra_from_json(j) == c);
}

TEST_CASE("algebra json validation") {
  auto code_of = [](const std::string& text) {
    try {
      (void)algebra_from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code_of(R"({"dim":2,"field":"Q","symmetry":"anticommutative","products":[{"i":1,"j":1,"k":1,"c":"1"}]})") ==
        ErrorCode::SymmetryConflict);
  CHECK(code_of(R"({"dim":2,"field":"Q","symmetry":"none","products":[{"i":1,"j":3,"k":1,"c":"1"}]})") ==
        ErrorCode::IndexOutOfRange);
  CHECK(code_of(R"({"dim":2,"field":"Q","symmetry":"none","products":[{"i":1,"j":1,"k":1,"c":"i"}]})") ==
        ErrorCode::Parse);
  CHECK(code_of(R"({"field":"Q"})") == ErrorCode::Parse);
}

TEST_CASE("witness json round trip") {
  for (const char* id : {"W2", "W3", "W6", "W11"}) {
    const WitnessInstance inst = build_witness(id, 5);
    const Witness back = witness_from_json(witness_to_json(inst.witness));
    CHECK(back.kind == inst.witness.kind);
    CHECK(back.matrix == inst.witness.matrix);
    CHECK(back.post_iso == inst.witness.post_iso);
    CHECK(back.target == inst.witness.target);
  }
}

TEST_CASE("suite json is byte-stable") {
  const std::string a = run_suite("pierce", 3, 4, 5).to_json().dump(2);
  const std::string b = run_suite("pierce", 3, 4, 5).to_json().dump(2);
  CHECK(a == b);
  CHECK(Json::parse(a)["suite"] == "pierce");
}

TEST_CASE("cli exit codes") {
  const fs::path dir = scratch();
  const std::string j3 = (dir / "j3.json").string();
  const std::string w2 = (dir / "w2.json").string();
  CHECK(run("catalog emit J3 --n 3 --json " + j3) == 0);
  CHECK(run("check " + j3 + " --variety jordan") == 0);
  CHECK(run("check " + j3 + " --variety lie") == 1);
  CHECK(run("check 'catalog:p@3' --variety lie") == 0);
  CHECK(run("invariants " + j3) == 0);

  CHECK(run("catalog witness W2 --n 3 --param 'zeta=1;0' --json " + w2) == 0);
  CHECK(run("degenerate 'catalog:J(1,0)@3' --witness " + w2) == 0);
  CHECK(run("degenerate 'catalog:J1@3' --witness " + w2) == 1);
  CHECK(run("degenerate 'catalog:H(k=2)@5' --witness 'witness:W6(k=2)@5'") == 0);

  CHECK(run("pierce 'catalog:A3@4' --idempotent 1,0,0,0 --kind associative") == 0);
  CHECK(run("pierce 'catalog:J3@3' --idempotent 0,0,1") == 2);
  CHECK(run("separate 'catalog:J1@4' 'catalog:J3@4'") == 0);
  CHECK(run("separate 'catalog:J3@4' 'catalog:lambda2+a@4'") == 1);
  CHECK(run("verify-paper --suite pierce --n-min 3 --n-max 4") == 0);

  CHECK(run("check " + (dir / "missing.json").string() + " --variety lie") == 2);
  write_text(dir / "bad.json", "{not json");
  CHECK(run("invariants " + (dir / "bad.json").string()) == 2);
  write_text(dir / "conflict.json",
             R"({"dim":2,"field":"Q","symmetry":"commutative","products":[{"i":1,"j":2,"k":1,"c":"1"},{"i":2,"j":1,"k":1,"c":"2"}]})");
  CHECK(run("invariants " + (dir / "conflict.json").string()) == 2);
  CHECK(run("verify-paper --suite nope") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("catalog emit r3 --n 4") == 2);
}

TEST_CASE("cli json output is deterministic") {
  const fs::path dir = scratch();
  const std::string a = (dir / "r1.json").string(), b = (dir / "r2.json").string();
  REQUIRE(run("--json " + a + " invariants 'catalog:g2@6'") == 0);
  REQUIRE(run("--json " + b + " invariants 'catalog:g2@6'") == 0);
  CHECK(read_text(a) == read_text(b));
  CHECK(Json::parse(read_text(a))["dim_der"] == 22);
}
