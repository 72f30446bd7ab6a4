#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperspec/cli.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/io.hpp"

using namespace hyperspec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& stem, const std::string& content = "") {
    path = std::filesystem::temp_directory_path() / (stem + ".json");
    if (!content.empty()) {
      std::ofstream f(path, std::ios::binary);
      f << content;
    }
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("check passes and fails with the right exit codes") {
  Run good = run({"check", "--builtin", "K2"});
  CHECK(good.code == kExitPass);
  CHECK(good.out.find("PASS") != std::string::npos);

  Run bad = run({"check", "--builtin", "broken-A4"});
  CHECK(bad.code == kExitFail);
  CHECK(bad.out.find("A4") != std::string::npos);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("witness (1)") != std::string::npos);
}

TEST_CASE("documents round-trip through the check command") {
  TempFile doc("hyperspec-cli-k2", emit_hyperring(builtin("K2")));
  Run r = run({"check", doc.str()});
  CHECK(r.code == kExitPass);

  TempFile broken("hyperspec-cli-broken", emit_hyperring(builtin("broken-distrib")));
  Run b = run({"check", broken.str()});
  CHECK(b.code == kExitFail);
  CHECK(b.out.find("Distrib") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"check", "--no-such-flag"}).code == kExitUsage);
  CHECK(run({"check"}).code == kExitUsage);  // no source at all
  CHECK(run({"check", "--builtin", "Z99"}).code == kExitUsage);
  CHECK(run({"spectral", "--builtin", "K2", "--space", "sideways"}).code == kExitUsage);
  CHECK(run({"construct", "quotient", "--modulus", "5"}).code == kExitUsage);

  Run both = run({"check", "somefile.json", "--builtin", "K2"});
  CHECK(both.code == kExitUsage);

  Run missing = run({"check", "/no/such/file.json"});
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.find("error:") != std::string::npos);

  TempFile junk("hyperspec-cli-junk", "not a document");
  Run j = run({"check", junk.str()});
  CHECK(j.code == kExitUsage);
  CHECK(j.err.find("MALFORMED") != std::string::npos);
}

TEST_CASE("the carrier cap applies to builtins too") {
  CHECK(run({"check", "--builtin", "Z12", "--max-size", "8"}).code == kExitUsage);
  CHECK(run({"check", "--builtin", "Z12", "--max-size", "12"}).code == kExitPass);
}

TEST_CASE("ideals lists the lattice") {
  Run r = run({"ideals", "--builtin", "Z12"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("hyperideals of Z12: 6") != std::string::npos);
  CHECK(r.out.find("maximal") != std::string::npos);

  Run bad = run({"ideals", "--builtin", "broken-A4"});
  CHECK(bad.code == kExitFail);

  Run machine = run({"ideals", "--builtin", "Z6", "--format", "machine"});
  CHECK(machine.code == kExitPass);
  Json doc = Json::parse(machine.out);
  CHECK(doc["kind"] == "ideal-lattice");
  CHECK(doc["count"] == 4);
}

TEST_CASE("spectral verdicts per space") {
  Run proper = run({"spectral", "--builtin", "K2", "--space", "proper"});
  CHECK(proper.code == kExitPass);
  CHECK(proper.out.find("proper ideal space") != std::string::npos);
  CHECK(proper.out.find("1 point") != std::string::npos);
  CHECK(proper.out.find("spectral yes") != std::string::npos);

  Run both = run({"spectral", "--builtin", "Z6", "--format", "machine"});
  CHECK(both.code == kExitPass);
  Json docs = Json::parse(both.out);
  REQUIRE(docs.is_array());
  REQUIRE(docs.size() == 2);
  CHECK(docs[0]["variant"] == "full");
  CHECK(docs[1]["variant"] == "proper");
  CHECK(docs[0]["spectral"] == true);
  CHECK(docs[1]["spectral"] == true);

  Run one = run({"spectral", "--builtin", "Z6", "--space", "full", "--format", "machine"});
  CHECK(Json::parse(one.out).is_object());
}

TEST_CASE("theorem verifies the pipeline end to end") {
  Run r = run({"theorem", "--builtin", "Z6"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("VERIFIED") != std::string::npos);
  CHECK(r.out.find("1 in 3 + 4") != std::string::npos);

  Run machine = run({"theorem", "--builtin", "Z6", "--format", "machine"});
  CHECK(machine.code == kExitPass);
  Json doc = Json::parse(machine.out);
  CHECK(doc["kind"] == "theorem");
  CHECK(doc["overall"] == true);
}

TEST_CASE("theorem reports are seed-independent when exhaustive") {
  Run a = run({"theorem", "--builtin", "Z6", "--format", "machine", "--seed", "7"});
  Run b = run({"theorem", "--builtin", "Z6", "--format", "machine", "--seed", "9"});
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
}

TEST_CASE("quotient construction emits a loadable document") {
  Run r = run({"construct", "quotient", "--modulus", "5", "--subgroup", "1,4"});
  CHECK(r.code == kExitPass);
  HyperringSpec spec = parse_hyperring(r.out);
  CHECK(spec.n == 3);
  CHECK(spec.name == "Z5/G");

  TempFile target("hyperspec-cli-quotient");
  Run w = run({"construct", "quotient", "--modulus", "7", "--subgroup", "1,2,4",
               "--name", "myq", "-o", target.str()});
  CHECK(w.code == kExitPass);
  Run back = run({"check", target.str()});
  CHECK(back.code == kExitPass);

  CHECK(run({"construct", "quotient", "--modulus", "5", "--subgroup", "1,3"}).code ==
        kExitUsage);
}

TEST_CASE("help is help") {
  CHECK(run({"--help"}).code == kExitPass);
  Run r = run({"selftest", "--help"});
  CHECK(r.code == kExitPass);
  CHECK(run({"--help"}).out.find("check") != std::string::npos);
}
