#include "doctest.h"

#include "hyperspec/constructions.hpp"
#include "hyperspec/io.hpp"

using namespace hyperspec;

namespace {

Json k2_doc() {
  return Json{{"name", "tiny"},
              {"size", 2},
              {"zero", 0},
              {"one", 1},
              {"add", Json::array({Json::array({{0}, {1}}), Json::array({{1}, {0, 1}})})},
              {"mul", Json::array({{0, 0}, {0, 1}})}};
}

void expect_code(const Json& doc, const std::string& code, const std::string& where) {
  try {
    parse_hyperring(doc.dump());
    FAIL("accepted a document that should raise ", code, " at ", where);
  } catch (const FormatError& e) {
    CHECK(e.code == code);
    CHECK(e.where == where);
  }
}

}  // namespace

TEST_CASE("parsing a hand-written document") {
  HyperringSpec s = parse_hyperring(k2_doc().dump());
  CHECK(s.name == "tiny");
  CHECK(s.n == 2);
  CHECK(s.zero == 0);
  CHECK(s.one == 1);
  CHECK(s.add_cell(1, 1) == Subset::of({0, 1}));
  CHECK(s.labels == std::vector<std::string>{"0", "1"});
  CHECK(s.same_tables(builtin("K2")));
  CHECK(check_axioms(s).all_pass());
}

TEST_CASE("the additive identity is moved to index 0") {
  Json doc = Json{
      {"name", "swapped"},
      {"size", 2},
      {"zero", 1},
      {"one", 0},
      {"add", Json::array({Json::array({{0, 1}, {0}}), Json::array({{0}, {1}})})},
      {"mul", Json::array({{0, 1}, {1, 1}})}};
  HyperringSpec s = parse_hyperring(doc.dump());
  CHECK(s.zero == 0);
  CHECK(s.one == 1);
  // labels remember the document's own indices
  CHECK(s.labels == std::vector<std::string>{"1", "0"});
  CHECK(s.same_tables(builtin("K2")));
}

TEST_CASE("first-error diagnostics carry a code and a location") {
  expect_code(Json::array({1, 2}), "MALFORMED", "");
  try {
    parse_hyperring("this is not a document");
    FAIL("junk accepted");
  } catch (const FormatError& e) {
    CHECK(e.code == "MALFORMED");
  }

  for (const char* key : {"name", "size", "zero", "one", "add", "mul"}) {
    Json doc = k2_doc();
    doc.erase(key);
    expect_code(doc, "MISSING_KEY", key);
  }

  Json doc = k2_doc();
  doc["name"] = 7;
  expect_code(doc, "BAD_VALUE", "name");

  doc = k2_doc();
  doc["size"] = 0;
  expect_code(doc, "BAD_VALUE", "size");

  doc = k2_doc();
  doc["size"] = 30;
  expect_code(doc, "OVER_CAP", "size");

  doc = k2_doc();
  doc["zero"] = 5;
  expect_code(doc, "OUT_OF_RANGE", "zero");
  doc = k2_doc();
  doc["one"] = -1;
  expect_code(doc, "OUT_OF_RANGE", "one");

  doc = k2_doc();
  doc["add"] = Json::array({Json::array({{0}, {1}})});
  expect_code(doc, "BAD_SHAPE", "add");

  doc = k2_doc();
  doc["add"][1] = Json::array({Json::array({0})});
  expect_code(doc, "BAD_SHAPE", "add[1]");

  doc = k2_doc();
  doc["add"][0][1] = 1;
  expect_code(doc, "BAD_SHAPE", "add[0][1]");

  doc = k2_doc();
  doc["add"][1][1] = Json::array();
  expect_code(doc, "EMPTY_HYPERSUM", "add[1][1]");

  doc = k2_doc();
  doc["add"][0][0] = Json::array({"x"});
  expect_code(doc, "BAD_VALUE", "add[0][0]");

  doc = k2_doc();
  doc["add"][0][1] = Json::array({9});
  expect_code(doc, "OUT_OF_RANGE", "add[0][1]");

  doc = k2_doc();
  doc["mul"][0][0] = Json::array({0});
  expect_code(doc, "BAD_VALUE", "mul[0][0]");

  doc = k2_doc();
  doc["mul"][1][0] = 9;
  expect_code(doc, "OUT_OF_RANGE", "mul[1][0]");
}

TEST_CASE("the cap is adjustable per call") {
  Json doc = k2_doc();
  CHECK(parse_hyperring(doc.dump(), 2).n == 2);
  try {
    parse_hyperring(doc.dump(), 1);
    FAIL("cap ignored");
  } catch (const FormatError& e) {
    CHECK(e.code == "OVER_CAP");
  }
}

TEST_CASE("emit then parse reproduces every builtin") {
  for (const std::string& name : builtin_names()) {
    HyperringSpec orig = builtin(name);
    std::string text = emit_hyperring(orig);
    HyperringSpec back = parse_hyperring(text);
    INFO(name);
    CHECK(back.name == orig.name);
    CHECK(back.same_tables(orig));
  }
}

TEST_CASE("subset labels use the instance's own names") {
  HyperringSpec sign = builtin("sign");
  CHECK(subset_label(sign, Subset::of({0, 2})) == "{0,-1}");
  CHECK(subset_label(sign, Subset()) == "{}");
  HyperringSpec q = builtin("Z5modG");
  CHECK(subset_label(q, Subset::of({1, 2})) == "{{1,4},{2,3}}");
}

TEST_CASE("axiom reports in both formats") {
  HyperringSpec bad = builtin("broken-A4");
  AxiomReport rep = check_axioms(bad);
  Json doc = axiom_report_json(bad, rep);
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["kind"] == "axiom-report");
  CHECK(doc["instance"] == "broken-A4");
  CHECK(doc["pass"] == false);
  REQUIRE(doc["checks"].size() == 10);
  bool saw_a4 = false;
  for (const auto& c : doc["checks"])
    if (c["axiom"] == "A4") {
      saw_a4 = true;
      CHECK(c["pass"] == false);
      CHECK(c["witness"] == Json::array({"1"}));
    }
  CHECK(saw_a4);

  std::string text = axiom_report_human(bad, rep);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("A4") != std::string::npos);
  CHECK(text.find("witness (1)") != std::string::npos);

  HyperringSpec good = builtin("Z4");
  CHECK(axiom_report_json(good, check_axioms(good))["pass"] == true);
}

TEST_CASE("lattice reports") {
  Hyperring r = validate(builtin("Z6"));
  IdealLattice lat = all_hyperideals(r);
  LatticeReport lrep = lattice_report(r, lat);
  Json doc = lattice_json(r, lat, lrep);
  CHECK(doc["kind"] == "ideal-lattice");
  CHECK(doc["count"] == 4);
  CHECK(doc["ideals"].size() == 4);

  std::string text = lattice_human(r, lat, lrep);
  CHECK(text.find("{0,3}") != std::string::npos);
  CHECK(text.find("{0,2,4}") != std::string::npos);
}

TEST_CASE("spectral and theorem reports") {
  Hyperring r = validate(builtin("Z6"));
  IdealLattice lat = all_hyperideals(r);
  LowerTopologySpace prop = build_lower_topology(r, lat, Variant::proper);
  SpectralVerdict v = spectral_verdict(prop.base);
  Json sdoc = spectral_json(r.spec.name, "proper", prop.base, v);
  CHECK(sdoc["kind"] == "spectral");
  CHECK(sdoc["variant"] == "proper");
  CHECK(sdoc["spectral"] == true);

  TheoremReport rep = verify_theorem(r);
  Json tdoc = theorem_json(r, rep);
  CHECK(tdoc["kind"] == "theorem");
  CHECK(tdoc["overall"] == true);
  CHECK(tdoc["step2_quasi_compact"]["decompositions"].size() == 2);
  CHECK(tdoc["step2_quasi_compact"]["decompositions"][0]["picks"] ==
        Json::array({"3", "4"}));
  CHECK(tdoc["step3_sober"]["generic_points"].size() == 3);

  std::string text = theorem_human(r, rep);
  CHECK(text.find("VERIFIED") != std::string::npos);
  CHECK(text.find("1 in 3 + 4") != std::string::npos);
}
