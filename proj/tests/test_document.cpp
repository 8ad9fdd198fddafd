#include "doctest.h"
#include "json.hpp"
#include "tamed/report.hpp"

using namespace tamed;
using nlohmann::json;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

const char* kHeis = R"({
  "schema": 1,
  "name": "h3+R",
  "dimension": 4,
  "basis": ["e1", "e2", "e3", "e4"],
  "brackets": [{"i": 0, "j": 1, "terms": [{"k": 2, "coeff": "1"}]}],
  "J": [["0", "-1", "0", "0"], ["1", "0", "0", "0"], ["0", "0", "0", "-1"], ["0", "0", "1", "0"]]
})";

}  // namespace

TEST_CASE("documents round-trip") {
  for (const auto& spec : catalog()) {
    CAPTURE(spec.id);
    AlgebraDocument d = document_from_entry(build_entry(spec.id));
    CHECK(parse_document(emit_document(d)) == d);
    CHECK(parse_document(emit_document(d, false)) == d);
    CHECK(document_digest(parse_document(emit_document(d))) == document_digest(d));
    LieAlgebra g = document_algebra(d);
    CHECK(g.entries().size() == d.brackets.size());
  }
}

TEST_CASE("hand-written document") {
  AlgebraDocument d = parse_document(kHeis);
  CHECK(d.dimension == 4);
  REQUIRE(d.j);
  LieAlgebra g = document_algebra(d);
  CHECK(is_integrable(g, *d.j));
  CHECK(is_nilpotent(g));
}

TEST_CASE("parse errors") {
  try {
    parse_document("{\n  \"schema\": 1,\n  oops\n}");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(parse_code(R"({"schema": 1, "dimension": 2, "basis": ["a"], "brackets": []})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"schema": 1, "dimension": 2, "basis": ["a", "b"], "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "coeff": "0.5"}]}]})") ==
        ErrorCode::ParseError);
  CHECK(parse_code(R"({"schema": 1, "dimension": 2, "basis": ["a", "b"], "brackets": [{"i": 0, "j": 5, "terms": []}]})") == ErrorCode::ParseError);
  AlgebraDocument bad = parse_document(R"({"schema": 1, "dimension": 3, "basis": ["a", "b", "c"], "brackets": [
    {"i": 0, "j": 1, "terms": [{"k": 2, "coeff": "1"}]}, {"i": 0, "j": 2, "terms": [{"k": 0, "coeff": "1"}]}]})");
  CHECK_THROWS_AS(document_algebra(bad), Error);
  CHECK_NOTHROW(document_algebra(bad, false));
}

TEST_CASE("digests") {
  AlgebraDocument a = document_from_entry(build_OT(1, 1));
  AlgebraDocument b = document_from_entry(build_OT(2, 1));
  CHECK(document_digest(a).size() == 16);
  CHECK(document_digest(a) != document_digest(b));
  CHECK(document_digest(a) == document_digest(document_from_entry(build_OT(1, 1))));
}

TEST_CASE("reports are deterministic and re-verify") {
  AlgebraDocument d = document_from_entry(build_OT(1, 1));
  std::string first = report_json(decide_report(d, true, true), false);
  std::string second = report_json(decide_report(d, true, true), false);
  CHECK(first == second);
  CHECK(verify_report(first).empty());
  CHECK(report_text(decide_report(d, true, false)).find("NotExists") != std::string::npos);

  json o = json::parse(first);
  json& verdicts = o["verdicts"];
  REQUIRE(verdicts.size() == 2);
  // flip a certificate coordinate
  json tampered = o;
  for (auto& v : tampered["verdicts"]) {
    auto& c = v["certificate"];
    if (c["kind"] == "direction") c["vector"][0] = "7";
    if (c["kind"] == "dual") c["matrix"][0][1] = "5";
    if (c["kind"] == "witness") c["form"][0]["coeff"] = "-1000";
  }
  CHECK_FALSE(verify_report(tampered.dump()).empty());
  json wrong_digest = o;
  wrong_digest["digest"] = "0000000000000000";
  CHECK_FALSE(verify_report(wrong_digest.dump()).empty());
  CHECK_FALSE(verify_report("not json").empty());
}

TEST_CASE("reports need J") {
  AlgebraDocument d = document_from_algebra(build_heisenberg().algebra);
  CHECK_THROWS_AS(decide_report(d, true, false), Error);
  VerdictReport r = check_report(d);
  CHECK(r.facts.nilpotent);
  CHECK(r.facts.center_dimension == 1);
  CHECK_FALSE(r.facts.integrable);
}

TEST_CASE("regression table") {
  auto ot = regression_table_entries("OT");
  CHECK(ot.size() == 5);
  for (const auto& e : ot) CHECK(e.id == "ot");
  auto small = regression_table_entries("aff-r");
  RegressionTable t = regression_table(small);
  CHECK(t.all_match());
  CHECK(t.text().find("MATCH") != std::string::npos);
  small.front().expected.front().kind = VerdictKind::NotExists;
  RegressionTable broken = regression_table(small);
  CHECK_FALSE(broken.all_match());
  CHECK(broken.text().find("MISMATCH") != std::string::npos);
}
