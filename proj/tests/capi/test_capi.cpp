#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "genus_forge/genus_forge.h"

TEST_CASE("strings and status codes") {
  char* v = nullptr;
  REQUIRE(gf_eval("euler", "bl-pt-P2", nullptr, 0, &v) == GF_OK);
  CHECK(std::string(v) == "4/1");
  gf_string_free(v);
  CHECK(std::string(gf_last_error()).empty());

  REQUIRE(gf_eval("universal", "P1", "f2=3", 0, &v) == GF_OK);
  CHECK(std::string(v) == "-6/1");
  gf_string_free(v);

  v = reinterpret_cast<char*>(0x1);
  CHECK(gf_eval("todd", "nowhere", nullptr, 0, &v) == GF_ERR_UNSUPPORTED);
  CHECK(v == nullptr);
  CHECK(std::string(gf_last_error()).size() > 0);
  CHECK(gf_eval(nullptr, "P1", nullptr, 0, &v) == GF_ERR_INVALID_ARGUMENT);
  CHECK(gf_eval("todd", "P1", nullptr, 0, nullptr) == GF_ERR_INVALID_ARGUMENT);
  CHECK(gf_eval("todd", "P1", "k=", 0, &v) != GF_OK);
  CHECK(gf_eval("todd", "P3", nullptr, 2, &v) == GF_ERR_PRECISION);
  CHECK(gf_version() != nullptr);
}

TEST_CASE("solve-fe and model JSON") {
  char *rel = nullptr, *json = nullptr;
  REQUIRE(gf_solve_fe(6, &rel, &json) == GF_OK);
  CHECK(std::string(rel).find("a3 = 2/1*f4 + 1/1*a1*f3") != std::string::npos);
  CHECK(std::string(json).find("\"order\": 6") != std::string::npos);
  gf_string_free(rel);
  gf_string_free(json);
  REQUIRE(gf_solve_fe(4, nullptr, &json) == GF_OK);
  gf_string_free(json);
  CHECK(gf_solve_fe(1, nullptr, &json) == GF_ERR_INVALID_ARGUMENT);
  REQUIRE(gf_model_json("bl-pt-P2", &json) == GF_OK);
  CHECK(std::string(json).find("\"E\"") != std::string::npos);
  gf_string_free(json);
}

TEST_CASE("report lists") {
  gf_reports* r = nullptr;
  REQUIRE(gf_verify_theorem_a("bl-pt-p2", "euler", 0, &r) == GF_OK);
  REQUIRE(gf_reports_count(r) == 1);
  CHECK(gf_reports_all_passed(r) == 1);
  CHECK(std::string(gf_reports_check(r, 0)) == "theorem-a-euler-bl-pt-p2");
  CHECK(gf_reports_status(r, 0) == GF_CHECK_PASS);
  CHECK(std::string(gf_reports_lhs(r, 0)) == "4/1");
  CHECK(std::string(gf_reports_rhs(r, 0)) == "3/1 + 1/1");
  CHECK(gf_reports_discrepancy(r, 0) == nullptr);
  CHECK(gf_reports_check(r, 5) == nullptr);
  CHECK(gf_reports_status(r, 5) == GF_CHECK_ERROR);

  gf_reports* h = nullptr;
  REQUIRE(gf_verify_hodge(2, 2, 2, &h) == GF_OK);
  REQUIRE(gf_reports_append(r, h) == GF_OK);
  REQUIRE(gf_reports_append(r, r) == GF_OK);
  CHECK(gf_reports_count(r) == 4);
  char* json = nullptr;
  REQUIRE(gf_reports_json(r, 1, &json) == GF_OK);
  CHECK(std::string(json).find("\"millis\": 0") != std::string::npos);
  gf_string_free(json);
  gf_reports_free(h);
  gf_reports_free(r);

  // a failed precondition is a report with error status, not a failed call
  REQUIRE(gf_verify_transition("bl-pt-p2-line", "-2", 6, &r) == GF_OK);
  CHECK(gf_reports_status(r, 0) == GF_CHECK_ERROR);
  CHECK(gf_reports_all_passed(r) == 0);
  CHECK(std::string(gf_reports_discrepancy(r, 0)).find("e0 = -1") != std::string::npos);
  gf_reports_free(r);
  CHECK(gf_verify_transition("bl-pt-p2-line", "x/y", 6, &r) == GF_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(gf_verify_s1(2, 2, nullptr) == GF_ERR_INVALID_ARGUMENT);
  gf_reports_free(nullptr);
  CHECK(gf_reports_count(nullptr) == 0);
}

TEST_CASE("check registry through the C API") {
  REQUIRE(gf_check_count() > 0);
  CHECK(gf_check_name(gf_check_count()) == nullptr);
  const char* names[] = {"hodge-spot-p2-p1-l1", "fe-relations"};
  gf_reports* r = nullptr;
  REQUIRE(gf_report_select(names, 2, &r) == GF_OK);
  REQUIRE(gf_reports_count(r) == 2);
  CHECK(std::string(gf_reports_check(r, 0)) == "fe-relations");
  CHECK(gf_reports_all_passed(r) == 1);
  gf_reports_free(r);
  const char* bad[] = {"nope"};
  CHECK(gf_report_select(bad, 1, &r) == GF_ERR_INVALID_ARGUMENT);
  CHECK(gf_report_select(nullptr, 0, &r) == GF_ERR_INVALID_ARGUMENT);
}
