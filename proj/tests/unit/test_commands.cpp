#include <doctest.h>

#include <regex>
#include <set>

#include "genus_forge/commands.hpp"
#include "genus_forge/ratfunc.hpp"

using namespace gforge;

TEST_CASE("parameter parsing") {
  const auto p = parse_params("k=1/2,g2=-3,a=0");
  CHECK(p.size() == 3);
  CHECK(p.at("k") == Rational(1, 2));
  CHECK(p.at("g2") == Rational(-3));
  CHECK(parse_params("").empty());
  CHECK_THROWS_AS(parse_params("k"), Error);
  CHECK_THROWS_AS(parse_params("=3"), Error);
  CHECK_THROWS(parse_params("k=1/0"));
}

TEST_CASE("eval on catalog spaces") {
  CHECK(eval_genus("todd", "P3", {}, std::nullopt) == "1/1");
  CHECK(eval_genus("euler", "bl-pt-P2", {}, std::nullopt) == "4/1");
  CHECK(eval_genus("euler", "P2xP3", {}, std::nullopt) == "12/1");
  CHECK(eval_genus("todd", "bl-line-P3", {}, std::nullopt) == "1/1");
  CHECK(eval_genus("chi-y", "P1", {}, std::nullopt) == (RatFunc(1) - RatFunc::y()).to_string());
  // universal: phi(P1) = [y] g' = -2 f2
  CHECK(eval_genus("universal", "P1", {}, std::nullopt) == (Poly::var("f2") * Rational(-2)).to_string());
  CHECK(eval_genus("universal", "P1", {{"f2", Rational(1, 2)}}, std::nullopt) == "-1/1");
  // elliptic genus of P1 in algebraic mode is -2 f2 = 0 (f has no x^2 term at k = 0)
  CHECK(eval_genus("elliptic-algebraic", "P1", {{"k", Rational(0)}}, std::nullopt) == "0/1");
  CHECK_THROWS_AS(eval_genus("todd", "P1", {{"z", Rational(1)}}, std::nullopt), Error);
  CHECK_THROWS_AS(eval_genus("nope", "P1", {}, std::nullopt), Error);
  CHECK_THROWS_AS(eval_genus("todd", "Q7", {}, std::nullopt), Error);
  CHECK_THROWS_AS(eval_genus("todd", "P4", {}, 2), Error);
}

TEST_CASE("registry names are unique, sorted and section-free") {
  const auto& reg = check_registry();
  CHECK(reg.size() >= 30);
  std::set<std::string> seen;
  const std::regex dotted("[0-9]\\.[0-9]");
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(seen.insert(reg[i].name).second);
    if (i > 0) CHECK(reg[i - 1].name < reg[i].name);
    CHECK_FALSE(std::regex_search(reg[i].name, dotted));
  }
  CHECK_THROWS_AS(report_all({"no-such-check"}), Error);
}

TEST_CASE("verify commands report errors as data") {
  const auto bad = verify_transition("bl-pt-p2-line", Rational(-2), 6);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].status == Status::Error);
  CHECK(bad[0].first_discrepancy->find("e0 = -1") != std::string::npos);
  CHECK(verify_theorem_a("bl-pt-p2", "chi-y", std::nullopt)[0].status == Status::Error);
  CHECK(verify_cov("unknown", 6)[0].status == Status::Error);
  CHECK(verify_hodge(2, 2, 2)[0].passed());
  const auto ta = verify_theorem_a("bl-pt-p2", "universal", 3);
  REQUIRE(ta.size() == 2);
  CHECK(ta[0].passed());
  CHECK(ta[1].passed());
}

TEST_CASE("report JSON is deterministic") {
  const std::vector<std::string> names{"hodge-p2", "fe-relations", "theorem-a-euler-bl-pt-p2"};
  const auto a = reports_to_json(report_all(names), true).dump();
  const auto b = reports_to_json(report_all({"theorem-a-euler-bl-pt-p2", "hodge-p2", "fe-relations"}), true).dump();
  CHECK(a == b);
  const Json j = reports_to_json(report_all({"theorem-a-euler-bl-pt-p2"}), false);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["check"] == "theorem-a-euler-bl-pt-p2");
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["lhs"] == "4/1");
  CHECK(j[0]["rhs"] == "3/1 + 1/1");
  CHECK(j[0]["first_discrepancy"].is_null());
  CHECK(j[0]["millis"].is_number_integer());
}

TEST_CASE("solve-fe command text") {
  const auto s = solve_fe_command(5);
  CHECK(s.text.find("a2 = 3/1*f3") != std::string::npos);
  CHECK(s.text.find("f5 = ") != std::string::npos);
  CHECK(s.json["order"] == 5);
}
