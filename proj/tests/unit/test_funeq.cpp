#include <doctest.h>

#include <chrono>
#include <set>

#include "genus_forge/funeq.hpp"
#include "genus_forge/weierstrass.hpp"

using namespace gforge;

namespace {

Poly V(const char* n) { return Poly::var(n); }

using Dense = std::vector<std::vector<Rational>>;  // [i][j] of x^i y^j

Dense dense(int d) { return Dense(d + 1, std::vector<Rational>(d + 1, Rational(0))); }

// c * x^i0 y^j0 * (s x + t y)^k, added into out
void add_term(Dense& out, const Rational& c, int i0, int j0, long s, long t, int k) {
  for (int q = 0; q <= k; ++q)
    out[i0 + q][j0 + k - q] += c * binomial(k, q) * power(Rational(s), q) * power(Rational(t), k - q);
}

}  // namespace

TEST_CASE("solve_fe reproduces the low-degree relations") {
  const FESolution s = solve_fe(8);
  const Poly a1 = V("a1"), f3 = V("f3"), f4 = V("f4");
  CHECK(s.A[0] == Poly(1));
  CHECK(s.A[1] == a1);
  CHECK(s.f[2] == Poly(0));
  CHECK(s.A[2] == f3 * Rational(3));
  CHECK(s.A[3] == f4 * Rational(2) + a1 * f3);
  CHECK(s.A[4] == a1 * f4 * Rational(2) + f3 * f3 * Rational(3, 2));
  CHECK(s.f[5] == f3 * f3 * Rational(3, 10) + a1 * f4 * Rational(3, 5));
  CHECK(check_fe(s.f_series(), s.A_series(), 8).passed());
}

TEST_CASE("solve_fe output matches FE' and the elliptic construction") {
  const int n = 10;
  const FESolution s = solve_fe(n);
  const Poly a1 = V("a1");
  CHECK(derive_A_from_f(s.f_series(), a1) == s.A_series().truncated(n - 1));
  const auto w = weierstrass_dictionary(a1, V("f3"), V("f4"));
  const auto fa = elliptic_f_algebraic(EllipticParams::algebraic(Poly(0), w.a, w.b, w.g2, n));
  CHECK(fa == s.f_series());
}

TEST_CASE("uniqueness bookkeeping against a dense expansion") {
  const FESolution s = solve_fe(12);
  for (const auto& rel : s.relations) {
    const int d = rel.degree;
    if (d < 6) continue;
    // coefficient of u in the defect for f = x + u x^(d-1), A = 1 + v x^(d-2)
    Dense cu = dense(d), cv = dense(d);
    // (x-y)^(d-1)(y-x) + (x-y)(y-x)^(d-1) = -(1 + (-1)^d)(x-y)^d
    add_term(cu, Rational(d % 2 == 0 ? -2 : 0), 0, 0, 1, -1, d);
    add_term(cu, Rational(-1), 0, d - 1, 1, -1, 1);                 // -y^(d-1)(x-y)
    add_term(cu, Rational(-1), 0, 1, 1, -1, d - 1);                 // -y(x-y)^(d-1)
    add_term(cu, Rational(-1), d - 1, 0, -1, 1, 1);                 // -x^(d-1)(y-x)
    add_term(cu, Rational(-1), 1, 0, -1, 1, d - 1);                 // -x(y-x)^(d-1)
    add_term(cv, Rational(-1), d - 2, 1, 1, -1, 1);                 // -x^(d-2) y (x-y)
    add_term(cv, Rational(-1), 1, d - 2, -1, 1, 1);                 // -y^(d-2) x (y-x)
    bool any_f = false;
    std::set<int> a_rows;
    for (int p = 0; p <= d; ++p) {
      CHECK(rel.f_coeff[p] == cu[p][d - p]);
      CHECK(rel.a_coeff[p] == cv[p][d - p]);
      any_f = any_f || !rel.f_coeff[p].is_zero();
      if (!rel.a_coeff[p].is_zero()) a_rows.insert(p);
    }
    CHECK(any_f);
    CHECK(a_rows == std::set<int>{1, 2, d - 2, d - 1});
  }
}

TEST_CASE("solve_fe to order 20 is fast and consistent") {
  const auto t0 = std::chrono::steady_clock::now();
  const FESolution s = solve_fe(20);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 120.0);
  CHECK(s.f.size() == 21);
  CHECK(check_fe(s.f_series(), s.A_series(), 20).passed());
  // every coefficient is a polynomial in a1, f3, f4 only
  for (const auto& c : s.f)
    for (const auto& v : c.variables()) CHECK((v == "a1" || v == "f3" || v == "f4"));
}

TEST_CASE("solve_fe JSON export") {
  const FESolution s = solve_fe(5);
  const Json j = fe_solution_to_json(s);
  CHECK(j["order"] == 5);
  CHECK(j["variables"] == Json({"a1", "f3", "f4"}));
  CHECK(series_from_json(j["f"], FESolution::variables(), 5) == s.f_series());
  CHECK(series_from_json(j["A"], FESolution::variables(), 5) == s.A_series());
}

TEST_CASE("derive_A_from_f") {
  using S = Series<Rational>;
  const Poly a1 = V("a1");
  const auto A = derive_A_from_f(Series<Poly>::variable(8), a1);
  CHECK(A == Series<Poly>({Poly(1), a1}, 7));

  std::vector<Rational> c{Rational(0)};
  for (int i = 1; i <= 10; ++i) c.push_back(Rational(i % 2 ? 1 : -1) / factorial(i));
  const S todd(c, 10);  // 1 - e^-x
  CHECK(derive_A_from_f(todd, Rational(0)) == S::constant(Rational(1), 9));
}

TEST_CASE("check_fe examples") {
  using S = Series<Rational>;
  const Poly a1 = V("a1");
  CHECK(check_fe(Series<Poly>::variable(10), Series<Poly>({Poly(1), a1}, 10), 10).passed());

  std::vector<Rational> c{Rational(0)};
  for (int i = 1; i <= 10; ++i) c.push_back(Rational(i % 2 ? 1 : -1) / factorial(i));
  const S todd(c, 10);
  CHECK(check_fe(todd, S::constant(Rational(1), 10), 10).passed());

  const S bad({0, 1, 0, 0, 0, 1}, 10);
  const auto r = check_fe(bad, derive_A_from_f(bad, Rational(0)), 9);
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_discrepancy.has_value());
  const auto pos = r.first_discrepancy->find("total degree ");
  const int deg = std::stoi(r.first_discrepancy->substr(pos + 13));
  CHECK(deg <= 8);
}

TEST_CASE("defect is symmetric and the twist preserves solutions") {
  const FESolution s = solve_fe(9);
  const auto defect = fe_defect(s.f_series(), s.A_series(), 9);
  CHECK((defect.swapped() - defect).is_zero());
  const Poly k = V("k");
  const auto fk = exp_linear(k, 9) * s.f_series();
  const auto Ak = exp_linear(-k, 9) * s.A_series();
  CHECK(check_fe(fk, Ak, 9).passed());
  // a perturbed A is caught
  const auto bad = s.A_series() + Series<Poly>::monomial(Poly(1), 5, 9);
  CHECK_FALSE(check_fe(s.f_series(), bad, 9).passed());
}

TEST_CASE("fit_a1 recovers a1") {
  const FESolution s = solve_fe(9);
  const std::map<std::string, Rational> at{{"a1", Rational(2, 3)}, {"f3", Rational(1, 2)}, {"f4", Rational(-1)}};
  const auto spc = s.f_series().map([&](const Poly& c) { return c.substitute(at).constant_term(); });
  const auto a1 = fit_a1(spc, 9);
  REQUIRE(a1.has_value());
  CHECK(*a1 == Rational(2, 3));
  CHECK_FALSE(fit_a1(Series<Rational>::variable(9), 8).has_value());
}

TEST_CASE("Weierstrass recovery from the order-12 solution") {
  const FESolution s = solve_fe(12);
  const auto w = weierstrass_from_fe(s);
  for (const auto& c : w.checks) CHECK_MESSAGE(c.passed(), c.check);
  CHECK(w.report.passed());
  const Poly a1 = V("a1"), f3 = V("f3"), f4 = V("f4");
  CHECK(w.dictionary.a == f3 * Rational(2));
  CHECK(w.dictionary.b == f4 * Rational(6));
  CHECK(w.dictionary.g2 == f3 * f3 * Rational(48) - a1 * f4 * Rational(24));

  FESolution trivial;
  trivial.order = 9;
  trivial.f.assign(10, Poly(0));
  trivial.f[1] = Poly(1);
  trivial.A.assign(10, Poly(0));
  trivial.A[0] = Poly(1);
  const auto wt = weierstrass_from_fe(trivial);
  CHECK(wt.report.passed());
  CHECK(wt.dictionary.g2.is_zero());
  CHECK(wt.dictionary.g3.is_zero());

  FESolution broken = s;
  broken.f[7] += Poly(1);
  CHECK_FALSE(weierstrass_from_fe(broken).report.passed());
}

TEST_CASE("2-torsion addition identity") {
  using S = Series<Rational>;
  CHECK(torsion2_check(S::variable(10), 10).passed());
  const Poly s = V("s");
  std::vector<Poly> c(12);
  Poly s2j(1);
  for (int j = 0; 2 * j + 1 <= 11; ++j) {
    c[2 * j + 1] = s2j * factorial(2 * j + 1).inverse();
    s2j = s2j * s * s;
  }
  CHECK(torsion2_check(Series<Poly>(c, 11), 10).passed());
  const auto bad = torsion2_check(S({0, 1, 0, 1}, 10), 10);
  CHECK_FALSE(bad.passed());
  CHECK(bad.first_discrepancy->find("total degree 5") != std::string::npos);
}

TEST_CASE("sigma-form f with A from FE' solves the functional equation") {
  const int n = 9;
  const auto p = EllipticParams::sigma(n + 1);
  const auto f = elliptic_f_sigma(p);
  const auto A2 = jacobian_A_sigma(p, Rational(2));
  const ZRing a1 = A2[1];
  const auto A = derive_A_from_f(f, a1);
  CHECK(A == A2.truncated(n));
  const auto r = check_fe(f, A, n);
  CHECK(r.passed());
  REQUIRE(r.details.size() == 1);
  MESSAGE(r.details[0]);
  CHECK(fe_defect(f, A, n).min_coefficient_precision() >= 4);
  // a wrong a1 fails
  CHECK_FALSE(check_fe(f, derive_A_from_f(f, a1 + z_constant(Poly(1))), n).passed());
}

TEST_CASE("trigonometric f and A solve the functional equation") {
  const auto p = EllipticParams::trig(Poly::var("k"), Poly::var("s"), Poly::var("a1"), 10);
  CHECK(check_fe(elliptic_f_trig(p), jacobian_A_trig(p, Rational(2)), 10).passed());
}
