#include <doctest.h>

#include <random>

#include "genus_forge/poly.hpp"
#include "genus_forge/ratfunc.hpp"
#include "genus_forge/serialize.hpp"
#include "genus_forge/series.hpp"

using namespace gforge;
using S = Series<Rational>;
using L = Laurent<Rational>;

namespace {

S ser(std::vector<long> c, int order = kExact) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return S(std::move(v), order);
}

// exp(c x) truncated, by direct factorials
S exp_scaled(const Rational& c, int order) {
  std::vector<Rational> v;
  for (int i = 0; i <= order; ++i) v.push_back(power(c, i) / factorial(i));
  return S(std::move(v), order);
}

// Bernoulli numbers with B1 = -1/2 from sum_{k<=m} C(m+1,k) B_k = 0
std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= n; ++m) {
    Rational acc(0);
    for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * b[static_cast<std::size_t>(k)];
    b.push_back(-acc / Rational(m + 1));
  }
  return b;
}

Rational rnd(std::mt19937& g) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return Rational(num(g), den(g));
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(5).to_string() == "5/1");
  CHECK(Rational::parse(" -10/4 ") == Rational(-5, 2));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(3, 5) == Rational(0));
}

TEST_CASE("ParamPoly ring axioms on random triples") {
  std::mt19937 g(7);
  const Poly x = Poly::var("f3"), y = Poly::var("f4"), z = Poly::var("a1");
  auto random_poly = [&] {
    Poly p;
    for (int i = 0; i < 4; ++i) {
      Poly m = Poly(rnd(g));
      for (const Poly* v : {&x, &y, &z})
        for (int e = std::uniform_int_distribution<int>(0, 2)(g); e > 0; --e) m *= *v;
      p += m;
    }
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const Poly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
  CHECK((x * x * Rational(3, 2) + y).to_string() == "1/1*f4 + 3/2*f3^2");
  CHECK(Poly().to_string() == "0/1");
}

TEST_CASE("rational functions in y are canonical") {
  const RatFunc y = RatFunc::y();
  const RatFunc a = (y * y - RatFunc(1)) / (y - RatFunc(1));
  CHECK(a == y + RatFunc(1));
  CHECK(a.den().degree() == 0);
  CHECK(RatFunc::y_power(-2) * y * y == RatFunc(1));
  CHECK((RatFunc(1) / (y * Rational(2))).den().leading() == Rational(1));
}

TEST_CASE("invert_unit") {
  CHECK(invert_unit(ser({1, -1}), 3) == ser({1, 1, 1, 1}, 3));
  CHECK(invert_unit(ser({1, 1}), 3) == ser({1, -1, 1, -1}, 3));
  const S inv = invert_unit(ser({1, 1, 1}), 3);
  CHECK(inv == ser({1, -1, 0, 1}, 3));
  CHECK(ser({1, 1, 1}) * inv == ser({1}, 3));
  CHECK(inv.order() == 3);
  CHECK_THROWS_WITH(invert_unit(ser({0, 1}), 3), doctest::Contains("not invertible"));
  CHECK_THROWS(invert_unit(ser({1, 1})));
}

TEST_CASE("compose") {
  const S f = ser({1, 2, 3, 4}, 3);
  CHECK(compose(f, S::variable()) == f);
  CHECK(compose(invert_unit(ser({1, -1}), 3), ser({0, 2})) == ser({1, 2, 4, 8}, 3));
  const S c = compose(ser({0, 1, 1}), ser({0, 1, 0, 1}), 4);
  CHECK(c == ser({0, 1, 1, 1, 2}, 4));
  CHECK(c.order() == 4);
  CHECK_THROWS(compose(f, ser({1, 1}, 3)));
}

TEST_CASE("reversion") {
  CHECK(reversion(S::variable(6)) == S::variable(6));
  // oracle: g = y + g^2 by fixed-point iteration in plain coefficient vectors
  std::vector<Rational> g(6, Rational(0));
  for (int it = 0; it < 6; ++it) {
    std::vector<Rational> sq(6, Rational(0));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; i + j < 6; ++j) sq[i + j] += g[i] * g[j];
    sq[1] += Rational(1);
    g = sq;
  }
  const S r = reversion(ser({0, 1, -1}, 5));
  for (int i = 0; i <= 5; ++i) CHECK(r[i] == g[static_cast<std::size_t>(i)]);
  CHECK(r[4] == Rational(5));
  CHECK(compose(ser({0, 1, -1}, 5), r) == S::variable(5));
  CHECK(compose(r, ser({0, 1, -1}, 5)) == S::variable(5));

  const S todd = S::constant(Rational(1), 6) - exp_scaled(Rational(-1), 6);
  const S rt = reversion(todd);
  for (int i = 1; i <= 6; ++i) CHECK(rt[i] == Rational(1, i));
  CHECK(compose(todd, rt) == S::variable(6));
  CHECK_THROWS(reversion(ser({0, 0, 1}, 4)));
}

TEST_CASE("reversion round trip on random series") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> c{Rational(0), Rational(1 + trial % 3)};
    for (int i = 2; i <= 7; ++i) c.push_back(rnd(gen));
    const S f(c, 7);
    CHECK(compose(reversion(f), f) == S::variable(7));
  }
}

TEST_CASE("exp and log") {
  CHECK(exp_series(S::variable(3)) == ser({1, 1}, 3) + S({0, 0, Rational(1, 2), Rational(1, 6)}, 3));
  CHECK(log_series(ser({1, 1}, 3)) == S({0, 1, Rational(-1, 2), Rational(1, 3)}, 3));
  CHECK(exp_series(log_series(ser({1, 1, 1}, 8))) == ser({1, 1, 1}, 8));
  const S v({0, Rational(2, 3), 5, Rational(-1, 7)}, 9);
  CHECK(log_series(exp_series(v)) == v);
  CHECK_THROWS(exp_series(ser({1, 1}, 3)));
  CHECK_THROWS(log_series(ser({2, 1}, 3)));
}

TEST_CASE("Laurent arithmetic and residue") {
  CHECK(residue(L::monomial(Rational(1), -1)) == Rational(1));
  const L t = L::monomial(Rational(1), 1, 10);
  CHECK((t.inverse() * t) == L::constant(Rational(1), 9));
  CHECK_THROWS_WITH(residue(L(2, {Rational(1)}, -3)), doctest::Contains("insufficient valuation window"));

  std::mt19937 gen(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i < 8; ++i) c.push_back(rnd(gen));
    const L l(-4 + trial % 3, c, 5);
    CHECK(residue(l.derivative()) == Rational(0));
  }
}

TEST_CASE("reciprocal_shifted") {
  // f = x: coefficient of n^a is -t^{-(a+1)}
  const auto parts = reciprocal_shifted_parts(S::variable(), 4);
  for (int a = 0; a <= 4; ++a) CHECK(parts[static_cast<std::size_t>(a)] == L::monomial(Rational(-1), -(a + 1)));

  const S euler = invert_unit(ser({1, 1}), 8).shifted(1);  // x/(1+x)
  const auto e0 = reciprocal_shifted_parts(euler, 0)[0];
  CHECK(e0[-1] == Rational(-1));
  CHECK(e0[0] == Rational(1));
  for (int k = 1; k <= e0.order(); ++k) CHECK(e0[k] == Rational(0));

  const S todd = S::constant(Rational(1), 10) - exp_scaled(Rational(-1), 10);
  const auto b = bernoulli(8);
  const auto t0 = reciprocal_shifted_parts(todd, 0)[0];
  // 1/(1 - e^t) = -(1/t) sum B_n t^n / n!
  for (int k = -1; k <= 6; ++k) CHECK(t0[k] == -b[static_cast<std::size_t>(k + 1)] / factorial(k + 1));
  CHECK(t0[0] == Rational(1, 2));
  CHECK(t0[1] == Rational(-1, 12));

  CHECK_THROWS(reciprocal_shifted_parts(ser({0, 0, 1}, 5), 2));
}

TEST_CASE("reciprocal_shifted times f(n - t) is 1") {
  // f(n - t) expanded by binomial substitution, with n^a coefficients
  const S todd = S::constant(Rational(1), 12) - exp_scaled(Rational(-1), 12);
  const int D = 4;
  const auto parts = reciprocal_shifted_parts(todd, D);
  std::vector<L> shifted(D + 1, L::zero(kExact));
  for (int a = 0; a <= D; ++a) {
    std::vector<Rational> c;
    for (int m = a; m <= 12; ++m) c.push_back(todd[m] * binomial(m, a) * ((m - a) % 2 ? Rational(-1) : Rational(1)));
    shifted[a] = L(0, c, 12 - a);
  }
  for (int a = 0; a <= D; ++a) {
    L acc = L::zero(kExact);
    for (int b2 = 0; b2 <= a; ++b2) acc += parts[b2] * shifted[a - b2];
    const L expect = a == 0 ? L::constant(Rational(1)) : L::zero(kExact);
    CHECK(acc.order() >= 4);
    CHECK(acc == expect);
  }
}

TEST_CASE("residues for Todd and Euler point blow-up integrands") {
  auto integrand_residue = [](const S& f) {
    const L inv_t = L::from_series(f, 0).inverse();
    const L inv_minus = reciprocal_shifted_parts(f, 0)[0];
    return residue(inv_t * inv_minus * inv_minus);
  };
  const S todd = S::constant(Rational(1), 8) - exp_scaled(Rational(-1), 8);
  CHECK(integrand_residue(todd) == Rational(0));
  const S euler = invert_unit(ser({1, 1}), 8).shifted(1);
  CHECK(integrand_residue(euler) == Rational(-1));
}

TEST_CASE("BiSeries") {
  const S f = S({0, 1, Rational(1, 2), 3, 0, 7}, 6);
  const auto sym = BiSeries<Rational>::in_x(f, 6) * BiSeries<Rational>::in_y(f, 6);
  CHECK((sym.swapped() - sym).is_zero());
  const auto sum = BiSeries<Rational>::linear_substitution(f, Rational(1), Rational(1), 6);
  CHECK((sum.swapped() - sum).is_zero());
  const auto diff = BiSeries<Rational>::linear_substitution(S::variable(), Rational(1), Rational(-1), 4);
  CHECK(diff(1, 0) == Rational(1));
  CHECK(diff(0, 1) == Rational(-1));
  CHECK(diff.first_nonzero() == std::make_pair(1, 0));
  // f(x+y) = f composed with x+y
  const auto inner = BiSeries<Rational>::linear_substitution(S::variable(), Rational(1), Rational(1), 6);
  CHECK((compose(f, inner) - sum).is_zero());
}

TEST_CASE("series JSON round trip") {
  const S s({0, Rational(-1, 2), 0, 3}, 5);
  const Json j = series_to_json(s);
  CHECK(j.dump() == R"([{"coeff":"-1/2","exponents":[1]},{"coeff":"3/1","exponents":[3]}])");
  CHECK(series_from_json(j, 5) == s);

  const Series<Poly> p({Poly(0), Poly(1), Poly::var("f3") * Rational(3) + Poly::var("a1")}, 2);
  const Json jp = series_to_json(p, {"a1", "f3", "f4"});
  CHECK(series_from_json(jp, {"a1", "f3", "f4"}, 2) == p);
  CHECK_THROWS(series_to_json(p, {"a1"}));
}
