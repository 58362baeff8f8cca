#include "genus_forge/funeq.hpp"

namespace gforge {

namespace {

// [x^p y^(m-p)] of f(y) f(x-y), p = 0..m
std::vector<Poly> product_part(const std::vector<Poly>& f, int m) {
  std::vector<Poly> out(static_cast<std::size_t>(m) + 1);
  for (int j = 1; j < m; ++j) {
    const int k = m - j;
    const Poly fjk = f[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(k)];
    if (fjk.is_zero()) continue;
    for (int q = 0; q <= k; ++q) {
      Rational w = binomial(k, q);
      if ((k - q) % 2 != 0) w = -w;
      out[static_cast<std::size_t>(q)] += fjk * w;
    }
  }
  return out;
}

struct Row {
  Rational cf, ca;
  Poly rest;
};

Rational constant_of(const Poly& p, int degree, const char* what) {
  if (!p.is_constant())
    fail(ErrorKind::Domain, "degree " + std::to_string(degree) + ": coefficient of " + what + " is not a number");
  return p.constant_term();
}

}  // namespace

FESolution solve_fe(int order) {
  if (order < 4) fail(ErrorKind::InvalidArgument, "solve_fe needs order >= 4");
  const int top = order + 2;
  const VarId uf = intern_variable("__unknown_f");
  const VarId ua = intern_variable("__unknown_a");
  const Poly UF = Poly::term(Rational(1), Monomial::of(uf));
  const Poly UA = Poly::term(Rational(1), Monomial::of(ua));

  std::vector<Poly> f(static_cast<std::size_t>(top) + 1), a(static_cast<std::size_t>(top) + 1);
  f[1] = Poly(1);
  a[0] = Poly(1);
  a[1] = Poly::var("a1");
  std::vector<std::vector<Poly>> parts(static_cast<std::size_t>(top) + 1);
  for (int m = 0; m < 4; ++m) parts[static_cast<std::size_t>(m)] = product_part(f, m);

  FESolution sol;
  sol.order = order;
  for (int d = 4; d <= top; ++d) {
    const bool f_unknown = d >= 6;
    if (d == 4) f[3] = Poly::var("f3");
    if (d == 5) f[4] = Poly::var("f4");
    if (f_unknown) f[static_cast<std::size_t>(d - 1)] = UF;
    a[static_cast<std::size_t>(d - 2)] = UA;
    parts[static_cast<std::size_t>(d)] = product_part(f, d);

    Poly diag;  // coefficient of (x-y)^d in f(x-y)f(y-x)
    for (int i = 1; i < d; ++i) {
      const Poly t = f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(d - i)];
      diag += (d - i) % 2 == 0 ? t : -t;
    }
    std::vector<Poly> term2(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d - 2; ++i) {
      const auto& b = parts[static_cast<std::size_t>(d - i)];
      const Poly& ai = a[static_cast<std::size_t>(i)];
      if (ai.is_zero()) continue;
      for (int q = 0; q <= d - i; ++q) term2[static_cast<std::size_t>(q + i)] += ai * b[static_cast<std::size_t>(q)];
    }
    std::vector<Row> rows;
    DegreeRelations rel;
    rel.degree = d;
    for (int p = 0; p <= d; ++p) {
      Rational w = binomial(d, p);
      if ((d - p) % 2 != 0) w = -w;
      const Poly defect = diag * w - term2[static_cast<std::size_t>(p)] - term2[static_cast<std::size_t>(d - p)];
      Row r;
      r.cf = constant_of(defect.coefficient(uf, 1).coefficient(ua, 0), d, "f");
      r.ca = constant_of(defect.coefficient(ua, 1).coefficient(uf, 0), d, "a");
      if (!defect.coefficient(uf, 1).coefficient(ua, 1).is_zero() || defect.degree_in(uf) > 1 || defect.degree_in(ua) > 1)
        fail(ErrorKind::Domain, "degree " + std::to_string(d) + ": relation is not linear in the unknowns");
      r.rest = defect.coefficient(uf, 0).coefficient(ua, 0);
      rel.f_coeff.push_back(r.cf);
      rel.a_coeff.push_back(r.ca);
      rows.push_back(std::move(r));
    }

    Poly fv, av;
    bool solved = false;
    if (f_unknown) {
      for (std::size_t p = 0; p < rows.size() && !solved; ++p)
        for (std::size_t q = p + 1; q < rows.size() && !solved; ++q) {
          const Rational det = rows[p].cf * rows[q].ca - rows[q].cf * rows[p].ca;
          if (det.is_zero()) continue;
          // cf F + ca A = -rest
          fv = (rows[q].rest * rows[p].ca - rows[p].rest * rows[q].ca) * det.inverse();
          av = (rows[p].rest * rows[q].cf - rows[q].rest * rows[p].cf) * det.inverse();
          solved = true;
        }
    } else {
      for (const auto& r : rows)
        if (!r.ca.is_zero()) {
          av = -(r.rest * r.ca.inverse());
          solved = true;
          break;
        }
    }
    if (!solved) fail(ErrorKind::Domain, "solve_fe: unknowns undetermined at degree " + std::to_string(d));
    for (std::size_t p = 0; p < rows.size(); ++p) {
      const Poly residual = fv * rows[p].cf + av * rows[p].ca + rows[p].rest;
      if (!residual.is_zero())
        fail(ErrorKind::Domain, "solve_fe: inconsistent system at degree " + std::to_string(d) + ", relation x^" +
                                    std::to_string(p) + "*y^" + std::to_string(d - static_cast<int>(p)) + ": " +
                                    residual.to_string());
    }
    if (f_unknown) f[static_cast<std::size_t>(d - 1)] = fv;
    a[static_cast<std::size_t>(d - 2)] = av;
    parts[static_cast<std::size_t>(d)] = product_part(f, d);
    sol.relations.push_back(std::move(rel));
  }
  sol.f.assign(f.begin(), f.begin() + order + 1);
  sol.A.assign(a.begin(), a.begin() + order + 1);
  return sol;
}

Json fe_solution_to_json(const FESolution& s) {
  const auto vars = FESolution::variables();
  return Json{{"order", s.order},
              {"variables", vars},
              {"f", series_to_json(s.f_series(), vars)},
              {"A", series_to_json(s.A_series(), vars)}};
}

WeierstrassDictionary weierstrass_dictionary(const Poly& a1, const Poly& f3, const Poly& f4) {
  WeierstrassDictionary w;
  w.a = f3 * Rational(2);
  w.b = f4 * Rational(6);
  w.g2 = f3 * f3 * Rational(48) - a1 * f4 * Rational(24);
  w.g3 = w.a * w.a * w.a * Rational(4) - w.g2 * w.a - w.b * w.b;
  return w;
}

namespace {

VerificationReport laurent_equals(const std::string& name, const Laurent<Poly>& lhs, const Laurent<Poly>& rhs) {
  const Laurent<Poly> diff = lhs - rhs;
  const int lo = std::min(lhs.valuation(), rhs.valuation());
  for (int k = lo; k <= diff.order(); ++k)
    if (!diff[k].is_zero())
      return make_report(name, false, lhs[k].to_string(), rhs[k].to_string(), "x^" + std::to_string(k));
  return make_report(name, true, lhs.to_string("x"), rhs.to_string("x"));
}

}  // namespace

WeierstrassRecovery weierstrass_from_fe(const FESolution& s) {
  if (s.order < 8) fail(ErrorKind::InvalidArgument, "weierstrass_from_fe needs order >= 8");
  using L = Laurent<Poly>;
  const Poly a1 = s.A[1], f3 = s.f[3], f4 = s.f[4];
  WeierstrassRecovery out;
  out.dictionary = weierstrass_dictionary(a1, f3, f4);

  const L lf = L::from_series(s.f_series());
  const L lfm = lf.negated_argument();
  const L P = (lf * lfm).inverse() * Rational(-1) + L::constant(f3 * Rational(2));
  const L lhs = P.derivative().derivative() - P * P * Rational(6);
  const Poly c = a1 * f4 * Rational(12) - f3 * f3 * Rational(24);
  out.checks.push_back(laurent_equals("P''-6P^2", lhs, L::constant(c, lhs.order())));

  const L g = lf.inverse();
  const L gm = g.negated_argument();
  const L gd = g.derivative();
  const L sum = gd * gm + gd.negated_argument() * g;
  out.checks.push_back(laurent_equals("g'(x)g(-x)+g'(-x)g(x)", sum, L::constant(f4 * Rational(6), sum.order())));
  const L gdd = gd.derivative();
  const L left = gdd * gm;
  out.checks.push_back(laurent_equals("g''(x)g(-x)=g''(-x)g(x)", left, gdd.negated_argument() * g));

  const bool ok = std::all_of(out.checks.begin(), out.checks.end(), [](const auto& r) { return r.passed(); });
  out.report = combine("weierstrass_from_fe", out.checks);
  if (ok) {
    out.report.lhs = lhs[0].to_string() + "; " + sum[0].to_string();
    out.report.rhs = c.to_string() + "; " + (f4 * Rational(6)).to_string();
  }
  return out;
}

}  // namespace gforge
