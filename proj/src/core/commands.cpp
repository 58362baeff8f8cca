#include "genus_forge/commands.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "genus_forge/genus.hpp"
#include "genus_forge/verify.hpp"
#include "genus_forge/weierstrass.hpp"

namespace gforge {

namespace {

void check_known(const std::map<std::string, Rational>& params, const std::set<std::string>& known, const std::string& genus) {
  for (const auto& [k, v] : params)
    if (!known.count(k)) fail(ErrorKind::InvalidArgument, "genus " + genus + " has no parameter '" + k + "'");
}

Poly param_or_var(const std::map<std::string, Rational>& params, const std::string& name) {
  const auto it = params.find(name);
  return it == params.end() ? Poly::var(name) : Poly(it->second);
}

template <CoefficientRing R>
std::string value_text(const Genus<R>& g, const ModelPtr& x) {
  return RingTraits<R>::to_string(genus_eval(g, x));
}

/// f = x + f2 x^2 + ... + f_nfree x^nfree, known to the given truncation order.
Genus<Poly> universal_polynomial_genus(int nfree, int order) {
  std::vector<Poly> c{Poly(0), Poly(1)};
  for (int k = 2; k <= nfree; ++k) c.push_back(Poly::var("f" + std::to_string(k)));
  return Genus<Poly>::from_f("universal", Series<Poly>(std::move(c), std::max(order, nfree)));
}

Series<Poly> cubic_free_A() { return Series<Poly>({Poly(1), Poly::var("A1"), Poly::var("A2"), Poly::var("A3")}); }

Embedding blowup_case(const std::string& which) {
  if (which == "bl-pt-p2") return point_in(projective_space(2));
  if (which == "bl-pt-p3") return point_in(projective_space(3));
  if (which == "bl-line-p3") return linear_subspace(3, 1);
  fail(ErrorKind::InvalidArgument, "unknown blow-up case '" + which + "' (bl-pt-p2, bl-pt-p3, bl-line-p3)");
}

std::map<std::string, Rational> random_point(const std::vector<std::string>& vars, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::map<std::string, Rational> at;
  for (const auto& v : vars) at[v] = Rational(num(rng), den(rng));
  return at;
}

VerificationReport named(VerificationReport r, const std::string& name) {
  r.check = name;
  return r;
}

}  // namespace

std::map<std::string, Rational> parse_params(const std::string& text) {
  std::map<std::string, Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) fail(ErrorKind::InvalidArgument, "parameter '" + item + "' is not name=value");
    out[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
  }
  return out;
}

std::vector<std::string> genus_names() {
  return {"chi-y", "elliptic-algebraic", "elliptic-sigma", "euler", "q-product", "todd", "universal"};
}

std::string eval_genus(const std::string& genus, const std::string& space, const std::map<std::string, Rational>& params,
                       std::optional<int> order) {
  const ModelPtr x = catalog_model(space);
  const int n = x->dim();
  const int ord = order.value_or(n + 1);
  if (ord < n + 1) fail(ErrorKind::Precision, "order must be at least dim + 1 = " + std::to_string(n + 1));
  if (genus == "todd" || genus == "euler" || genus == "chi-y") {
    check_known(params, {}, genus);
    if (genus == "todd") return value_text(todd_genus(ord), x);
    if (genus == "euler") return value_text(euler_genus(ord), x);
    return value_text(chi_y_genus(ord), x);
  }
  if (genus == "universal") {
    std::set<std::string> known;
    for (int k = 2; k <= ord; ++k) known.insert("f" + std::to_string(k));
    check_known(params, known, genus);
    return genus_eval(universal_genus(ord), x).substitute(params).to_string();
  }
  if (genus == "elliptic-algebraic") {
    check_known(params, {"k", "a", "b", "g2"}, genus);
    const auto p = EllipticParams::algebraic(param_or_var(params, "k"), param_or_var(params, "a"), param_or_var(params, "b"),
                                             param_or_var(params, "g2"), ord);
    return value_text(Genus<Poly>::from_f(genus, elliptic_f_algebraic(p)), x);
  }
  if (genus == "elliptic-sigma") {
    check_known(params, {"k", "g2", "g3"}, genus);
    const auto p = EllipticParams::sigma(param_or_var(params, "k"), param_or_var(params, "g2"), param_or_var(params, "g3"), ord);
    return value_text(Genus<ZRing>::from_f(genus, elliptic_f_sigma(p)), x);
  }
  if (genus == "q-product") {
    check_known(params, {"k", "qorder"}, genus);
    QProductParams p;
    p.x_order = ord;
    if (params.count("k")) p.k = params.at("k");
    if (params.count("qorder")) {
      const Rational q = params.at("qorder");
      if (!q.is_integer() || q < Rational(1) || Rational(64) < q) fail(ErrorKind::InvalidArgument, "qorder must be a positive integer");
      p.q_order = static_cast<int>(q.numerator().get_si());
    }
    return value_text(q_product_genus(p), x);
  }
  fail(ErrorKind::InvalidArgument, "unknown genus '" + genus + "'");
}

Json model_json(const std::string& space) { return catalog_model(space)->to_json(); }

SolveFeOutput solve_fe_command(int order) {
  const FESolution s = solve_fe(order);
  std::string text;
  for (int k = 2; k <= order; ++k) {
    text += "a" + std::to_string(k) + " = " + s.A[static_cast<std::size_t>(k)].to_string() + "\n";
    if (k + 1 <= order && k + 1 >= 5) text += "f" + std::to_string(k + 1) + " = " + s.f[static_cast<std::size_t>(k + 1)].to_string() + "\n";
  }
  return {text, fe_solution_to_json(s)};
}

std::vector<VerificationReport> verify_theorem_a(const std::string& which, const std::string& genus, std::optional<int> order) {
  const std::string name = "theorem-a-" + genus + "-" + which;
  std::vector<VerificationReport> out;
  out.push_back(timed(name, [&] {
    const Embedding e = blowup_case(which);
    const RClass D = RClass::one(e.X);
    const int n = e.X->dim();
    if (genus == "todd" || genus == "euler") {
      const int ord = order.value_or(2 * n + 4);
      const auto g = genus == "todd" ? todd_genus(ord) : euler_genus(ord);
      return named(verify_blowup_formula(name, g, e, Series<Rational>::constant(Rational(1)), D).report, name);
    }
    if (genus == "universal") {
      const int nfree = order.value_or(4);
      if (nfree < 2) fail(ErrorKind::InvalidArgument, "universal genus needs order >= 2");
      return named(verify_blowup_formula(name, universal_polynomial_genus(nfree, 2 * n + 2), e, cubic_free_A(), D).report, name);
    }
    fail(ErrorKind::InvalidArgument, "theorem-a: genus must be todd, euler or universal");
  }));
  if (genus == "universal" && out.back().status != Status::Error) {
    const std::string sname = name + ":specialized";
    out.push_back(timed(sname, [&] {
      const Embedding e = blowup_case(which);
      const int n = e.X->dim();
      const int nfree = order.value_or(4);
      const Genus<Poly> g = universal_polynomial_genus(nfree, 2 * n + 2);
      std::vector<std::string> vars{"A1", "A2", "A3"};
      for (int k = 2; k <= nfree; ++k) vars.push_back("f" + std::to_string(k));
      std::vector<VerificationReport> parts;
      for (unsigned seed : {11u, 29u, 47u}) {
        const auto at = random_point(vars, seed);
        auto sp = [&](const Poly& c) { return c.substitute(at).constant_term(); };
        const auto gs = Genus<Rational>::from_f("specialized", g.f.map(sp));
        const auto rs = verify_blowup_formula(sname, gs, e, cubic_free_A().map(sp), RClass::one(e.X));
        parts.push_back(named(rs.report, sname + ":seed" + std::to_string(seed)));
      }
      return combine(sname, parts);
    }));
  }
  return out;
}

std::vector<VerificationReport> verify_s1(int codim, int degree) {
  const std::string name = "s1-r" + std::to_string(codim) + "-degree" + std::to_string(degree);
  return {timed(name, [&] {
    if (codim < 1 || degree < 0) fail(ErrorKind::InvalidArgument, "s1 needs codim >= 1 and order >= 0");
    return named(residue_vanishing_S1(EllipticParams::sigma(degree + codim + 1), codim, degree), name);
  })};
}

std::vector<VerificationReport> verify_transition(const std::string& which, const Rational& e1, int order) {
  const std::string name = "transition-" + which;
  return {timed(name, [&] {
    if (which != "bl-pt-p2-line") fail(ErrorKind::InvalidArgument, "unknown transition case '" + which + "' (bl-pt-p2-line)");
    const auto fam = elliptic_family(order);
    const auto stages = transition_bl_pt_p2_line(e1);
    VerificationReport r = named(verify_tower(name, fam.genus, fam.A, stages), name);
    r.details.push_back("e1 = " + e1.to_string() + ", e0 = " + stages.back().divisors.back().e.to_string());
    return r;
  })};
}

std::vector<VerificationReport> verify_cov(const std::string& tower, int order) {
  const std::string name = "cov-" + tower;
  return {timed(name, [&] {
    std::vector<TowerStage> stages;
    if (tower == "pt+line-p3") {
      stages = tower_pt_line_p3();
    } else if (tower == "pt-p3") {
      const ModelPtr p3 = projective_space(3);
      stages = build_tower(p3, {}, RClass::one(p3), {TowerStep{[p3](const std::optional<Blowup>&) { return point_in(p3); }, {}}});
    } else if (tower == "pt-p2") {
      stages = resolutions_p2();
    } else if (tower == "pt-f3") {
      stages = resolutions_f3();
    } else {
      fail(ErrorKind::InvalidArgument, "unknown tower '" + tower + "' (pt+line-p3, pt-p3, pt-p2, pt-f3)");
    }
    const auto fam = elliptic_family(order);
    return named(verify_tower(name, fam.genus, fam.A, stages), name);
  })};
}

std::vector<VerificationReport> verify_hodge(int n, int lmax, int pmax) {
  const std::string name = "hodge-p" + std::to_string(n);
  return {timed(name, [&] {
    if (lmax < 0 || pmax < 0) fail(ErrorKind::InvalidArgument, "hodge: lmax and pmax must be >= 0");
    return named(verify_hodge_recursion(n, lmax, pmax), name);
  })};
}

namespace {

VerificationReport fe_relations() {
  const FESolution s = solve_fe(8);
  const Poly a1 = Poly::var("a1"), f3 = Poly::var("f3"), f4 = Poly::var("f4");
  const std::vector<std::tuple<std::string, Poly, Poly>> rel{
      {"a2", s.A[2], f3 * Rational(3)},
      {"a3", s.A[3], f4 * Rational(2) + a1 * f3},
      {"a4", s.A[4], a1 * f4 * Rational(2) + f3 * f3 * Rational(3, 2)},
      {"f5", s.f[5], f3 * f3 * Rational(3, 10) + a1 * f4 * Rational(3, 5)},
  };
  std::vector<VerificationReport> parts;
  for (const auto& [label, got, want] : rel)
    parts.push_back(make_report(label, got == want, label + " = " + got.to_string(), label + " = " + want.to_string(), label));
  return combine("fe-relations", parts);
}

VerificationReport fe_order20() {
  const auto t0 = std::chrono::steady_clock::now();
  const FESolution s = solve_fe(20);
  const long ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  VerificationReport fe = check_fe(s.f_series(), s.A_series(), 20, "fe-solve-order-20:check");
  VerificationReport limit = make_report("fe-solve-order-20:runtime", ms < 120000, "solve within limit", "solve within limit",
                                         "solve took " + std::to_string(ms) + " ms");
  return combine("fe-solve-order-20", {fe, limit});
}

VerificationReport algebraic_expansion() {
  const Poly a = Poly::var("a"), b = Poly::var("b"), g2 = Poly::var("g2");
  const auto f = elliptic_f_algebraic(EllipticParams::algebraic(Poly(0), a, b, g2, 7));
  const std::vector<Poly> want{Poly(0), Poly(1), Poly(0), a * Rational(1, 2), b * Rational(1, 6), a * a * Rational(3, 8) - g2 * Rational(1, 40)};
  std::vector<VerificationReport> parts;
  for (std::size_t i = 0; i < want.size(); ++i)
    parts.push_back(make_report("x^" + std::to_string(i), f[static_cast<int>(i)] == want[i], f[static_cast<int>(i)].to_string(),
                                want[i].to_string(), "x^" + std::to_string(i)));
  return combine("algebraic-expansion", parts);
}

VerificationReport sigma_membership() {
  const int n = 12;
  const auto p = EllipticParams::sigma(n + 1);
  const auto f = elliptic_f_sigma(p);
  const auto A = derive_A_from_f(f, jacobian_A_sigma(p, Rational(2))[1]);
  return check_fe(f, A, n, "sigma-membership");
}

VerificationReport q_product_membership(bool literal) {
  QProductParams p{Rational(0), 9, 2};
  p.inverse_y_on_tangent = literal;
  const auto g = q_product_genus(p);
  const auto a1 = fit_a1(g.f, 8);
  if (!a1) return make_report("q-product", false, "no a1 fits", "a1 exists", "A coefficient a1");
  return check_fe(g.f, derive_A_from_f(g.f, *a1), 8, "q-product");
}

VerificationReport q_product_negative() {
  const VerificationReport r = q_product_membership(true);
  VerificationReport out = make_report("q-product-negative-control", !r.passed(), r.lhs, "nonzero defect", r.first_discrepancy);
  out.details.push_back("y^-1 in the tangent factor breaks the functional equation");
  return out;
}

VerificationReport q_product_chi_y() {
  const RatFunc yinv = RatFunc::y_power(-1);
  std::vector<VerificationReport> parts;
  for (long k : {0L, 1L, -1L}) {
    const auto g = q_product_genus(QProductParams{Rational(k), 4, 1});
    for (int n : {1, 2}) {
      const auto x = projective_space(n);
      RatFunc lhs = genus_eval(g, x)[0];
      for (int i = 0; i < n; ++i) lhs = lhs * (RatFunc(1) - yinv);
      RatFunc rhs, w(1);
      for (int p = 0; p <= n; ++p) {
        rhs = rhs + w * RatFunc(chi_hrr(x, tangent_chern(x).degree_part(1) * Rational(k), p));
        w = w * (-yinv);
      }
      const std::string where = "P^" + std::to_string(n) + " k=" + std::to_string(k);
      parts.push_back(make_report(where, lhs == rhs, lhs.to_string(), rhs.to_string(), where));
    }
  }
  return combine("q-product-chi-y", parts);
}

VerificationReport blowup_difference(const std::string& genus) {
  const auto e = linear_subspace(3, 1);
  const RClass h = generator(e.Z, "h");
  const std::string name = "blowup-difference-" + genus + "-line-p3";
  if (genus == "todd") return verify_blowup_difference(name, todd_genus(8), e, h, {1, 1});
  if (genus == "euler") return verify_blowup_difference(name, euler_genus(8), e, h, {1, 1});
  return verify_blowup_difference(name, universal_genus(6), e, h, {1, 1});
}

VerificationReport projective(const std::string& genus) {
  const std::string name = "projective-identities-" + genus;
  if (genus == "todd") return named(projective_identities(todd_genus(8), 6, 5), name);
  if (genus == "euler") return named(projective_identities(euler_genus(8), 6, 5), name);
  return named(projective_identities(universal_genus(7), 6, 5), name);
}

VerificationReport total_residue(const std::string& which) {
  const std::string name = "total-residue-" + which;
  if (which == "r2-linear")
    return named(total_residue_identity(Series<Poly>::variable(12), Series<Poly>({Poly(1), Poly::var("a1")}), 2, 4), name);
  if (which == "r2-todd") {
    const auto todd = todd_genus(14).f.map([](const Rational& q) { return Poly(q); });
    return named(total_residue_identity(todd, Series<Poly>::constant(Poly(1)), 2, 4), name);
  }
  std::vector<Poly> c{Poly(0), Poly(1)};
  for (int k = 2; k <= 5; ++k) c.push_back(Poly::var("f" + std::to_string(k)));
  return named(total_residue_identity(Series<Poly>(c, 12), cubic_free_A(), 3, 2), name);
}

VerificationReport singular_independence() {
  const auto fam = elliptic_family(8);
  const auto p2 = resolutions_p2();
  const ZRing v0 = singular_genus(fam.genus, fam.A, {p2[0].Y, p2[0].divisors});
  const ZRing v1 = singular_genus(fam.genus, fam.A, {p2[1].Y, p2[1].divisors});
  return make_report("singular-genus-resolution-independence", v0 == v1, RingTraits<ZRing>::to_string(v0),
                     RingTraits<ZRing>::to_string(v1), "identity vs point blow-up");
}

VerificationReport singular_rejects() {
  const auto fam = elliptic_family(6);
  const auto p2 = resolutions_p2();
  std::vector<VerificationReport> parts;
  for (const Rational& e : {Rational(-1), Rational(-3, 2)}) {
    const std::string where = "e=" + e.to_string();
    try {
      singular_genus(fam.genus, fam.A, {p2[1].Y, {{p2[1].divisors[0].E, e}}});
      parts.push_back(make_report(where, false, "accepted", "rejected", where));
    } catch (const Error& err) {
      const bool ok = err.kind() == ErrorKind::Domain && std::string(err.what()).find("not log-terminal") != std::string::npos;
      parts.push_back(make_report(where, ok, err.what(), "rejected", where));
    }
  }
  return combine("singular-genus-rejects-non-log-terminal", parts);
}

VerificationReport generalized_step() {
  const auto fam = elliptic_family(8);
  const auto e = point_in(projective_space(2));
  const Blowup bl = blow_up(e);
  const RClass h = generator(e.X, "h");
  const Series<ZRing> F({z_constant(Poly(1)), z_constant(Poly(2)), z_constant(Poly(-1)), z_constant(Poly(5))});
  const ZRing lhs = (evaluate(F, lift<ZRing>(h)) * tangent_genus_class(fam.genus, e.X)).integrate();
  const ZRing rhs = (evaluate(F, lift<ZRing>(bl.phi_star(h))) * evaluate(fam.A(Rational(2)).truncated(2), lift<ZRing>(bl.E)) *
                     tangent_genus_class(fam.genus, bl.Y))
                        .integrate();
  return make_report("pullback-polynomial-bl-pt-p2", lhs == rhs, RingTraits<ZRing>::to_string(lhs),
                     RingTraits<ZRing>::to_string(rhs), "F = 1 + 2h - h^2 + 5h^3");
}

VerificationReport hodge_spot() {
  const auto p2 = projective_space(2), p1 = projective_space(1);
  const Rational lhs = chi_hrr(p2, generator(p2, "h"), 1);
  const Rational t1 = chi_hrr(p2, RClass::zero(p2), 1);
  const Rational t2 = chi_hrr(p1, generator(p1, "h"), 1);
  const Rational t3 = chi_hrr(p1, RClass::zero(p1), 0);
  const bool ok = lhs == Rational(0) && t1 == Rational(-1) && t2 == Rational(0) && t3 == Rational(1) && lhs == t1 + t2 + t3;
  return make_report("hodge-spot-p2-p1-l1", ok, lhs.to_string(), t1.to_string() + " + " + t2.to_string() + " + " + t3.to_string(),
                     "P^2 p=1 l=1");
}

std::vector<CheckEntry> build_registry() {
  std::vector<CheckEntry> r;
  auto add = [&](std::string name, std::function<VerificationReport()> fn) { r.push_back({std::move(name), std::move(fn)}); };
  auto add_many = [&](std::string name, std::function<std::vector<VerificationReport>()> fn, std::size_t index = 0) {
    r.push_back({name, [fn, index] { return fn().at(index); }});
  };
  add("fe-relations", fe_relations);
  add("fe-solve-order-20", fe_order20);
  add("weierstrass-recovery", [] { return named(weierstrass_from_fe(solve_fe(12)).report, "weierstrass-recovery"); });
  add("algebraic-expansion", algebraic_expansion);
  add("sigma-membership", sigma_membership);
  for (const char* w : {"r2-linear", "r2-todd", "r3-universal"}) add(std::string("total-residue-") + w, [w] { return total_residue(w); });
  add_many("s1-r2-degree8", [] { return verify_s1(2, 8); });
  add_many("s1-r3-degree6", [] { return verify_s1(3, 6); });
  add("s1-negative-control", [] { return named(residue_negative_control(2, 6), "s1-negative-control"); });
  for (const char* g : {"todd", "euler"})
    for (const char* c : {"bl-pt-p2", "bl-pt-p3", "bl-line-p3"})
      add_many(std::string("theorem-a-") + g + "-" + c, [g, c] { return verify_theorem_a(c, g, std::nullopt); });
  add_many("theorem-a-universal-bl-line-p3", [] { return verify_theorem_a("bl-line-p3", "universal", std::nullopt); });
  add_many("theorem-a-universal-bl-line-p3:specialized", [] { return verify_theorem_a("bl-line-p3", "universal", std::nullopt); }, 1);
  add_many("theorem-a-universal-bl-pt-p2", [] { return verify_theorem_a("bl-pt-p2", "universal", std::nullopt); });
  for (const char* g : {"todd", "euler", "universal"}) {
    add(std::string("projective-identities-") + g, [g] { return projective(g); });
    add(std::string("blowup-difference-") + g + "-line-p3", [g] { return blowup_difference(g); });
  }
  add_many("transition-bl-pt-p2-line", [] { return verify_transition("bl-pt-p2-line", Rational(1, 2), 8); });
  for (const char* t : {"pt+line-p3", "pt-p3", "pt-f3"})
    add_many(std::string("cov-") + t, [t] { return verify_cov(t, 8); });
  add("cov-todd-pt+line-p3", [] {
    JacobianFamily<Rational> one = [](const Rational&) { return Series<Rational>::constant(Rational(1)); };
    return verify_tower("cov-todd-pt+line-p3", todd_genus(8), one, tower_pt_line_p3());
  });
  add("pullback-polynomial-bl-pt-p2", generalized_step);
  add("singular-genus-resolution-independence", singular_independence);
  add("singular-genus-rejects-non-log-terminal", singular_rejects);
  for (int n = 1; n <= 3; ++n) add_many("hodge-p" + std::to_string(n), [n] { return verify_hodge(n, 3, n); });
  add("hodge-spot-p2-p1-l1", hodge_spot);
  add("q-product-membership", [] { return named(q_product_membership(false), "q-product-membership"); });
  add("q-product-negative-control", q_product_negative);
  add("q-product-chi-y", q_product_chi_y);
  std::sort(r.begin(), r.end(), [](const CheckEntry& a, const CheckEntry& b) { return a.name < b.name; });
  return r;
}

}  // namespace

const std::vector<CheckEntry>& check_registry() {
  static const std::vector<CheckEntry> reg = build_registry();
  return reg;
}

std::vector<VerificationReport> report_all(const std::vector<std::string>& only) {
  for (const auto& name : only)
    if (std::none_of(check_registry().begin(), check_registry().end(), [&](const CheckEntry& c) { return c.name == name; }))
      fail(ErrorKind::InvalidArgument, "unknown check '" + name + "'");
  std::vector<VerificationReport> out;
  for (const auto& c : check_registry()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end()) continue;
    VerificationReport r = timed(c.name, c.run);
    r.check = c.name;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.check < b.check; });
  return out;
}

Json reports_to_json(const std::vector<VerificationReport>& reports, bool deterministic) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, deterministic));
  return arr;
}

}  // namespace gforge
