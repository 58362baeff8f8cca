#include "genus_forge/verify.hpp"

namespace gforge {

namespace {

struct NPolys {
  std::vector<VarId> vars;
  std::vector<Poly> n;
  int top = 0;
  Poly trunc(const Poly& p) const { return p.truncate_degree(vars, top); }
  // s(L) for a linear form L without constant term
  Poly at(const Series<Poly>& s, const Poly& L) const {
    const int deg = s.is_exact() ? s.degree() : std::min(s.order(), top);
    if (!s.is_exact() && s.order() < top) fail(ErrorKind::Precision, "total_residue_identity: series too short");
    Poly acc;
    for (int k = deg; k >= 0; --k) acc = trunc(acc * L) + s[k];
    return acc;
  }
};

}  // namespace

VerificationReport total_residue_identity(const Series<Poly>& f, const Series<Poly>& A, int r, int degree) {
  if (r < 2) fail(ErrorKind::InvalidArgument, "total_residue_identity needs r >= 2");
  const std::string name = "total-residue(r=" + std::to_string(r) + ")";
  NPolys P;
  for (int i = 1; i <= r; ++i) {
    P.vars.push_back(intern_variable("n" + std::to_string(i)));
    P.n.push_back(Poly::var("n" + std::to_string(i)));
  }
  const int degv = r + r * (r - 1) / 2;
  P.top = degree + degv;

  Poly lhs;
  const auto res = nilpotent_residue(f, A, r, degree);
  for (const auto& [alpha, c] : res.coeff) {
    if (c.is_zero()) continue;
    std::vector<int> perm = alpha;
    do {
      Poly mono(1);
      for (int i = 0; i < r; ++i)
        for (int k = 0; k < perm[static_cast<std::size_t>(i)]; ++k) mono = mono * P.n[static_cast<std::size_t>(i)];
      lhs += mono * c;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  Poly V(1), delta(1);
  for (int i = 0; i < r; ++i) V = V * P.n[static_cast<std::size_t>(i)];
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) delta = delta * (P.n[static_cast<std::size_t>(i)] - P.n[static_cast<std::size_t>(j)]);
  lhs = P.trunc(lhs * V * delta);

  const Series<Poly> Q = invert_unit(f.unshifted(1));
  Poly rhs = delta;
  for (int i = 0; i < r; ++i) rhs = P.trunc(rhs * P.at(Q, P.n[static_cast<std::size_t>(i)]));
  for (int j = 0; j < r; ++j) {
    const Poly& nj = P.n[static_cast<std::size_t>(j)];
    Poly term = P.trunc(P.at(A, nj) * P.at(Q, nj));
    Poly dj(1);
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        if (a != j && b != j) dj = dj * (P.n[static_cast<std::size_t>(a)] - P.n[static_cast<std::size_t>(b)]);
    term = term * dj;
    for (int i = 0; i < r; ++i) {
      if (i == j) continue;
      term = P.trunc(term * P.n[static_cast<std::size_t>(i)]);
      term = P.trunc(term * P.at(Q, P.n[static_cast<std::size_t>(i)] - nj));
    }
    if ((r - 1 - j) % 2 != 0) term = -term;
    rhs -= term;
  }
  const Poly diff = lhs - rhs;
  if (diff.is_zero()) {
    VerificationReport rep = make_report(name, true, "cleared residue", "cleared total residue");
    rep.details.push_back("identity through total degree " + std::to_string(P.top) + " in n1..n" + std::to_string(r));
    return rep;
  }
  // lowest-degree discrepancy
  int low = kExact;
  for (const auto& t : diff.terms()) {
    int d = 0;
    for (VarId v : P.vars) d += t.first.exponent(v);
    low = std::min(low, d);
  }
  Poly low_part;
  for (const auto& t : diff.terms()) {
    int d = 0;
    for (VarId v : P.vars) d += t.first.exponent(v);
    if (d == low) low_part += Poly::term(t.second, t.first);
  }
  return make_report(name, false, low_part.to_string(), "0/1", "total degree " + std::to_string(low) + " in n");
}

VerificationReport residue_vanishing_S1(const EllipticParams& base, int r, int degree) {
  EllipticParams p = base;
  p.order = std::max(p.order, degree + r + 1);
  const auto f = elliptic_f_sigma(p);
  const auto A = jacobian_A_sigma(p, Rational(r));
  return residue_zero_report("s1(r=" + std::to_string(r) + ",degree=" + std::to_string(degree) + ")",
                             nilpotent_residue(f, A, r, degree));
}

VerificationReport residue_negative_control(int r, int degree) {
  const int order = degree + r + 2;
  const Series<Rational> f = Series<Rational>({0, 1, 0, 0, 0, 1}, order);
  const auto A = derive_A_from_f(f, Rational(0));
  const auto res = nilpotent_residue(f, A, r, degree);
  const auto nz = res.first_nonzero();
  const std::string name = "s1-negative-control(r=" + std::to_string(r) + ")";
  if (!nz) return make_report(name, false, "0/1", "nonzero residue", "no nonzero coefficient through degree " + std::to_string(degree));
  VerificationReport rep = make_report(name, true, res.coeff.at(*nz).to_string(), "nonzero residue");
  rep.details.push_back("first nonzero coefficient at " + tuple_monomial(*nz));
  return rep;
}

std::vector<TowerStage> build_tower(const ModelPtr& X, const std::vector<Divisor>& divisors, const RClass& D,
                                    const std::vector<TowerStep>& steps) {
  std::vector<TowerStage> stages{{X, divisors, D}};
  std::optional<Blowup> prev;
  for (const auto& step : steps) {
    const TowerStage& cur = stages.back();
    const Embedding e = step.center(prev);
    if (e.X != cur.Y) fail(ErrorKind::InvalidArgument, "tower step: center lives on another model");
    if (step.multiplicities.size() != cur.divisors.size())
      fail(ErrorKind::InvalidArgument, "tower step: one multiplicity per divisor");
    Blowup bl = blow_up(e);
    Rational e0(e.codim - 1);
    for (std::size_t i = 0; i < cur.divisors.size(); ++i) e0 += cur.divisors[i].e * Rational(step.multiplicities[i]);
    if (e0 == Rational(-1)) fail(ErrorKind::Domain, "exceptional discrepancy e0 = -1 is excluded");
    TowerStage next{bl.Y, {}, bl.phi_star(cur.D)};
    for (std::size_t i = 0; i < cur.divisors.size(); ++i)
      next.divisors.push_back({bl.phi_star(cur.divisors[i].E) - bl.E * Rational(step.multiplicities[i]), cur.divisors[i].e});
    next.divisors.push_back({bl.E, e0});
    stages.push_back(std::move(next));
    prev = std::move(bl);
  }
  return stages;
}

EllipticFamily elliptic_family(int order, int z_order) {
  EllipticFamily fam{EllipticParams::sigma(order, z_order), {}, {}};
  fam.genus = Genus<ZRing>::from_f("elliptic-sigma", elliptic_f_sigma(fam.params));
  const EllipticParams p = fam.params;
  fam.A = [p](const Rational& r) { return jacobian_A_sigma(p, r); };
  return fam;
}

std::vector<TowerStage> transition_bl_pt_p2_line(const Rational& e1) {
  const ModelPtr p2 = projective_space(2);
  TowerStep step{[p2](const std::optional<Blowup>&) { return point_in(p2); }, {1}};
  return build_tower(p2, {{generator(p2, "h"), e1}}, RClass::one(p2), {step});
}

std::vector<TowerStage> tower_pt_line_p3() {
  const ModelPtr p3 = projective_space(3);
  TowerStep pt{[p3](const std::optional<Blowup>&) { return point_in(p3); }, {}};
  TowerStep line{[](const std::optional<Blowup>& prev) { return disjoint_center(*prev, linear_subspace(3, 1)); }, {0}};
  return build_tower(p3, {}, RClass::one(p3), {pt, line});
}

std::vector<TowerStage> resolutions_p2() {
  const ModelPtr p2 = projective_space(2);
  TowerStep pt{[p2](const std::optional<Blowup>&) { return point_in(p2); }, {}};
  return build_tower(p2, {}, RClass::one(p2), {pt});
}

std::vector<TowerStage> resolutions_f3() {
  const ModelPtr f3 = catalog_model("F3");
  TowerStep pt{[f3](const std::optional<Blowup>&) { return point_in(f3); }, {1}};
  return build_tower(f3, {{generator(f3, "xi"), Rational(-1, 3)}}, RClass::one(f3), {pt});
}

VerificationReport verify_hodge_recursion(int n, int lmax, int pmax) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "hodge recursion needs n >= 1");
  const ModelPtr X = projective_space(n), D = projective_space(n - 1);
  const RClass hx = generator(X, "h");
  const RClass hd = n >= 2 ? generator(D, "h") : RClass::zero(D);
  std::vector<VerificationReport> parts;
  for (int p = 0; p <= std::min(pmax, n); ++p)
    for (long l = -lmax; l <= lmax; ++l) {
      const Rational lhs = chi_hrr(X, hx * Rational(l), p);
      const Rational t1 = chi_hrr(X, hx * Rational(l - 1), p);
      const Rational t2 = chi_hrr(D, hd * Rational(l), p);
      const Rational t3 = p == 0 ? Rational(0) : chi_hrr(D, hd * Rational(l - 1), p - 1);
      const std::string where = "P^" + std::to_string(n) + " p=" + std::to_string(p) + " l=" + std::to_string(l);
      parts.push_back(make_report("hodge[" + where + "]", lhs == t1 + t2 + t3, lhs.to_string(),
                                  t1.to_string() + " + " + t2.to_string() + " + " + t3.to_string(), where));
    }
  VerificationReport rep = combine("hodge(n=" + std::to_string(n) + ")", parts);
  rep.details.push_back(std::to_string(parts.size()) + " (p, l) pairs");
  return rep;
}

}  // namespace gforge
