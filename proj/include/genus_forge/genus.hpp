#pragma once

#include <string>
#include <vector>

#include "genus_forge/model.hpp"
#include "genus_forge/ratfunc.hpp"
#include "genus_forge/report.hpp"
#include "genus_forge/series.hpp"

namespace gforge {

/// A genus given by f; Q(x) = x/f(x). Both are kept so that genera with
/// Q(0) != 1 (chi_y before normalization) can be stored as well.
template <CoefficientRing R>
struct Genus {
  std::string name;
  Series<R> f;
  Series<R> Q;

  static Genus from_f(std::string name, const Series<R>& f) {
    if (f.order() < 1 || !RingTraits<R>::is_zero(f[0]) || !RingTraits<R>::is_unit(f[1]))
      fail(ErrorKind::Domain, "genus: f must vanish simply at 0");
    return Genus{std::move(name), f, invert_unit(f.unshifted(1))};
  }
  static Genus from_Q(std::string name, const Series<R>& q) {
    if (q.order() < 0 || !RingTraits<R>::is_unit(q[0])) fail(ErrorKind::Domain, "genus: Q(0) must be a unit");
    return Genus{std::move(name), invert_unit(q).shifted(1), q};
  }
};

/// K_Q(c) for a bundle of the given rank: Q(0)^rank exp(sum_j q_j p_j) with
/// log(Q/Q(0)) = sum_j q_j x^j and p_j the power sums of the chern roots.
template <CoefficientRing R>
Class<R> genus_class(const Series<R>& Q, const RClass& c, int rank) {
  const ModelPtr& m = c.model();
  const int n = m->dim();
  if (!(c.constant_term() == Rational(1))) fail(ErrorKind::InvalidArgument, "genus_class: c must start with 1");
  if (Q.order() < n) fail(ErrorKind::Precision, "genus_class: Q truncated below the model dimension");
  const R q0 = Q[0];
  if (!RingTraits<R>::is_unit(q0)) fail(ErrorKind::Domain, "genus_class: Q(0) is not a unit");
  const Series<R> logq = log_series(Q.truncated(n) * RingTraits<R>::inverse(q0), n);
  const auto p = power_sums(c);
  Class<R> s = Class<R>::zero(m);
  for (int j = 1; j <= n; ++j)
    if (!RingTraits<R>::is_zero(logq[j])) s += lift<R>(p[static_cast<std::size_t>(j)]).scaled(logq[j]);
  Class<R> acc = Class<R>::one(m), term = Class<R>::one(m);
  for (int k = 1; k <= n; ++k) {
    term = (term * s) * Rational(1, k);
    acc += term;
  }
  R scale = RingTraits<R>::one();
  for (int i = 0; i < rank; ++i) scale = scale * q0;
  return acc.scaled(scale);
}

template <CoefficientRing R>
Class<R> tangent_genus_class(const Genus<R>& g, const ModelPtr& x) {
  return genus_class(g.Q, tangent_chern(x), x->dim());
}

template <CoefficientRing R>
R genus_eval(const Genus<R>& g, const ModelPtr& x) {
  return tangent_genus_class(g, x).degree_part(x->dim()).integrate();
}

/// int_X K_Q(c(T_X)) . D . prod f(u_j), D homogeneous, u_j divisor classes.
template <CoefficientRing R>
R virtual_genus(const Genus<R>& g, const ModelPtr& x, const RClass& D, const std::vector<RClass>& u) {
  const int dd = D.valuation();
  if (D.is_zero() || !(D.degree_part(dd) == D)) fail(ErrorKind::InvalidArgument, "virtual_genus: D must be a nonzero homogeneous cycle");
  for (const auto& c : u)
    if (c.model() != x || !(c.degree_part(1) == c)) fail(ErrorKind::InvalidArgument, "virtual_genus: u_j must be divisor classes on X");
  if (D.model() != x) fail(ErrorKind::InvalidArgument, "virtual_genus: D lives on another model");
  if (dd + static_cast<int>(u.size()) > x->dim())
    fail(ErrorKind::InvalidArgument, "virtual_genus: dimension mismatch (codim D = " + std::to_string(dd) + " with " +
                                         std::to_string(u.size()) + " divisors on a " + std::to_string(x->dim()) + "-fold)");
  Class<R> acc = tangent_genus_class(g, x) * lift<R>(D);
  for (const auto& c : u) acc = acc * evaluate(g.f.truncated(x->dim()), lift<R>(c));
  return acc.integrate();
}

/// F(y1, y2) = f(g(y1) + g(y2)), g = reversion(f).
template <CoefficientRing R>
BiSeries<R> formal_group_law(const Series<R>& f, int order) {
  const Series<R> g = reversion(f, order);
  const BiSeries<R> sum = BiSeries<R>::in_x(g, order) + BiSeries<R>::in_y(g, order);
  return compose(f.truncated(order), sum);
}

/// Hyperplane class of P^i x P^j pulled back from both factors.
RClass diagonal_hyperplane(const ModelPtr& pij);

/// [y^n] g' = phi(P^n) for n <= nmax and F(y1,y2) g'(y1) g'(y2) = sum phi(H_ij) y1^i y2^j
/// for i + j <= hmax (default nmax).
template <CoefficientRing R>
VerificationReport projective_identities(const Genus<R>& G, int nmax, int hmax = -1) {
  if (nmax < 1) fail(ErrorKind::InvalidArgument, "projective_identities needs nmax >= 1");
  if (hmax < 0) hmax = nmax;
  if (hmax > nmax) fail(ErrorKind::InvalidArgument, "projective_identities: hmax above nmax");
  if (G.f.order() < nmax + 1) fail(ErrorKind::Precision, "projective_identities: f too short");
  const Series<R> f = G.f.truncated(nmax + 1);
  const Series<R> gd = reversion(f).derivative();
  std::vector<VerificationReport> parts;
  for (int n = 0; n <= nmax; ++n) {
    const R lhs = gd[n];
    const R rhs = genus_eval(G, projective_space(n));
    parts.push_back(make_report("g'[y^" + std::to_string(n) + "]=phi(P^" + std::to_string(n) + ")",
                                RingTraits<R>::is_zero(lhs - rhs), RingTraits<R>::to_string(lhs),
                                RingTraits<R>::to_string(rhs), "y^" + std::to_string(n)));
  }
  const BiSeries<R> F = formal_group_law(f, nmax);
  const BiSeries<R> gen = F * BiSeries<R>::in_x(gd.truncated(nmax), nmax) * BiSeries<R>::in_y(gd.truncated(nmax), nmax);
  for (int i = 0; i <= hmax; ++i)
    for (int j = 0; i + j <= hmax; ++j) {
      const ModelPtr pij = product(projective_space(i), projective_space(j));
      const R rhs = i + j == 0 ? RingTraits<R>::zero() : virtual_genus(G, pij, RClass::one(pij), {diagonal_hyperplane(pij)});
      const R& lhs = gen(i, j);
      parts.push_back(make_report("H_" + std::to_string(i) + std::to_string(j), RingTraits<R>::is_zero(lhs - rhs),
                                  RingTraits<R>::to_string(lhs), RingTraits<R>::to_string(rhs),
                                  "y1^" + std::to_string(i) + "*y2^" + std::to_string(j)));
    }
  return combine("projective_identities(" + G.name + ")", parts);
}

// ------------------------------------------------------------ named genera

/// x/(1 - e^(-x)) and its f = 1 - e^(-x).
Series<Rational> todd_Q(int order);
Genus<Rational> todd_genus(int order);
/// Q = 1 + x.
Genus<Rational> euler_genus(int order);
/// Q = x(1 + y e^(-x))/(1 - e^(-x)); genus_eval gives sum_p chi(Omega^p) y^p.
Genus<RatFunc> chi_y_genus(int order);
/// f = x + f2 x^2 + ... + f_order x^order with free parameters.
Genus<Poly> universal_genus(int order);

/// chi(X, L tensor Omega^p) = int td(T_X) ch(L) ch(Lambda^p T^*) for a line
/// class L, computed from the power sums of the chern roots of T_X.
Rational chi_hrr(const ModelPtr& x, const RClass& line, int p);

using QRing = Series<RatFunc>;

struct QProductParams {
  Rational k{0};
  int x_order = 8;
  int q_order = 2;
  /// Use y^-1 instead of y in the tangent factor (1 - y q^m e^x).
  bool inverse_y_on_tangent = false;
};

/// The q-product characteristic series divided by its x = 0 value; f_q = x/Q.
Genus<QRing> q_product_genus(const QProductParams& p);
/// The undivided series (value at x = 0 is (1 - y^-1) prod (1-y^-1 q^m)(1-y q^m)/(1-q^m)^2).
Series<QRing> q_product_raw_Q(const QProductParams& p);

}  // namespace gforge
