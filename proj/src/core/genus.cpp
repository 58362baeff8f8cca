#include "genus_forge/genus.hpp"

namespace gforge {

RClass diagonal_hyperplane(const ModelPtr& pij) {
  RClass u = RClass::zero(pij);
  for (const auto& g : pij->generator_names()) u += generator(pij, g);
  return u;
}

Series<Rational> todd_Q(int order) {
  // (1 - e^(-x))/x = sum (-1)^j x^j/(j+1)!
  std::vector<Rational> c;
  for (int j = 0; j <= order; ++j) c.push_back((j % 2 == 0 ? Rational(1) : Rational(-1)) / factorial(j + 1));
  return invert_unit(Series<Rational>(std::move(c), order));
}

Genus<Rational> todd_genus(int order) { return Genus<Rational>::from_Q("todd", todd_Q(order)); }

Genus<Rational> euler_genus(int order) {
  return Genus<Rational>::from_Q("euler", Series<Rational>({Rational(1), Rational(1)}, order));
}

Genus<RatFunc> chi_y_genus(int order) {
  const Series<RatFunc> td = todd_Q(order).map([](const Rational& q) { return RatFunc(q); });
  std::vector<RatFunc> c;
  for (int j = 0; j <= order; ++j) c.push_back(RatFunc::y() * ((j % 2 == 0 ? Rational(1) : Rational(-1)) / factorial(j)));
  c[0] = c[0] + RatFunc(1);
  return Genus<RatFunc>::from_Q("chi-y", td * Series<RatFunc>(std::move(c), order));
}

Genus<Poly> universal_genus(int order) {
  if (order < 1) fail(ErrorKind::InvalidArgument, "universal genus needs order >= 1");
  std::vector<Poly> c{Poly(0), Poly(1)};
  for (int k = 2; k <= order; ++k) c.push_back(Poly::var("f" + std::to_string(k)));
  return Genus<Poly>::from_f("universal", Series<Poly>(std::move(c), order));
}

Rational chi_hrr(const ModelPtr& x, const RClass& line, int p) {
  if (line.model() != x) fail(ErrorKind::InvalidArgument, "chi_hrr: line class lives on another model");
  const int n = x->dim();
  if (p < 0 || p > n) return Rational(0);
  const RClass c = tangent_chern(x);
  const auto ps = power_sums(c);
  // P_m = sum_i e^(-m x_i) = n + sum_k (-m)^k p_k / k!
  std::vector<RClass> P(static_cast<std::size_t>(p) + 1, RClass::zero(x));
  for (int m = 1; m <= p; ++m) {
    RClass acc = RClass::one(x) * Rational(n);
    for (int k = 1; k <= n; ++k) acc += ps[static_cast<std::size_t>(k)] * (power(Rational(-m), k) / factorial(k));
    P[static_cast<std::size_t>(m)] = acc;
  }
  // e_p(e^(-x_1), ...) by Newton's identities
  std::vector<RClass> e{RClass::one(x)};
  for (int q = 1; q <= p; ++q) {
    RClass acc = RClass::zero(x);
    for (int i = 1; i <= q; ++i) {
      const RClass t = e[static_cast<std::size_t>(q - i)] * P[static_cast<std::size_t>(i)];
      acc = i % 2 == 1 ? acc + t : acc - t;
    }
    e.push_back(acc * Rational(1, q));
  }
  RClass ch = RClass::one(x), term = RClass::one(x);
  for (int k = 1; k <= n; ++k) {
    term = (term * line) * Rational(1, k);
    ch += term;
  }
  const RClass td = genus_class(todd_Q(n), c, n);
  return (td * ch * e[static_cast<std::size_t>(p)]).integrate();
}

namespace {

// sum_j c s^j x^j / j! as an x-series, s = +-1
Series<QRing> exp_times(const QRing& c, int s, int order) {
  std::vector<QRing> out;
  for (int j = 0; j <= order; ++j) out.push_back(c * ((s < 0 && j % 2 == 1 ? Rational(-1) : Rational(1)) / factorial(j)));
  return Series<QRing>(std::move(out), order);
}

}  // namespace

Series<QRing> q_product_raw_Q(const QProductParams& p) {
  if (p.x_order < 1 || p.q_order < 1) fail(ErrorKind::InvalidArgument, "q_product_genus: orders must be >= 1");
  const int n = p.x_order, qo = p.q_order;
  const QRing one = QRing::constant(RatFunc(1), qo);
  const Series<QRing> unit = Series<QRing>::constant(one, n);
  const RatFunc yinv = RatFunc::y_power(-1), y = RatFunc::y();

  const Series<QRing> td = todd_Q(n).map([&](const Rational& c) { return one * c; });
  Series<QRing> Q = td * (unit - exp_times(QRing::constant(yinv, qo), -1, n));
  for (int m = 1; m <= qo; ++m) {
    const QRing qm = QRing::monomial(RatFunc(1), m, qo);
    const Series<QRing> num = (unit - exp_times(qm * yinv, -1, n)) * (unit - exp_times(qm * (p.inverse_y_on_tangent ? yinv : y), 1, n));
    const Series<QRing> den = (unit - exp_times(qm, -1, n)) * (unit - exp_times(qm, 1, n));
    Q = Q * num * invert_unit(den);
  }
  // e^(kx)
  std::vector<QRing> ek{one};
  for (int j = 1; j <= n; ++j) ek.push_back(ek.back() * (p.k * Rational(1, j)));
  return Q * Series<QRing>(std::move(ek), n);
}

Genus<QRing> q_product_genus(const QProductParams& p) {
  const Series<QRing> raw = q_product_raw_Q(p);
  const Series<QRing> Q = raw * invert_unit(raw[0]);
  Genus<QRing> g = Genus<QRing>::from_Q("q-product", Q);
  g.f = g.f.truncated(p.x_order);
  return g;
}

}  // namespace gforge
