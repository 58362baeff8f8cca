#include "genus_forge/weierstrass.hpp"

namespace gforge {

EllipticParams EllipticParams::algebraic(Poly k, Poly a, Poly b, Poly g2, int order) {
  EllipticParams p;
  p.mode = EllipticMode::Algebraic;
  p.k = std::move(k);
  p.a = std::move(a);
  p.b = std::move(b);
  p.g2 = std::move(g2);
  p.g3 = p.derived_g3();
  p.order = order;
  return p;
}

EllipticParams EllipticParams::sigma(int order, int z_order) {
  return sigma(Poly::var("k"), Poly::var("g2"), Poly::var("g3"), order, z_order);
}

EllipticParams EllipticParams::sigma(Poly k, Poly g2, Poly g3, int order, int z_order) {
  EllipticParams p;
  p.mode = EllipticMode::Sigma;
  p.k = std::move(k);
  p.g2 = std::move(g2);
  p.g3 = std::move(g3);
  p.order = order;
  p.z_order = z_order;
  return p;
}

EllipticParams EllipticParams::trig(Poly k, Poly s, Poly a1, int order) {
  EllipticParams p;
  p.mode = EllipticMode::Trig;
  p.k = std::move(k);
  p.s = std::move(s);
  p.a1 = std::move(a1);
  p.order = order;
  return p;
}

Poly EllipticParams::derived_g3() const { return a * a * a * Rational(4) - g2 * a - b * b; }

int EllipticParams::effective_z_order() const { return z_order > 0 ? z_order : 2 * order + 6; }

ZRing z_constant(const Poly& c, int z_order) { return ZRing::constant(c, z_order); }

namespace {

void require_mode(const EllipticParams& p, EllipticMode m, const char* what) {
  if (p.mode != m) fail(ErrorKind::InvalidArgument, std::string(what) + ": wrong parameter mode");
  if (p.order < 1) fail(ErrorKind::InvalidArgument, std::string(what) + ": order must be positive");
}

template <CoefficientRing R>
Series<R> algebraic_f(const R& k, const R& a, const R& b, const R& g2, int order) {
  const R g3 = a * a * a * Rational(4) - g2 * a - b * b;
  const int m = std::max(2, order - 3);
  const Laurent<R> wp = wp_series(g2, g3, m);
  const Laurent<R> denom = wp - Laurent<R>::constant(a);
  if (denom.is_zero() || !RingTraits<R>::is_unit(denom.stored()[0]))
    fail(ErrorKind::Domain, "pole collision: wp - a is not invertible");
  const Laurent<R> q = (wp.derivative() - Laurent<R>::constant(b)) * denom.inverse();
  const Laurent<R> g = q * Rational(-1, 2) + Laurent<R>::constant(k) - Laurent<R>::monomial(RingTraits<R>::one(), -1);
  const Series<R> f = exp_series(g.to_series().integral()).shifted(1);
  if (f.order() < order) fail(ErrorKind::Precision, "algebraic f: precision loss");
  return f.truncated(order);
}

std::vector<Series<Poly>> sigma_derivatives(const Series<Poly>& sigma, int count) {
  std::vector<Series<Poly>> d{sigma};
  for (int j = 1; j < count; ++j) d.push_back(d.back().derivative());
  return d;
}

// sigma(t + r z)/sigma(r z) as a series in t over the z-ring
Series<ZRing> shifted_sigma_ratio(const std::vector<Series<Poly>>& d, const Rational& r, int order) {
  std::vector<ZRing> c;
  for (int j = 0; j <= order; ++j)
    c.push_back(ZRing::from_series(d[static_cast<std::size_t>(j)]).scaled_argument(r) * factorial(j).inverse());
  const ZRing inv0 = c[0].inverse();
  for (auto& x : c) x = x * inv0;
  return Series<ZRing>(std::move(c), order);
}

}  // namespace

Series<Poly> elliptic_f_algebraic(const EllipticParams& p) {
  require_mode(p, EllipticMode::Algebraic, "elliptic_f");
  return algebraic_f<Poly>(p.k, p.a, p.b, p.g2, p.order);
}

Series<ZRing> elliptic_f_algebraic(const ZRing& k, const ZRing& a, const ZRing& b, const ZRing& g2, int order) {
  return algebraic_f<ZRing>(k, a, b, g2, order);
}

Series<ZRing> elliptic_f_sigma(const EllipticParams& p) {
  require_mode(p, EllipticMode::Sigma, "elliptic_f");
  const int n = p.order;
  const WeierstrassData<Poly> w(p.g2, p.g3, p.effective_z_order());
  const auto d = sigma_derivatives(w.sigma, n);
  const Series<ZRing> ratio = shifted_sigma_ratio(d, Rational(1), n - 1);
  const Series<ZRing> sigma_x = w.sigma.truncated(n).map([](const Poly& c) { return z_constant(c); });
  const ZRing kz = z_constant(p.k) + w.zeta;
  const Series<ZRing> twist = exp_series(Series<ZRing>::variable(n) * kz);
  return (twist * sigma_x * invert_unit(ratio)).truncated(n);
}

Series<Poly> elliptic_f_trig(const EllipticParams& p) {
  require_mode(p, EllipticMode::Trig, "elliptic_f");
  std::vector<Poly> c(static_cast<std::size_t>(p.order) + 1);
  Poly s2j(1);
  for (int j = 0; 2 * j + 1 <= p.order; ++j) {
    c[static_cast<std::size_t>(2 * j + 1)] = s2j * factorial(2 * j + 1).inverse();
    s2j = s2j * p.s * p.s;
  }
  const Series<Poly> f(std::move(c), p.order);
  return exp_series(Series<Poly>::variable(p.order) * p.k) * f;
}

Series<ZRing> jacobian_A_sigma(const EllipticParams& p, const Rational& r) {
  require_mode(p, EllipticMode::Sigma, "jacobian_A");
  if (r.is_zero()) fail(ErrorKind::Domain, "jacobian_A: r = 0 makes sigma(rz) vanish");
  if (r.sign() < 0) fail(ErrorKind::InvalidArgument, "jacobian_A: r must be positive");
  const int n = p.order;
  const WeierstrassData<Poly> w(p.g2, p.g3, p.effective_z_order());
  if (r.is_one()) return Series<ZRing>::constant(RingTraits<ZRing>::one(), n);
  const auto d = sigma_derivatives(w.sigma, n + 1);
  const Series<ZRing> num = shifted_sigma_ratio(d, r, n);
  const Series<ZRing> den = shifted_sigma_ratio(d, Rational(1), n);
  const ZRing kz = (z_constant(p.k) + w.zeta) * (Rational(1) - r);
  const Series<ZRing> twist = exp_series(Series<ZRing>::variable(n) * kz);
  return (twist * num * invert_unit(den)).truncated(n);
}

Series<Poly> jacobian_A_trig(const EllipticParams& p, const Rational& r) {
  require_mode(p, EllipticMode::Trig, "jacobian_A");
  if (r.is_one()) return Series<Poly>::constant(Poly(1), p.order);
  if (r != Rational(2)) fail(ErrorKind::Unsupported, "jacobian_A: trigonometric mode only supports r = 2");
  std::vector<Poly> c(static_cast<std::size_t>(p.order) + 1);
  Poly sj(1);
  for (int j = 0; j <= p.order; ++j) {
    // s^j t^j / j! from cosh (even j) or a1 sinh/s (odd j)
    const Poly base = j % 2 == 0 ? sj : sj * p.a1;
    c[static_cast<std::size_t>(j)] = base * factorial(j).inverse();
    if (j % 2 == 1) sj = sj * p.s * p.s;
  }
  const Series<Poly> a(std::move(c), p.order);
  return exp_series(Series<Poly>::variable(p.order) * (-p.k)) * a;
}

PointValues point_values(const EllipticParams& p) {
  require_mode(p, EllipticMode::Sigma, "point_values");
  const WeierstrassData<Poly> w(p.g2, p.g3, p.effective_z_order());
  return {w.wp, w.wp.derivative(), w.zeta};
}

}  // namespace gforge
