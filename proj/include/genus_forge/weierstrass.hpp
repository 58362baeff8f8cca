#pragma once

#include <utility>

#include "genus_forge/poly.hpp"
#include "genus_forge/series.hpp"

namespace gforge {

/// Coefficients c_m of t^(2m) in wp, for m = 1..count.
template <CoefficientRing R>
std::vector<R> wp_coefficients(const R& g2, const R& g3, int count) {
  std::vector<R> c(static_cast<std::size_t>(std::max(count, 0)) + 1, RingTraits<R>::zero());
  if (count >= 1) c[1] = g2 * Rational(1, 20);
  if (count >= 2) c[2] = g3 * Rational(1, 28);
  for (int m = 3; m <= count; ++m) {
    R acc = RingTraits<R>::zero();
    for (int k = 1; k <= m - 2; ++k) acc = acc + c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - 1 - k)];
    c[static_cast<std::size_t>(m)] = acc * Rational(3, (2 * m + 3) * (m - 2));
  }
  return c;
}

/// wp = t^-2 + sum c_m t^(2m), known through t^order.
template <CoefficientRing R>
Laurent<R> wp_series(const R& g2, const R& g3, int order) {
  if (order < 2) fail(ErrorKind::InvalidArgument, "wp_series needs order >= 2");
  const auto c = wp_coefficients(g2, g3, order / 2);
  std::vector<R> v(static_cast<std::size_t>(order + 3), RingTraits<R>::zero());
  v[0] = RingTraits<R>::one();
  for (int m = 1; 2 * m <= order; ++m) v[static_cast<std::size_t>(2 * m + 2)] = c[static_cast<std::size_t>(m)];
  return Laurent<R>(-2, std::move(v), order);
}

/// wp, zeta, sigma from (g2, g3). `order` is the wp truncation; zeta is then
/// known through t^(order+1) and sigma through t^(order+3).
template <CoefficientRing R>
struct WeierstrassData {
  R g2, g3;
  int order = 0;
  Laurent<R> wp, zeta;
  Series<R> sigma;

  WeierstrassData(const R& g2_, const R& g3_, int order_) : g2(g2_), g3(g3_), order(order_) {
    wp = wp_series(g2, g3, order);
    const auto c = wp_coefficients(g2, g3, order / 2);
    std::vector<R> z(static_cast<std::size_t>(order + 3), RingTraits<R>::zero());
    std::vector<R> e(static_cast<std::size_t>(order + 3), RingTraits<R>::zero());
    z[0] = RingTraits<R>::one();
    for (int m = 1; 2 * m <= order; ++m) {
      const auto mi = static_cast<std::size_t>(m);
      z[static_cast<std::size_t>(2 * m + 2)] = -(c[mi] * Rational(1, 2 * m + 1));
      e[static_cast<std::size_t>(2 * m + 2)] = -(c[mi] * Rational(1, (2 * m + 1) * (2 * m + 2)));
    }
    zeta = Laurent<R>(-1, std::move(z), order + 1);
    sigma = exp_series(Series<R>(std::move(e), order + 2)).shifted(1);
  }
};

template <CoefficientRing R>
std::pair<Laurent<R>, Series<R>> zeta_sigma_series(const WeierstrassData<R>& w) {
  return {w.zeta, w.sigma};
}

/// Coefficients that depend on the symbolic point z: Laurent series in z
/// over Q[parameters].
using ZRing = Laurent<Poly>;

enum class EllipticMode { Algebraic, Sigma, Trig };

struct EllipticParams {
  EllipticMode mode = EllipticMode::Algebraic;
  Poly k, a, b, g2, g3, s, a1;
  int order = 8;
  /// z truncation for sigma mode; 0 picks a default from `order`.
  int z_order = 0;

  static EllipticParams algebraic(Poly k, Poly a, Poly b, Poly g2, int order);
  /// Symbolic z; g2, g3, k default to free parameters of those names.
  static EllipticParams sigma(int order, int z_order = 0);
  static EllipticParams sigma(Poly k, Poly g2, Poly g3, int order, int z_order = 0);
  static EllipticParams trig(Poly k, Poly s, Poly a1, int order);

  /// 4a^3 - g2 a - b^2
  Poly derived_g3() const;
  int effective_z_order() const;
};

/// f from f'/f = -(wp' - b)/(2(wp - a)) + k, integrated termwise.
Series<Poly> elliptic_f_algebraic(const EllipticParams& p);
/// The same construction with a, b, g2, k given in the z-ring.
Series<ZRing> elliptic_f_algebraic(const ZRing& k, const ZRing& a, const ZRing& b, const ZRing& g2, int order);
/// e^((k + zeta(z))x) sigma(x)sigma(z)/sigma(x+z)
Series<ZRing> elliptic_f_sigma(const EllipticParams& p);
/// e^(kx) sinh(sx)/s
Series<Poly> elliptic_f_trig(const EllipticParams& p);

/// e^(-(r-1)(k+zeta(z))t) sigma(t+rz)sigma(z)/(sigma(t+z)sigma(rz))
Series<ZRing> jacobian_A_sigma(const EllipticParams& p, const Rational& r);
/// e^(-kt)(a1 sinh(st)/s + cosh(st)); the trigonometric case only has r = 2.
Series<Poly> jacobian_A_trig(const EllipticParams& p, const Rational& r);

/// wp(z), wp'(z), zeta(z) of the sigma-mode parameters.
struct PointValues {
  ZRing wp, wp_prime, zeta;
};
PointValues point_values(const EllipticParams& p);

/// Embeds a parameter polynomial as a z-constant.
ZRing z_constant(const Poly& c, int z_order = kExact);

}  // namespace gforge
