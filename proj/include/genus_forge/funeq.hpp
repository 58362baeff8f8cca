#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genus_forge/poly.hpp"
#include "genus_forge/report.hpp"
#include "genus_forge/serialize.hpp"
#include "genus_forge/series.hpp"

namespace gforge {

/// e^(kx) to the given order.
template <CoefficientRing R>
Series<R> exp_linear(const R& k, int order) {
  std::vector<R> c{RingTraits<R>::one()};
  for (int i = 1; i <= order; ++i) c.push_back(c.back() * k * Rational(1, i));
  return Series<R>(std::move(c), order);
}

/// A = -a1 f(-x) - f(-x) f'(x)/f(x). The division cancels the simple zero
/// of f first, so this works over any coefficient ring. Order drops by one.
template <CoefficientRing R>
Series<R> derive_A_from_f(const Series<R>& f, const R& a1) {
  if (f.is_exact()) fail(ErrorKind::Precision, "derive_A_from_f needs a truncated f");
  if (!RingTraits<R>::is_zero(f[0]) || !RingTraits<R>::is_unit(f[1]))
    fail(ErrorKind::Domain, "derive_A_from_f: f must vanish simply at 0");
  const Series<R> u = f.unshifted(1);
  const Series<R> fm = f.scaled_argument(Rational(-1));
  const Series<R> a = fm * a1 * Rational(-1) + u.scaled_argument(Rational(-1)) * f.derivative() * invert_unit(u);
  return a.truncated(f.order() - 1);
}

/// f(x-y)f(y-x) - A(x)f(y)f(x-y) - A(y)f(x)f(y-x) through total degree `degree`.
template <CoefficientRing R>
BiSeries<R> fe_defect(const Series<R>& f, const Series<R>& A, int degree) {
  if (f.order() < degree || A.order() < degree)
    fail(ErrorKind::Precision, "check_fe: f and A must be known through the checked degree");
  using B = BiSeries<R>;
  const B fxy = B::linear_substitution(f, Rational(1), Rational(-1), degree);
  const B fyx = B::linear_substitution(f, Rational(-1), Rational(1), degree);
  const B term2 = B::in_x(A, degree) * B::in_y(f, degree) * fxy;
  return fxy * fyx - term2 - term2.swapped();
}

template <CoefficientRing R>
std::string bi_locator(const BiSeries<R>&, std::pair<int, int> at) {
  return "x^" + std::to_string(at.first) + "*y^" + std::to_string(at.second) + " (total degree " +
         std::to_string(at.first + at.second) + ")";
}

/// Passes iff every coefficient vanishes. Coefficients that are themselves
/// truncated (Laurent in z) must be known at least through exponent 0, or the
/// check is an error rather than a vacuous pass.
template <CoefficientRing R>
VerificationReport bi_zero_report(const std::string& name, const BiSeries<R>& defect) {
  const int window = defect.min_coefficient_precision();
  if (window < 0) return error_report(name, "insufficient coefficient precision (window ends at " + std::to_string(window) + ")");
  const auto nz = defect.first_nonzero();
  VerificationReport r = nz ? make_report(name, false, RingTraits<R>::to_string(defect(nz->first, nz->second)), "0/1",
                                          bi_locator(defect, *nz))
                            : make_report(name, true, "0/1", "0/1");
  if (window < kExact) r.details.push_back("coefficients verified through z^" + std::to_string(window));
  return r;
}

template <CoefficientRing R>
VerificationReport check_fe(const Series<R>& f, const Series<R>& A, int degree, const std::string& name = "check_fe") {
  return bi_zero_report(name, fe_defect(f, A, degree));
}

/// The a1 making (f, A(f, a1)) satisfy the functional equation, read off the
/// first coefficient where the defect depends on a1 through a unit.
/// nullopt when the defect does not depend on a1 at all.
template <CoefficientRing R>
std::optional<R> fit_a1(const Series<R>& f, int degree) {
  const Series<R> a0 = derive_A_from_f(f, RingTraits<R>::zero());
  const Series<R> a1 = derive_A_from_f(f, RingTraits<R>::one());
  const int n = std::min(degree, a0.order());
  const BiSeries<R> d0 = fe_defect(f.truncated(n), a0, n);
  const BiSeries<R> d1 = fe_defect(f.truncated(n), a1, n) - d0;
  for (int d = 0; d <= n; ++d)
    for (int i = d; i >= 0; --i) {
      const R& c = d1(i, d - i);
      if (RingTraits<R>::is_zero(c)) continue;
      if (RingTraits<R>::is_unit(c)) return -(d0(i, d - i) * RingTraits<R>::inverse(c));
    }
  return std::nullopt;
}

/// f(x+y) = f'(x)f(y) + f'(y)f(x) through total degree `degree`.
template <CoefficientRing R>
VerificationReport torsion2_check(const Series<R>& f, int degree) {
  using B = BiSeries<R>;
  if (f.order() < degree) fail(ErrorKind::Precision, "torsion2_check: f too short");
  const Series<R> fd = f.derivative();
  const B lhs = B::linear_substitution(f, Rational(1), Rational(1), degree);
  const B t = B::in_x(fd, degree) * B::in_y(f, degree);
  return bi_zero_report("torsion2", lhs - t - t.swapped());
}

// ------------------------------------------------------------- solver

/// Coefficients with which the two new unknowns enter the relation of
/// x^p y^(d-p), p = 0..d, at degree d.
struct DegreeRelations {
  int degree = 0;
  std::vector<Rational> f_coeff;  // of f_(d-1)
  std::vector<Rational> a_coeff;  // of a_(d-2)
};

struct FESolution {
  int order = 0;
  std::vector<Poly> f;  // f[0..order]
  std::vector<Poly> A;  // a[0..order]
  std::vector<DegreeRelations> relations;

  Series<Poly> f_series() const { return Series<Poly>(f, order); }
  Series<Poly> A_series() const { return Series<Poly>(A, order); }
  static std::vector<std::string> variables() { return {"a1", "f3", "f4"}; }
};

/// Solves the functional equation degree by degree over Q[a1, f3, f4] with
/// f1 = 1, f2 = 0, a0 = 1. Throws Domain naming the degree if some relation
/// is not implied by the solved ones.
FESolution solve_fe(int order);

Json fe_solution_to_json(const FESolution& s);

struct WeierstrassDictionary {
  Poly a, b, g2, g3;
};

WeierstrassDictionary weierstrass_dictionary(const Poly& a1, const Poly& f3, const Poly& f4);

struct WeierstrassRecovery {
  WeierstrassDictionary dictionary;
  VerificationReport report;  // combined
  std::vector<VerificationReport> checks;
};

/// P = -1/(f(x)f(-x)) + 2 f3: checks P'' - 6P^2 = 12 a1 f4 - 24 f3^2, and for
/// g = 1/f checks g'(x)g(-x) + g'(-x)g(x) = 6 f4 and g''(x)g(-x) = g''(-x)g(x).
WeierstrassRecovery weierstrass_from_fe(const FESolution& s);

}  // namespace gforge
