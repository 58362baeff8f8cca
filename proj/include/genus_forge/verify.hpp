#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genus_forge/funeq.hpp"
#include "genus_forge/genus.hpp"
#include "genus_forge/model.hpp"
#include "genus_forge/report.hpp"
#include "genus_forge/weierstrass.hpp"

namespace gforge {

// ------------------------------------------------------------ residues

/// Res_{t=0} A(t)/(f(t) prod_i f(n_i - t)) as a symmetric polynomial in
/// n_1..n_r, stored by nondecreasing exponent tuple; 1/(n - t) is expanded
/// as -sum_j n^j/t^(j+1).
template <CoefficientRing R>
struct NilpotentResidue {
  int r = 0;
  int degree = 0;
  std::map<std::vector<int>, R> coeff;

  /// First nonzero coefficient (smallest total degree, then lexicographic).
  std::optional<std::vector<int>> first_nonzero() const {
    std::optional<std::vector<int>> best;
    int best_deg = 0;
    for (const auto& [a, c] : coeff) {
      if (RingTraits<R>::is_zero(c)) continue;
      int d = 0;
      for (int x : a) d += x;
      if (!best || d < best_deg) {
        best = a;
        best_deg = d;
      }
    }
    return best;
  }
  int min_coefficient_precision() const {
    int w = kExact;
    for (const auto& [a, c] : coeff) w = std::min(w, coefficient_precision(c));
    return w;
  }
};

inline std::string tuple_monomial(const std::vector<int>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "n" + std::to_string(i + 1) + (a[i] == 1 ? "" : "^" + std::to_string(a[i]));
  }
  return s.empty() ? "1" : s;
}

template <CoefficientRing R>
NilpotentResidue<R> nilpotent_residue(const Series<R>& f, const Series<R>& A, int r, int degree) {
  if (r < 1) fail(ErrorKind::InvalidArgument, "residue needs r >= 1");
  if (degree < 0) fail(ErrorKind::InvalidArgument, "residue degree must be >= 0");
  using L = Laurent<R>;
  const auto parts = reciprocal_shifted_parts(f, degree);
  const L base = L::from_series(A) * L::from_series(f).inverse();
  NilpotentResidue<R> out;
  out.r = r;
  out.degree = degree;
  std::vector<int> alpha;
  std::function<void(const L&, int, int)> rec = [&](const L& cur, int min_a, int left) {
    const int slots = r - static_cast<int>(alpha.size());
    if (slots == 0) {
      out.coeff[alpha] = residue(cur);
      return;
    }
    for (int a = min_a; a * slots <= left; ++a) {
      alpha.push_back(a);
      rec(cur * parts[static_cast<std::size_t>(a)], a, left - a);
      alpha.pop_back();
    }
  };
  rec(base, 0, degree);
  return out;
}

/// Passes iff every coefficient vanishes; truncated coefficient rings must be
/// known through exponent 0.
template <CoefficientRing R>
VerificationReport residue_zero_report(const std::string& name, const NilpotentResidue<R>& res) {
  const int window = res.min_coefficient_precision();
  if (window < 0) return error_report(name, "insufficient coefficient precision (window ends at " + std::to_string(window) + ")");
  const auto nz = res.first_nonzero();
  VerificationReport rep = nz ? make_report(name, false, RingTraits<R>::to_string(res.coeff.at(*nz)), "0/1", tuple_monomial(*nz))
                              : make_report(name, true, "0/1", "0/1");
  rep.details.push_back(std::to_string(res.coeff.size()) + " symmetric coefficients through degree " +
                        std::to_string(res.degree) + " in " + std::to_string(res.r) + " roots");
  if (window < kExact) rep.details.push_back("coefficients verified through z^" + std::to_string(window));
  return rep;
}

/// sum over tuples of c_alpha * (monomial symmetrised over distinct permutations)
/// evaluated at the given root classes.
template <CoefficientRing R>
Class<R> residue_on_roots(const NilpotentResidue<R>& res, const std::vector<RClass>& roots) {
  if (static_cast<int>(roots.size()) != res.r) fail(ErrorKind::InvalidArgument, "number of roots differs from r");
  const ModelPtr& m = roots.front().model();
  Class<R> acc = Class<R>::zero(m);
  for (const auto& [alpha, c] : res.coeff) {
    if (RingTraits<R>::is_zero(c)) continue;
    std::vector<int> perm = alpha;
    RClass mono_sum = RClass::zero(m);
    do {
      RClass mono = RClass::one(m);
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (int k = 0; k < perm[i]; ++k) mono = mono * roots[i];
      mono_sum += mono;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!mono_sum.is_zero()) acc += lift<R>(mono_sum).scaled(c);
  }
  return acc;
}

/// Nilpotent-convention residue against the sum of residues at 0 and at the
/// n_j, with all denominators cleared by prod n_i prod_(i<j)(n_i - n_j).
/// f and A are polynomial-coefficient series; n_i become Poly variables.
VerificationReport total_residue_identity(const Series<Poly>& f, const Series<Poly>& A, int r, int degree);

/// S1 residue vanishing for the sigma-form elliptic genus and A(t, r).
VerificationReport residue_vanishing_S1(const EllipticParams& p, int r, int degree);
/// f = x + x^5 with A from FE': must leave a nonzero residue.
VerificationReport residue_negative_control(int r, int degree);

// ------------------------------------------------------------ blow-up formula

template <CoefficientRing R>
struct BlowupFormulaResult {
  R lhs, main, residue_term, oracle;
  VerificationReport report;
};

/// R(t) = Q(t) prod Q(n_i - t) A(t) up to t^K with coefficients in the ring of Z.
template <CoefficientRing R>
std::vector<Class<R>> jacobian_product(const Series<R>& Q, const Series<R>& A, const std::vector<RClass>& roots, int K) {
  const ModelPtr& m = roots.front().model();
  using C = Class<R>;
  auto mul = [&](const std::vector<C>& a, const std::vector<C>& b) {
    std::vector<C> out(static_cast<std::size_t>(K) + 1, C::zero(m));
    for (int i = 0; i <= K; ++i)
      for (int j = 0; i + j <= K; ++j) out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return out;
  };
  auto constant_series = [&](const Series<R>& s) {
    std::vector<C> out;
    for (int k = 0; k <= K; ++k) out.push_back(C::constant(m, s[k]));
    return out;
  };
  std::vector<C> acc = mul(constant_series(Q), constant_series(A));
  for (const auto& n : roots) {
    // Q(n - t) = sum_k (-t)^k Q^(k)(n)/k!
    std::vector<C> shifted;
    Series<R> d = Q.truncated(K + m->dim());
    for (int k = 0; k <= K; ++k) {
      C v = evaluate(d, lift<R>(n)) * (factorial(k).inverse() * Rational(k % 2 == 0 ? 1 : -1));
      shifted.push_back(v);
      d = d.derivative();
    }
    acc = mul(acc, shifted);
  }
  return acc;
}

/// int_(phi^*D) A(E) K_Q(c(T_Y)) against A(0) int_D K_Q(c(T_X)) plus the signed
/// residue term over Z.D. The residue term is also recomputed by pushing
/// R_1(e) from E to Z with the Segre-class formula.
template <CoefficientRing R>
BlowupFormulaResult<R> verify_blowup_formula(const std::string& name, const Genus<R>& G, const Embedding& e,
                                             const Series<R>& A, const RClass& D) {
  if (e.normal_roots.size() != static_cast<std::size_t>(e.codim))
    fail(ErrorKind::Unsupported, "blow-up formula: the normal bundle has no root presentation");
  const Blowup bl = blow_up(e);
  const ModelPtr& X = e.X;
  const ModelPtr& Y = bl.Y;
  const ModelPtr& Z = e.Z;
  const int n = X->dim();
  if (!Y->has_tangent()) fail(ErrorKind::Unsupported, "blow-up formula: no tangent data on the blow-up");
  BlowupFormulaResult<R> out;
  const Series<R> An = A.is_exact() ? A : A.truncated(n);
  out.lhs = (lift<R>(bl.phi_star(D)) * evaluate(An, lift<R>(bl.E)) * tangent_genus_class(G, Y)).integrate();
  out.main = (lift<R>(D) * tangent_genus_class(G, X)).integrate() * A[0];

  const RClass zd = e.pull(D);
  const Class<R> kz = tangent_genus_class(G, Z);
  const auto res = nilpotent_residue(G.f, A, e.codim, Z->dim());
  // the raw residue enters with a minus sign (calibrated on the Euler genus of Bl_pt P2)
  out.residue_term = -(lift<R>(zd) * residue_on_roots(res, e.normal_roots) * kz).integrate();

  const int K = e.codim + Z->dim();
  const auto Rt = jacobian_product(G.Q, A, e.normal_roots, K);
  Class<R> pushed = Class<R>::zero(Z);
  for (int k = 1; k <= K; ++k) pushed += Rt[static_cast<std::size_t>(k)] * lift<R>(exceptional_pushforward(e, k - 1));
  out.oracle = (lift<R>(zd) * pushed * kz).integrate();

  const R rhs = out.main + out.residue_term;
  const std::string rhs_text = RingTraits<R>::to_string(out.main) + " + " + RingTraits<R>::to_string(out.residue_term);
  std::vector<VerificationReport> parts;
  parts.push_back(make_report(name + ":identity", RingTraits<R>::is_zero(out.lhs - rhs), RingTraits<R>::to_string(out.lhs),
                              rhs_text, "integral over the blow-up"));
  parts.push_back(make_report(name + ":fiber-oracle", RingTraits<R>::is_zero(out.residue_term - out.oracle),
                              RingTraits<R>::to_string(out.residue_term), RingTraits<R>::to_string(out.oracle),
                              "residue term vs Segre pushforward"));
  out.report = combine(name, parts);
  if (out.report.passed()) {
    out.report.lhs = RingTraits<R>::to_string(out.lhs);
    out.report.rhs = rhs_text;
  }
  out.report.details.push_back("raw residue term " + RingTraits<R>::to_string(-out.residue_term) + ", fiber oracle " +
                               RingTraits<R>::to_string(out.oracle));
  return out;
}

/// phi(X) - phi(Bl_Z X) = phi(P_Z(N+1)) - phi(Bl_Z P_Z(N+1)) with N split as
/// O(d_i * divisor) on Z.
template <CoefficientRing R>
VerificationReport verify_blowup_difference(const std::string& name, const Genus<R>& G, const Embedding& e,
                                            const RClass& divisor, const std::vector<long>& twists) {
  if (static_cast<int>(twists.size()) != e.codim) fail(ErrorKind::InvalidArgument, "one twist per normal direction");
  std::vector<long> v = twists;
  v.push_back(0);
  const ProjectiveBundle pb = projective_bundle(e.Z, divisor, v);
  const Embedding zs = zero_section(pb);
  if (!(zs.normal_chern == e.normal_chern)) fail(ErrorKind::InvalidArgument, "twists do not reproduce c(N)");
  const R lhs = genus_eval(G, e.X) - genus_eval(G, blow_up(e).Y);
  const R rhs = genus_eval(G, pb.model) - genus_eval(G, blow_up(zs).Y);
  return make_report(name, RingTraits<R>::is_zero(lhs - rhs), RingTraits<R>::to_string(lhs), RingTraits<R>::to_string(rhs),
                     "genus difference");
}

// ------------------------------------------------------------ change of variables

struct Divisor {
  RClass E;
  Rational e;  // discrepancy
};

/// A(t, r) for rational r.
template <CoefficientRing R>
using JacobianFamily = std::function<Series<R>(const Rational&)>;

/// int_D prod A(E_i, e_i + 1) K_Q(c(T_Y)).
template <CoefficientRing R>
R weighted_genus(const Genus<R>& G, const JacobianFamily<R>& A, const ModelPtr& Y, const std::vector<Divisor>& divs,
                 const RClass& D) {
  Class<R> acc = tangent_genus_class(G, Y) * lift<R>(D);
  std::map<Rational, Series<R>> cache;
  for (const auto& d : divs) {
    if (d.E.model() != Y) fail(ErrorKind::InvalidArgument, "divisor lives on another model");
    const Rational r = d.e + Rational(1);
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, A(r)).first;
    const Series<R>& s = it->second;
    if (s.order() < Y->dim() && !s.is_exact()) fail(ErrorKind::Precision, "A(t, r) truncated below the dimension");
    acc = acc * evaluate(s.is_exact() ? s : s.truncated(Y->dim()), lift<R>(d.E));
  }
  return acc.integrate();
}

struct ResolutionData {
  ModelPtr Y;
  std::vector<Divisor> divisors;
};

/// Log-terminal value int_Y prod A(E_i, e_i + 1) K_Q(c(T_Y)); rejects e_i <= -1.
template <CoefficientRing R>
R singular_genus(const Genus<R>& G, const JacobianFamily<R>& A, const ResolutionData& res) {
  for (const auto& d : res.divisors)
    if (d.e <= Rational(-1)) fail(ErrorKind::Domain, "not log-terminal: discrepancy " + d.e.to_string() + " <= -1");
  return weighted_genus(G, A, res.Y, res.divisors, RClass::one(res.Y));
}

/// One blow-up in a tower: the center in the current model (built from the
/// previous blow-up when there is one) and the multiplicity of every current
/// divisor along it.
struct TowerStep {
  std::function<Embedding(const std::optional<Blowup>& previous)> center;
  std::vector<long> multiplicities;
};

struct TowerStage {
  ModelPtr Y;
  std::vector<Divisor> divisors;
  RClass D;
};

/// Applies the steps: strict transforms phi^*E_i - m_i E_0 and the new E_0 with
/// e_0 = sum e_i m_i + (r - 1).
std::vector<TowerStage> build_tower(const ModelPtr& X, const std::vector<Divisor>& divisors, const RClass& D,
                                    const std::vector<TowerStep>& steps);

/// Every stage of the tower must give the same weighted genus.
template <CoefficientRing R>
VerificationReport verify_tower(const std::string& name, const Genus<R>& G, const JacobianFamily<R>& A,
                                const std::vector<TowerStage>& stages) {
  std::vector<R> values;
  for (const auto& s : stages) values.push_back(weighted_genus(G, A, s.Y, s.divisors, s.D));
  std::vector<VerificationReport> parts;
  for (std::size_t i = 1; i < values.size(); ++i)
    parts.push_back(make_report(name + ":stage" + std::to_string(i), RingTraits<R>::is_zero(values[0] - values[i]),
                                RingTraits<R>::to_string(values[0]), RingTraits<R>::to_string(values[i]),
                                "stage " + std::to_string(i)));
  VerificationReport rep = combine(name, parts);
  if (rep.passed()) {
    rep.lhs = RingTraits<R>::to_string(values.front());
    rep.rhs = RingTraits<R>::to_string(values.back());
  }
  for (std::size_t i = 0; i < stages.size(); ++i) {
    std::string ds;
    for (const auto& d : stages[i].divisors) ds += (ds.empty() ? "" : ",") + d.e.to_string();
    rep.details.push_back("stage " + std::to_string(i) + " discrepancies [" + ds + "]");
  }
  return rep;
}

// ------------------------------------------------------------ named instances

/// sigma-form genus and its A(t, r) family.
struct EllipticFamily {
  EllipticParams params;
  Genus<ZRing> genus;
  JacobianFamily<ZRing> A;
};
EllipticFamily elliptic_family(int order, int z_order = 0);

/// Bl_pt(P2), E' = line through the point (multiplicity 1) with discrepancy e1.
std::vector<TowerStage> transition_bl_pt_p2_line(const Rational& e1);
/// P3 blown up at a point, then along a line missing the point.
std::vector<TowerStage> tower_pt_line_p3();
/// P2 (no divisors) against Bl_pt(P2) with E0, e0 = 1.
std::vector<TowerStage> resolutions_p2();
/// F3 with its (-3)-section, e = -1/3, against the blow-up of a point on it.
std::vector<TowerStage> resolutions_f3();

/// chi(P^n, O(l)(x)Omega^p) = chi(P^n, O(l-1)(x)Omega^p) + chi(P^(n-1), O(l)(x)Omega^p)
///   + chi(P^(n-1), O(l-1)(x)Omega^(p-1)) for -lmax <= l <= lmax, 0 <= p <= min(pmax, n).
VerificationReport verify_hodge_recursion(int n, int lmax, int pmax);

}  // namespace gforge
