#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genus_forge/errors.hpp"
#include "genus_forge/rational.hpp"
#include "genus_forge/ring.hpp"
#include "genus_forge/serialize.hpp"
#include "genus_forge/series.hpp"

namespace gforge {

/// Finite graded ring (even degrees only, counted in complex degree) with a
/// multiplication table over Q, a top-degree integral and optionally c(T).
/// Built once by the constructors below, then shared read-only.
class VarietyModel {
 public:
  struct BasisElement {
    std::string name;
    int degree = 0;
  };
  using Entry = std::vector<std::pair<int, Rational>>;

  VarietyModel(std::string name, int dim, std::vector<BasisElement> basis);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const BasisElement& basis(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  const Entry& product(int i, int j) const { return table_[static_cast<std::size_t>(i * size() + j)]; }
  const Rational& integral(int i) const { return integral_[static_cast<std::size_t>(i)]; }
  int unit_index() const { return unit_; }

  bool has_tangent() const { return tangent_.has_value(); }
  /// Coordinates of c(T); throws Unsupported when the model has none.
  const std::vector<Rational>& tangent_chern() const;
  const std::vector<Rational>& generator(const std::string& name) const;
  const std::vector<std::string>& generator_names() const { return generator_names_; }

  void set_product(int i, int j, Entry e);
  void set_integral(int i, Rational q) { integral_[static_cast<std::size_t>(i)] = std::move(q); }
  void set_tangent(std::vector<Rational> c) { tangent_ = std::move(c); }
  void add_generator(std::string name, std::vector<Rational> coords);

  /// {"name","dim","basis":[{"name","degree"}],"products":[[i,j,[[k,"p/q"]...]]],
  ///  "integrals":[...], "chern":[...] or null}
  Json to_json() const;

 private:
  std::string name_;
  int dim_;
  int unit_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<Entry> table_;
  std::vector<Rational> integral_;
  std::optional<std::vector<Rational>> tangent_;
  std::vector<std::string> generator_names_;
  std::vector<std::vector<Rational>> generators_;
};

using ModelPtr = std::shared_ptr<const VarietyModel>;

/// Element of a model's ring with coefficients in R.
template <CoefficientRing R>
class Class {
 public:
  Class() = default;
  Class(ModelPtr m, std::vector<R> c) : m_(std::move(m)), c_(std::move(c)) {
    if (!m_) fail(ErrorKind::InvalidArgument, "class without a model");
    if (static_cast<int>(c_.size()) != m_->size()) fail(ErrorKind::InvalidArgument, "class has the wrong number of coordinates");
  }
  static Class zero(const ModelPtr& m) { return Class(m, std::vector<R>(static_cast<std::size_t>(m->size()), RingTraits<R>::zero())); }
  static Class one(const ModelPtr& m) { return constant(m, RingTraits<R>::one()); }
  static Class constant(const ModelPtr& m, const R& c) {
    Class z = zero(m);
    z.c_[static_cast<std::size_t>(m->unit_index())] = c;
    return z;
  }
  static Class basis(const ModelPtr& m, int i) {
    Class z = zero(m);
    z.c_[static_cast<std::size_t>(i)] = RingTraits<R>::one();
    return z;
  }

  const ModelPtr& model() const { return m_; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(c_.size()); }

  const R& constant_term() const { return c_[static_cast<std::size_t>(m_->unit_index())]; }
  bool is_zero() const {
    for (const auto& x : c_)
      if (!RingTraits<R>::is_zero(x)) return false;
    return true;
  }
  Class degree_part(int d) const {
    Class r = zero(m_);
    for (int i = 0; i < size(); ++i)
      if (m_->basis(i).degree == d) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)];
    return r;
  }
  /// Lowest degree carrying a nonzero coordinate; dim+1 for zero.
  int valuation() const {
    int v = m_->dim() + 1;
    for (int i = 0; i < size(); ++i)
      if (!RingTraits<R>::is_zero(c_[static_cast<std::size_t>(i)])) v = std::min(v, m_->basis(i).degree);
    return v;
  }
  /// Sum of the top-degree integral against every coordinate.
  R integrate() const {
    R acc = RingTraits<R>::zero();
    for (int i = 0; i < size(); ++i)
      if (!m_->integral(i).is_zero()) acc = acc + c_[static_cast<std::size_t>(i)] * m_->integral(i);
    return acc;
  }
  Class scaled(const R& s) const {
    Class r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  friend Class operator+(const Class& a, const Class& b) {
    a.same_model(b);
    Class r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend Class operator-(const Class& a) {
    Class r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Class operator-(const Class& a, const Class& b) { return a + (-b); }
  friend Class operator*(const Class& a, const Rational& q) {
    Class r = a;
    for (auto& x : r.c_) x = x * q;
    return r;
  }
  friend Class operator*(const Class& a, const Class& b) {
    a.same_model(b);
    Class r = zero(a.m_);
    const int n = a.size();
    for (int i = 0; i < n; ++i) {
      const R& ai = a.c_[static_cast<std::size_t>(i)];
      if (RingTraits<R>::is_zero(ai)) continue;
      for (int j = 0; j < n; ++j) {
        const R& bj = b.c_[static_cast<std::size_t>(j)];
        if (RingTraits<R>::is_zero(bj)) continue;
        const auto& entry = a.m_->product(i, j);
        if (entry.empty()) continue;
        const R ab = ai * bj;
        for (const auto& [k, w] : entry) r.c_[static_cast<std::size_t>(k)] = r.c_[static_cast<std::size_t>(k)] + ab * w;
      }
    }
    return r;
  }
  Class& operator+=(const Class& o) { return *this = *this + o; }
  Class& operator-=(const Class& o) { return *this = *this - o; }
  Class& operator*=(const Class& o) { return *this = *this * o; }
  friend bool operator==(const Class& a, const Class& b) { return a.m_ == b.m_ && (a - b).is_zero(); }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
      if (RingTraits<R>::is_zero(c_[static_cast<std::size_t>(i)])) continue;
      if (!out.empty()) out += " + ";
      out += coefficient_text(c_[static_cast<std::size_t>(i)]) + "*[" + m_->basis(i).name + "]";
    }
    return out.empty() ? "0/1" : out;
  }

 private:
  void same_model(const Class& o) const {
    if (m_ != o.m_) fail(ErrorKind::InvalidArgument, "classes live on different models");
  }
  ModelPtr m_;
  std::vector<R> c_;
};

using RClass = Class<Rational>;

RClass unit_class(const ModelPtr& m);
RClass generator(const ModelPtr& m, const std::string& name);
/// c(T) as a class; throws Unsupported when the model carries no tangent data.
RClass tangent_chern(const ModelPtr& m);
/// Point class (top degree, integral 1).
RClass point_class(const ModelPtr& m);

template <CoefficientRing R>
Class<R> lift(const RClass& a) {
  std::vector<R> c;
  for (const auto& x : a.coeffs()) c.push_back(RingTraits<R>::from_rational(x));
  return Class<R>(a.model(), std::move(c));
}

/// sum_k s_k x^k; x must have no degree-0 part unless s is a polynomial.
template <CoefficientRing R>
Class<R> evaluate(const Series<R>& s, const Class<R>& x) {
  const ModelPtr& m = x.model();
  const bool nilpotent = x.valuation() >= 1;
  if (!nilpotent && !s.is_exact()) fail(ErrorKind::Domain, "series evaluated on a class with a constant part");
  const int top = nilpotent ? m->dim() / std::max(1, x.valuation()) : s.degree();
  if (s.order() < top) {
    bool needed = false;
    for (int k = s.order() + 1; k <= top && !needed; ++k) {
      Class<R> p = Class<R>::one(m);
      for (int i = 0; i < k; ++i) p = p * x;
      needed = !p.is_zero();
    }
    if (needed) fail(ErrorKind::Precision, "series truncated below the model dimension");
  }
  Class<R> acc = Class<R>::zero(m);
  for (int k = std::min(top, std::max(s.degree(), 0)); k >= 0; --k) {
    acc = acc * x + Class<R>::constant(m, s[k]);
  }
  return acc;
}

/// 1/c for a class with a unit constant term.
template <CoefficientRing R>
Class<R> inverse(const Class<R>& c) {
  const ModelPtr& m = c.model();
  const R& c0 = c.constant_term();
  if (!RingTraits<R>::is_unit(c0)) fail(ErrorKind::Domain, "class is not invertible");
  const R inv0 = RingTraits<R>::inverse(c0);
  const Class<R> n = c.scaled(inv0) - Class<R>::one(m);
  Class<R> acc = Class<R>::one(m), term = Class<R>::one(m);
  for (int k = 1; k <= m->dim(); ++k) {
    term = -(term * n);
    acc += term;
  }
  return acc.scaled(inv0);
}

/// Chern classes c_0..c_dim of a total chern class.
std::vector<RClass> chern_components(const RClass& c);
/// Newton power sums p_1..p_dim of the chern roots.
std::vector<RClass> power_sums(const RClass& c);
/// c(V tensor L) for a bundle of the given rank with total chern class c and
/// a line class L: sum_i c_i(V) (1 + L)^(rank - i).
RClass twist_chern(const RClass& c, int rank, const RClass& line);
/// s(N) with s(N)c(N) = 1.
RClass segre(const RClass& c);

// ------------------------------------------------------------ constructors

ModelPtr projective_space(int n);
ModelPtr product(const ModelPtr& x, const ModelPtr& y);

/// Z -> X of codimension r with i^*, i_*, c(N) and optional ambient bundle Q.
struct Embedding {
  ModelPtr X, Z;
  int codim = 0;
  std::vector<RClass> pullback;     // indexed by X basis
  std::vector<RClass> pushforward;  // indexed by Z basis
  RClass normal_chern;              // c(N) on Z
  std::vector<RClass> normal_roots; // split roots of N (size codim), if known
  std::optional<RClass> ambient_chern;  // c(Q) on X with N = i^*Q
  int ambient_rank = 0;

  RClass pull(const RClass& a) const;
  RClass push(const RClass& b) const;
  template <CoefficientRing R>
  Class<R> pull(const Class<R>& a) const {
    Class<R> out = Class<R>::zero(Z);
    for (int i = 0; i < a.size(); ++i)
      if (!RingTraits<R>::is_zero(a[i])) out += lift<R>(pullback[static_cast<std::size_t>(i)]).scaled(a[i]);
    return out;
  }
  template <CoefficientRing R>
  Class<R> push(const Class<R>& b) const {
    Class<R> out = Class<R>::zero(X);
    for (int i = 0; i < b.size(); ++i)
      if (!RingTraits<R>::is_zero(b[i])) out += lift<R>(pushforward[static_cast<std::size_t>(i)]).scaled(b[i]);
    return out;
  }
};

/// A point of X; N and Q are trivial of rank dim X.
Embedding point_in(const ModelPtr& x);
/// P^m linearly embedded in P^n; N = Q|_Z with Q = O(1)^(n-m).
Embedding linear_subspace(int n, int m);

struct ProjectiveBundle {
  ModelPtr Z, model;
  RClass divisor;            // on Z
  std::vector<long> twists;  // V = sum O(d_i * divisor)
  RClass xi;                 // c1(O(1)) on P(V)
  RClass pull(const RClass& a) const;
};

/// P_Z(V) of lines in V, V split into line bundles O(d_i * divisor).
ProjectiveBundle projective_bundle(const ModelPtr& z, const RClass& divisor, std::vector<long> twists);
/// Zero section of P_Z(N + 1); one twist equal to 0 is taken as the trivial
/// summand, the others form N.
Embedding zero_section(const ProjectiveBundle& b);

struct Blowup {
  Embedding center;
  ModelPtr Y;
  RClass E;                          // exceptional divisor
  std::vector<RClass> phi_star_basis;  // indexed by X basis

  RClass phi_star(const RClass& a) const;
  template <CoefficientRing R>
  Class<R> phi_star(const Class<R>& a) const {
    Class<R> out = Class<R>::zero(Y);
    for (int i = 0; i < a.size(); ++i)
      if (!RingTraits<R>::is_zero(a[i])) out += lift<R>(phi_star_basis[static_cast<std::size_t>(i)]).scaled(a[i]);
    return out;
  }
  /// Y-basis index of j_*(z_b xi^k), k <= r-2.
  int exceptional_index(int z_basis, int k) const;
};

/// Blow-up along the center. c(T_Y) is set when X has c(T) and the embedding
/// carries an ambient bundle Q.
Blowup blow_up(const Embedding& e);

/// Z-class of the pushforward of e^m from E = P(N) to Z, with e = E|_E = -xi:
/// zero for m <= r-2, else (-1)^m s_(m-r+1)(N).
RClass exceptional_pushforward(const Embedding& e, int m);

/// A center of X disjoint from the earlier blow-up's center, seen in Y.
Embedding disjoint_center(const Blowup& b, const Embedding& in_x);

/// Catalog names: "Pn", "PmxPn", "bl-pt-P2", "bl-pt-P3", "bl-line-P3",
/// "proj-bundle(Z;d1,..,dm)", "bl-zero-section(Z;d1,..,dr)" with Z a catalog
/// name and twists of its generator "h".
ModelPtr catalog_model(const std::string& name);

}  // namespace gforge
