#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genus_forge/errors.hpp"
#include "genus_forge/rational.hpp"
#include "genus_forge/ring.hpp"

namespace gforge {

/// Order value meaning "known exactly" (a polynomial, no truncation).
inline constexpr int kExact = 1 << 28;

inline int order_sum(int a, int b) {
  const long s = static_cast<long>(a) + b;
  return s >= kExact ? kExact : static_cast<int>(s);
}

template <CoefficientRing R>
const R& ring_zero() {
  static const R z = RingTraits<R>::zero();
  return z;
}

// ===================================================================== Series

/// Truncated univariate power series. Coefficients of x^0..x^order are known;
/// stored entries stop at the last nonzero one.
template <CoefficientRing R>
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<R> coeffs, int order = kExact) : c_(std::move(coeffs)), order_(order) {
    if (order_ < -1) order_ = -1;
    normalize();
  }
  static Series constant(const R& c, int order = kExact) { return Series({c}, order); }
  static Series variable(int order = kExact) {
    return Series({RingTraits<R>::zero(), RingTraits<R>::one()}, order);
  }
  static Series monomial(const R& c, int k, int order = kExact) {
    std::vector<R> v(static_cast<std::size_t>(k) + 1, RingTraits<R>::zero());
    v.back() = c;
    return Series(std::move(v), order);
  }
  static Series zero(int order) { return Series({}, order); }

  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  const std::vector<R>& coeffs() const { return c_; }
  /// Highest stored exponent, -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const R& operator[](int i) const {
    if (i > order_) fail(ErrorKind::Precision, "coefficient x^" + std::to_string(i) + " beyond truncation order " + std::to_string(order_));
    if (i < 0 || i >= static_cast<int>(c_.size())) return ring_zero<R>();
    return c_[static_cast<std::size_t>(i)];
  }
  R coeff(int i) const { return (*this)[i]; }

  /// First index with a nonzero coefficient; order()+1 when all known ones vanish.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!RingTraits<R>::is_zero(c_[i])) return static_cast<int>(i);
    return order_sum(order_, 1);
  }
  bool is_zero() const { return valuation() > order_ || c_.empty(); }

  Series truncated(int order) const {
    Series s = *this;
    s.order_ = std::min(order_, order);
    s.normalize();
    return s;
  }
  Series derivative() const {
    std::vector<R> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Series(std::move(v), is_exact() ? kExact : order_ - 1);
  }
  /// Antiderivative with zero constant term.
  Series integral() const {
    std::vector<R> v{RingTraits<R>::zero()};
    for (std::size_t i = 0; i < c_.size(); ++i)
      v.push_back(c_[i] * Rational(1, static_cast<long>(i) + 1));
    return Series(std::move(v), order_sum(order_, 1));
  }
  /// f(c*x) for a rational scale c.
  Series scaled_argument(const Rational& c) const {
    std::vector<R> v = c_;
    Rational p(1);
    for (auto& x : v) {
      x = x * p;
      p *= c;
    }
    return Series(std::move(v), order_);
  }
  /// Multiply by x^k (k >= 0).
  Series shifted(int k) const {
    std::vector<R> v(static_cast<std::size_t>(k), RingTraits<R>::zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return Series(std::move(v), order_sum(order_, k));
  }
  /// Divide by x^k; requires the first k coefficients to vanish.
  Series unshifted(int k) const {
    for (int i = 0; i < k && i < static_cast<int>(c_.size()); ++i)
      if (!RingTraits<R>::is_zero(c_[static_cast<std::size_t>(i)]))
        fail(ErrorKind::Domain, "series does not vanish to order " + std::to_string(k));
    std::vector<R> v;
    for (std::size_t i = static_cast<std::size_t>(k); i < c_.size(); ++i) v.push_back(c_[i]);
    return Series(std::move(v), is_exact() ? kExact : order_ - k);
  }
  template <class F>
  auto map(F&& fn) const -> Series<decltype(fn(std::declval<const R&>()))> {
    using S = decltype(fn(std::declval<const R&>()));
    std::vector<S> v;
    for (const auto& x : c_) v.push_back(fn(x));
    return Series<S>(std::move(v), order_);
  }

  Series& operator+=(const Series& o) {
    order_ = std::min(order_, o.order_);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), RingTraits<R>::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    normalize();
    return *this;
  }
  Series& operator-=(const Series& o) { return *this += -o; }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(const Series& a) {
    Series r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Series operator*(const Series& a, const Rational& q) {
    Series r = a;
    for (auto& x : r.c_) x = x * q;
    r.normalize();
    return r;
  }
  friend Series operator*(const Series& a, const R& c) requires(!std::is_same_v<R, Rational>) {
    Series r = a;
    for (auto& x : r.c_) x = x * c;
    r.normalize();
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    const int order = std::min(order_sum(a.order_, b.low()), order_sum(b.order_, a.low()));
    if (a.c_.empty() || b.c_.empty()) return Series({}, order);
    const long top = std::min<long>(order, static_cast<long>(a.c_.size() + b.c_.size()) - 2);
    std::vector<R> v(static_cast<std::size_t>(std::max<long>(top + 1, 0)), RingTraits<R>::zero());
    for (std::size_t i = 0; i < a.c_.size() && static_cast<long>(i) <= top; ++i) {
      if (RingTraits<R>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size() && static_cast<long>(i + j) <= top; ++j)
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Series(std::move(v), order);
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  /// Equality on the common known window.
  friend bool operator==(const Series& a, const Series& b) { return (a - b).is_zero(); }

  std::string to_string(const std::string& var = "x") const;

 private:
  int low() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!RingTraits<R>::is_zero(c_[i])) return static_cast<int>(i);
    return order_sum(order_, 1);
  }
  void normalize() {
    if (!is_exact() && static_cast<int>(c_.size()) > order_ + 1)
      c_.resize(static_cast<std::size_t>(order_ + 1));
    while (!c_.empty() && RingTraits<R>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
  int order_ = kExact;
};

template <CoefficientRing R>
std::string coefficient_text(const R& c) {
  std::string s = RingTraits<R>::to_string(c);
  if (s.find(' ') != std::string::npos) s = "(" + s + ")";
  return s;
}

template <CoefficientRing R>
std::string Series<R>::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (RingTraits<R>::is_zero(c_[i])) continue;
    if (!out.empty()) out += " + ";
    out += coefficient_text(c_[i]);
    if (i == 1) out += "*" + var;
    if (i > 1) out += "*" + var + "^" + std::to_string(i);
  }
  if (out.empty()) out = "0/1";
  if (!is_exact()) out += " + O(" + var + "^" + std::to_string(order_ + 1) + ")";
  return out;
}

/// 1/s; the constant term must be a unit.
template <CoefficientRing R>
Series<R> invert_unit(const Series<R>& s, std::optional<int> order = std::nullopt) {
  const int n = order ? std::min(*order, s.order()) : s.order();
  if (n < 0) return Series<R>::zero(n);
  const R& c0 = s[0];
  if (!RingTraits<R>::is_unit(c0)) fail(ErrorKind::Domain, "not invertible: constant term is not a unit");
  if (n >= kExact) {
    if (s.degree() <= 0) return Series<R>::constant(RingTraits<R>::inverse(c0));
    fail(ErrorKind::Precision, "not invertible: exact non-constant series needs a truncation order");
  }
  const R inv0 = RingTraits<R>::inverse(c0);
  std::vector<R> v{inv0};
  for (int k = 1; k <= n; ++k) {
    R acc = RingTraits<R>::zero();
    for (int j = 1; j <= k && j <= s.degree(); ++j) acc = acc + s[j] * v[static_cast<std::size_t>(k - j)];
    v.push_back(-(acc * inv0));
  }
  return Series<R>(std::move(v), n);
}

/// outer(inner(x)); inner must have zero constant term.
template <CoefficientRing R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner, std::optional<int> order = std::nullopt) {
  if (inner.order() >= 0 && !RingTraits<R>::is_zero(inner[0]))
    fail(ErrorKind::Domain, "compose: inner series has a nonzero constant term");
  const int v = std::max(1, inner.valuation());
  int n = std::min(outer.is_exact() ? kExact : order_sum(v * (outer.order() + 1), -1), inner.order());
  if (order) n = std::min(n, *order);
  if (n >= kExact && inner.is_exact() && outer.is_exact()) {
    // exact polynomial composition
    Series<R> result, power = Series<R>::constant(RingTraits<R>::one());
    for (int k = 0; k <= outer.degree(); ++k) {
      if (k > 0) power = power * inner;
      result += power * outer[k];
    }
    return result;
  }
  if (n >= kExact) fail(ErrorKind::Precision, "compose: exact inputs need an explicit order");
  const Series<R> in = inner.truncated(n);
  Series<R> result = Series<R>::zero(n);
  Series<R> power = Series<R>::constant(RingTraits<R>::one(), n);
  for (int k = 0; k <= outer.degree() && k * v <= n; ++k) {
    if (k > 0) power = power * in;
    if (!RingTraits<R>::is_zero(outer[k])) result += power * outer[k];
  }
  return result.truncated(n);
}

/// Compositional inverse g with f(g(y)) = y.
template <CoefficientRing R>
Series<R> reversion(const Series<R>& f, std::optional<int> order = std::nullopt) {
  const int n = order ? std::min(*order, f.order()) : f.order();
  if (n >= kExact) fail(ErrorKind::Precision, "reversion needs a finite order");
  if (!RingTraits<R>::is_zero(f[0])) fail(ErrorKind::Domain, "reversion: f(0) must vanish");
  if (n < 1 || !RingTraits<R>::is_unit(f[1])) fail(ErrorKind::Domain, "reversion: f'(0) is not a unit");
  const R inv1 = RingTraits<R>::inverse(f[1]);
  const Series<R> ft = f.truncated(n);
  std::vector<R> g{RingTraits<R>::zero(), inv1};
  for (int k = 2; k <= n; ++k) {
    const Series<R> gk(g, k);
    const R ck = compose(ft, gk, k)[k];
    g.push_back(-(ck * inv1));
  }
  return Series<R>(std::move(g), n);
}

/// exp(s) for s(0) = 0.
template <CoefficientRing R>
Series<R> exp_series(const Series<R>& s, std::optional<int> order = std::nullopt) {
  const int n = order ? std::min(*order, s.order()) : s.order();
  if (n >= kExact) fail(ErrorKind::Precision, "exp needs a finite order");
  if (n >= 0 && !RingTraits<R>::is_zero(s[0])) fail(ErrorKind::Domain, "exp: constant term must vanish");
  std::vector<R> e{RingTraits<R>::one()};
  for (int k = 1; k <= n; ++k) {
    R acc = RingTraits<R>::zero();
    for (int j = 1; j <= k && j <= s.degree(); ++j)
      if (!RingTraits<R>::is_zero(s[j])) acc = acc + s[j] * e[static_cast<std::size_t>(k - j)] * Rational(j);
    e.push_back(acc * Rational(1, k));
  }
  return Series<R>(std::move(e), n);
}

/// log(s) for s(0) = 1.
template <CoefficientRing R>
Series<R> log_series(const Series<R>& s, std::optional<int> order = std::nullopt) {
  const int n = order ? std::min(*order, s.order()) : s.order();
  if (n >= kExact) fail(ErrorKind::Precision, "log needs a finite order");
  if (n >= 0 && !RingTraits<R>::is_zero(s[0] - RingTraits<R>::one()))
    fail(ErrorKind::Domain, "log: constant term must be 1");
  std::vector<R> l{RingTraits<R>::zero()};
  for (int k = 1; k <= n; ++k) {
    R acc = s[k] * Rational(k);
    for (int j = 1; j < k; ++j)
      if (!RingTraits<R>::is_zero(l[static_cast<std::size_t>(j)]))
        acc = acc - l[static_cast<std::size_t>(j)] * s[k - j] * Rational(j);
    l.push_back(acc * Rational(1, k));
  }
  return Series<R>(std::move(l), n);
}

enum class ExpLogMode { Exp, Log };

template <CoefficientRing R>
Series<R> exp_log(const Series<R>& s, ExpLogMode mode, std::optional<int> order = std::nullopt) {
  return mode == ExpLogMode::Exp ? exp_series(s, order) : log_series(s, order);
}

template <CoefficientRing R>
struct RingTraits<Series<R>> {
  using S = Series<R>;
  static S zero() { return S(); }
  static S one() { return S::constant(RingTraits<R>::one()); }
  static S from_rational(const Rational& q) { return S::constant(RingTraits<R>::from_rational(q)); }
  static bool is_zero(const S& a) { return a.is_zero(); }
  static bool is_unit(const S& a) { return a.order() >= 0 && RingTraits<R>::is_unit(a[0]); }
  static S inverse(const S& a) { return invert_unit(a); }
  static std::string to_string(const S& a) { return a.to_string("q"); }
};

// ==================================================================== Laurent

/// Truncated Laurent series: coefficients for exponents valuation..order are
/// known (order may be kExact). Stored entries start at val_.
template <CoefficientRing R>
class Laurent {
 public:
  Laurent() = default;
  Laurent(int valuation, std::vector<R> coeffs, int order = kExact)
      : val_(valuation), c_(std::move(coeffs)), order_(order) {
    normalize();
  }
  static Laurent from_series(const Series<R>& s, int shift = 0) {
    return Laurent(shift, s.coeffs(), s.is_exact() ? kExact : s.order() + shift);
  }
  static Laurent monomial(const R& c, int k, int order = kExact) { return Laurent(k, {c}, order); }
  static Laurent constant(const R& c, int order = kExact) { return Laurent(0, {c}, order); }
  static Laurent zero(int order) { return Laurent(0, {}, order); }

  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  /// Exponent of the first stored coefficient (the true valuation after
  /// normalisation); order()+1 when every known coefficient vanishes.
  int valuation() const { return c_.empty() ? order_sum(order_, 1) : val_; }
  int top_stored() const { return val_ + static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& stored() const { return c_; }

  const R& operator[](int k) const {
    if (k > order_) fail(ErrorKind::Precision, "insufficient valuation window: exponent " + std::to_string(k) + " beyond order " + std::to_string(order_));
    if (c_.empty() || k < val_ || k > top_stored()) return ring_zero<R>();
    return c_[static_cast<std::size_t>(k - val_)];
  }
  R coeff(int k) const { return (*this)[k]; }

  Laurent truncated(int order) const {
    Laurent l = *this;
    l.order_ = std::min(order_, order);
    l.normalize();
    return l;
  }
  /// Power-series part; requires valuation >= 0.
  Series<R> to_series() const {
    if (!c_.empty() && val_ < 0) fail(ErrorKind::Domain, "Laurent series has a pole");
    std::vector<R> v;
    if (!c_.empty()) {
      v.assign(static_cast<std::size_t>(val_), RingTraits<R>::zero());
      v.insert(v.end(), c_.begin(), c_.end());
    }
    return Series<R>(std::move(v), order_);
  }
  Laurent derivative() const {
    std::vector<R> v;
    for (std::size_t i = 0; i < c_.size(); ++i)
      v.push_back(c_[i] * Rational(val_ + static_cast<long>(i)));
    return Laurent(val_ - 1, std::move(v), is_exact() ? kExact : order_ - 1);
  }
  /// Multiply by t^k.
  Laurent shifted(int k) const { return Laurent(val_ + k, c_, order_sum(order_, k)); }
  /// l(c*t) for a rational scale c != 0.
  Laurent scaled_argument(const Rational& c) const {
    std::vector<R> v = c_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] * power(c, val_ + static_cast<long>(i));
    return Laurent(val_, std::move(v), order_);
  }
  /// l(-t)
  Laurent negated_argument() const { return scaled_argument(Rational(-1)); }
  template <class F>
  auto map(F&& fn) const -> Laurent<decltype(fn(std::declval<const R&>()))> {
    using S = decltype(fn(std::declval<const R&>()));
    std::vector<S> v;
    for (const auto& x : c_) v.push_back(fn(x));
    return Laurent<S>(val_, std::move(v), order_);
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    const int order = std::min(a.order_, b.order_);
    if (a.c_.empty()) return b.truncated(order);
    if (b.c_.empty()) return a.truncated(order);
    const int lo = std::min(a.val_, b.val_);
    const int hi = std::min(order, std::max(a.top_stored(), b.top_stored()));
    if (hi < lo) return Laurent(0, {}, order);
    std::vector<R> v(static_cast<std::size_t>(hi - lo + 1), RingTraits<R>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const int k = a.val_ + static_cast<int>(i);
      if (k <= hi) v[static_cast<std::size_t>(k - lo)] = a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      const int k = b.val_ + static_cast<int>(i);
      if (k <= hi) v[static_cast<std::size_t>(k - lo)] = v[static_cast<std::size_t>(k - lo)] + b.c_[i];
    }
    return Laurent(lo, std::move(v), order);
  }
  friend Laurent operator-(const Laurent& a) {
    Laurent r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Rational& q) {
    Laurent r = a;
    for (auto& x : r.c_) x = x * q;
    r.normalize();
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if ((a.c_.empty() && a.is_exact()) || (b.c_.empty() && b.is_exact())) return Laurent();
    const int order = std::min(order_sum(a.order_, b.valuation()), order_sum(b.order_, a.valuation()));
    if (a.c_.empty() || b.c_.empty()) return Laurent(0, {}, order);
    const int lo = a.val_ + b.val_;
    const long hi = std::min<long>(order, static_cast<long>(a.top_stored()) + b.top_stored());
    if (hi < lo) return Laurent(0, {}, order);
    std::vector<R> v(static_cast<std::size_t>(hi - lo + 1), RingTraits<R>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (RingTraits<R>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size() && static_cast<long>(i + j) <= hi - lo; ++j)
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Laurent(lo, std::move(v), order);
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return (a - b).is_zero(); }

  /// 1/l with a unit leading coefficient; keeps the relative precision.
  Laurent inverse(std::optional<int> relative_precision = std::nullopt) const {
    if (c_.empty()) fail(ErrorKind::Domain, "not invertible: zero Laurent series");
    if (!RingTraits<R>::is_unit(c_[0])) fail(ErrorKind::Domain, "not invertible: leading coefficient is not a unit");
    if (is_exact() && c_.size() == 1 && !relative_precision)
      return Laurent(-val_, {RingTraits<R>::inverse(c_[0])}, kExact);
    int rel = is_exact() ? kExact : order_ - val_;
    if (relative_precision) rel = std::min(rel, *relative_precision);
    if (rel >= kExact) fail(ErrorKind::Precision, "not invertible: exact non-monomial Laurent series needs a precision");
    Series<R> unit(c_, rel);
    return from_series(invert_unit(unit), -val_);
  }

  std::string to_string(const std::string& var = "t") const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (RingTraits<R>::is_zero(c_[i])) continue;
      const int k = val_ + static_cast<int>(i);
      if (!out.empty()) out += " + ";
      out += coefficient_text(c_[i]);
      if (k != 0) out += "*" + var + (k == 1 ? std::string() : "^" + std::to_string(k));
    }
    if (out.empty()) out = "0/1";
    if (!is_exact()) out += " + O(" + var + "^" + std::to_string(order_ + 1) + ")";
    return out;
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && RingTraits<R>::is_zero(c_[lead])) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      val_ += static_cast<int>(lead);
    }
    if (!is_exact() && !c_.empty() && top_stored() > order_) {
      const long keep = static_cast<long>(order_) - val_ + 1;
      c_.resize(static_cast<std::size_t>(std::max<long>(keep, 0)));
    }
    while (!c_.empty() && RingTraits<R>::is_zero(c_.back())) c_.pop_back();
    if (c_.empty()) val_ = 0;
  }

  int val_ = 0;
  std::vector<R> c_;
  int order_ = kExact;
};

/// Coefficient of t^{-1}.
template <CoefficientRing R>
R residue(const Laurent<R>& l) {
  if (l.order() < -1) fail(ErrorKind::Precision, "insufficient valuation window: residue needs exponent -1 (order " + std::to_string(l.order()) + ")");
  return l[-1];
}

template <CoefficientRing R>
struct RingTraits<Laurent<R>> {
  using L = Laurent<R>;
  static L zero() { return L(); }
  static L one() { return L::constant(RingTraits<R>::one()); }
  static L from_rational(const Rational& q) { return L::constant(RingTraits<R>::from_rational(q)); }
  static bool is_zero(const L& a) { return a.is_zero(); }
  static bool is_unit(const L& a) { return !a.is_zero() && RingTraits<R>::is_unit(a.stored()[0]); }
  static L inverse(const L& a) { return a.inverse(); }
  static std::string to_string(const L& a) { return a.to_string("z"); }
};

/// Highest exponent known in a truncated coefficient; kExact for exact rings.
template <class R>
int coefficient_precision(const R&) {
  return kExact;
}
template <CoefficientRing R>
int coefficient_precision(const Laurent<R>& l) {
  return l.order();
}
template <CoefficientRing R>
int coefficient_precision(const Series<R>& s) {
  return s.order();
}

// =================================================================== BiSeries

/// Bivariate truncated series in (x, y) with all coefficients of total degree
/// <= order known.
template <CoefficientRing R>
class BiSeries {
 public:
  explicit BiSeries(int order = 0) : order_(order), c_(size_for(order), RingTraits<R>::zero()) {}

  static BiSeries in_x(const Series<R>& f, int order) { return linear_substitution(f, Rational(1), Rational(0), order); }
  static BiSeries in_y(const Series<R>& f, int order) { return linear_substitution(f, Rational(0), Rational(1), order); }
  /// f(a*x + b*y).
  static BiSeries linear_substitution(const Series<R>& f, const Rational& a, const Rational& b, int order) {
    const int n = std::min(order, f.order());
    BiSeries r(n);
    for (int k = 0; k <= std::min(n, f.degree()); ++k) {
      if (RingTraits<R>::is_zero(f[k])) continue;
      for (int i = 0; i <= k; ++i) {
        const Rational w = binomial(k, i) * power(a, i) * power(b, k - i);
        if (!w.is_zero()) r.at(i, k - i) = r.at(i, k - i) + f[k] * w;
      }
    }
    return r;
  }

  int order() const { return order_; }
  const R& operator()(int i, int j) const {
    if (i < 0 || j < 0) return ring_zero<R>();
    if (i + j > order_) fail(ErrorKind::Precision, "bivariate coefficient beyond total order");
    return c_[index(i, j)];
  }
  R& at(int i, int j) { return c_[index(i, j)]; }

  BiSeries truncated(int order) const {
    const int n = std::min(order, order_);
    BiSeries r(n);
    for (int d = 0; d <= n; ++d)
      for (int i = 0; i <= d; ++i) r.at(i, d - i) = (*this)(i, d - i);
    return r;
  }
  /// x <-> y
  BiSeries swapped() const {
    BiSeries r(order_);
    for (int d = 0; d <= order_; ++d)
      for (int i = 0; i <= d; ++i) r.at(i, d - i) = (*this)(d - i, i);
    return r;
  }
  /// First nonzero coefficient ordered by total degree then x-exponent.
  std::optional<std::pair<int, int>> first_nonzero() const {
    for (int d = 0; d <= order_; ++d)
      for (int i = d; i >= 0; --i)
        if (!RingTraits<R>::is_zero((*this)(i, d - i))) return std::make_pair(i, d - i);
    return std::nullopt;
  }
  bool is_zero() const { return !first_nonzero().has_value(); }
  /// Smallest coefficient_precision over all stored coefficients.
  int min_coefficient_precision() const {
    int p = kExact;
    for (const auto& c : c_) p = std::min(p, coefficient_precision(c));
    return p;
  }

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    const int n = std::min(a.order_, b.order_);
    BiSeries r(n);
    for (int d = 0; d <= n; ++d)
      for (int i = 0; i <= d; ++i) r.at(i, d - i) = a(i, d - i) + b(i, d - i);
    return r;
  }
  friend BiSeries operator-(const BiSeries& a) {
    BiSeries r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }
  friend BiSeries operator*(const BiSeries& a, const Rational& q) {
    BiSeries r = a;
    for (auto& x : r.c_) x = x * q;
    return r;
  }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    const int n = std::min(a.order_, b.order_);
    BiSeries r(n);
    for (int d1 = 0; d1 <= n; ++d1)
      for (int i1 = 0; i1 <= d1; ++i1) {
        const R& ca = a(i1, d1 - i1);
        if (RingTraits<R>::is_zero(ca)) continue;
        for (int d2 = 0; d1 + d2 <= n; ++d2)
          for (int i2 = 0; i2 <= d2; ++i2) {
            const R& cb = b(i2, d2 - i2);
            if (RingTraits<R>::is_zero(cb)) continue;
            R& slot = r.at(i1 + i2, d1 - i1 + d2 - i2);
            slot = slot + ca * cb;
          }
      }
    return r;
  }
  template <class F>
  auto map(F&& fn) const -> BiSeries<decltype(fn(std::declval<const R&>()))> {
    using S = decltype(fn(std::declval<const R&>()));
    BiSeries<S> r(order_);
    for (int d = 0; d <= order_; ++d)
      for (int i = 0; i <= d; ++i) r.at(i, d - i) = fn((*this)(i, d - i));
    return r;
  }

 private:
  static std::size_t size_for(int order) {
    return order < 0 ? 0 : static_cast<std::size_t>((order + 1) * (order + 2) / 2);
  }
  static std::size_t index(int i, int j) {
    const int d = i + j;
    return static_cast<std::size_t>(d * (d + 1) / 2 + j);
  }

  int order_;
  std::vector<R> c_;
};

/// outer(inner(x, y)) for inner with zero constant term.
template <CoefficientRing R>
BiSeries<R> compose(const Series<R>& outer, const BiSeries<R>& inner) {
  if (!RingTraits<R>::is_zero(inner(0, 0))) fail(ErrorKind::Domain, "compose: inner series has a nonzero constant term");
  const int n = std::min(inner.order(), outer.order());
  BiSeries<R> result(n), power(n);
  power.at(0, 0) = RingTraits<R>::one();
  for (int k = 0; k <= std::min(n, outer.degree()); ++k) {
    if (k > 0) power = power * inner.truncated(n);
    if (!RingTraits<R>::is_zero(outer[k])) {
      BiSeries<R> term = power;
      for (int d = 0; d <= n; ++d)
        for (int i = 0; i <= d; ++i) term.at(i, d - i) = term(i, d - i) * outer[k];
      result = result + term;
    }
  }
  return result;
}

/// Coefficients of n^a, a = 0..max_n_degree, in the expansion of 1/f(n - t)
/// as Laurent series in t, with 1/(n - t) read as -sum_j n^j / t^(j+1).
/// f must have valuation exactly 1 and a unit linear coefficient.
template <CoefficientRing R>
std::vector<Laurent<R>> reciprocal_shifted_parts(const Series<R>& f, int max_n_degree) {
  if (f.order() < 1 || !RingTraits<R>::is_zero(f[0]) || !RingTraits<R>::is_unit(f[1]))
    fail(ErrorKind::Domain, "reciprocal_shifted: f must have valuation exactly 1 with unit linear term");
  if (f.is_exact() && f.degree() > 1)
    fail(ErrorKind::Precision, "reciprocal_shifted: exact input needs a truncation order");
  const Series<R> u = f.unshifted(1);
  const Series<R> v = invert_unit(u);
  const int n = v.is_exact() ? std::max(v.degree(), 0) : v.order();
  std::vector<Laurent<R>> parts;
  for (int a = 0; a <= max_n_degree; ++a) {
    Laurent<R> g = Laurent<R>::zero(kExact);
    for (int b = 0; b <= a; ++b) {
      // (V^(b)/b!)(-t)
      std::vector<R> d;
      for (int m = b; m <= std::min(n, v.degree()); ++m) {
        Rational w = binomial(m, b);
        if ((m - b) % 2 != 0) w = -w;
        d.push_back(v[m] * w);
      }
      const int dorder = v.is_exact() ? kExact : v.order() - b;
      g = g - Laurent<R>(-(a - b + 1), std::move(d), order_sum(dorder, -(a - b + 1)));
    }
    parts.push_back(std::move(g));
  }
  return parts;
}

/// 1/f(n - t) as one Laurent series in t whose coefficients are polynomials
/// in n, truncated at total n-degree max_n_degree.
template <CoefficientRing R, class Lift, class NPower>
auto reciprocal_shifted(const Series<R>& f, int max_n_degree, Lift&& lift, NPower&& n_power) {
  using P = decltype(lift(std::declval<const R&>()));
  const auto parts = reciprocal_shifted_parts(f, max_n_degree);
  Laurent<P> out = Laurent<P>::zero(kExact);
  for (int a = 0; a <= max_n_degree; ++a) {
    const P na = n_power(a);
    out += parts[static_cast<std::size_t>(a)].map([&](const R& c) { return lift(c) * na; });
  }
  return out;
}

}  // namespace gforge
