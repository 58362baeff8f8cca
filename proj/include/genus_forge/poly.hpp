#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genus_forge/rational.hpp"
#include "genus_forge/ring.hpp"

namespace gforge {

using VarId = std::uint16_t;

/// Interns a parameter name. The table is append-only and internally locked,
/// so ids are stable for the lifetime of the process.
VarId intern_variable(std::string_view name);
const std::string& variable_name(VarId id);

/// Power product of parameters, factors sorted by variable id.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint16_t>;
  using Storage = boost::container::small_vector<Factor, 4>;

  Monomial() = default;
  explicit Monomial(Storage factors);
  static Monomial of(VarId v, int exponent = 1);

  const Storage& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int degree() const;
  int exponent(VarId v) const;
  Monomial without(VarId v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.f_ < b.f_; }

  /// e.g. "a1*f3^2"; variables in name order; "1" for the empty product.
  std::string to_string() const;

 private:
  Storage f_;
};

/// ParamPoly: polynomial over the rationals in named parameters.
/// Terms are kept sorted with no zero coefficients, so == is structural.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(std::string_view name);
  static Poly term(const Rational& c, const Monomial& m);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const;
  int total_degree() const;
  int degree_in(VarId v) const;
  /// Sorted by name.
  std::vector<std::string> variables() const;

  /// Coefficient of v^k, as a polynomial in the remaining variables.
  Poly coefficient(VarId v, int k) const;
  Poly substitute(VarId v, const Poly& value) const;
  Poly substitute(const std::map<std::string, Rational>& values) const;
  /// Drops every term whose total degree in `vars` exceeds max_degree.
  Poly truncate_degree(const std::vector<VarId>& vars, int max_degree) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& q);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Canonical text: terms by (degree, names), coefficients as "p/q".
  std::string to_string() const;

 private:
  static Poly from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

template <>
struct RingTraits<Poly> {
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(1); }
  static Poly from_rational(const Rational& q) { return Poly(q); }
  static bool is_zero(const Poly& a) { return a.is_zero(); }
  static bool is_unit(const Poly& a) { return a.is_constant() && !a.is_zero(); }
  static Poly inverse(const Poly& a);
  static std::string to_string(const Poly& a) { return a.to_string(); }
};

/// Evaluates p in another ring; value(v) supplies the image of each variable.
template <CoefficientRing R, class VarValue>
R evaluate(const Poly& p, VarValue&& value) {
  std::map<VarId, std::vector<R>> powers;
  auto pow = [&](VarId v, int e) -> const R& {
    auto& list = powers[v];
    if (list.empty()) {
      list.push_back(RingTraits<R>::one());
      list.push_back(value(v));
    }
    while (static_cast<int>(list.size()) <= e) list.push_back(list.back() * list[1]);
    return list[static_cast<std::size_t>(e)];
  };
  R acc = RingTraits<R>::zero();
  for (const auto& [m, c] : p.terms()) {
    R t = RingTraits<R>::from_rational(c);
    for (const auto& [v, e] : m.factors()) t = t * pow(v, e);
    acc = acc + t;
  }
  return acc;
}

}  // namespace gforge
