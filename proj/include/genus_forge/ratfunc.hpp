#pragma once

#include <string>
#include <vector>

#include "genus_forge/rational.hpp"
#include "genus_forge/ring.hpp"

namespace gforge {

/// Dense univariate polynomial over Q; coefficient i multiplies y^i.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly y();

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const { return c_.back(); }
  Rational eval(const Rational& at) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& q);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on a zero divisor.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Monic gcd (zero when both inputs are zero).
  static UPoly gcd(UPoly a, UPoly b);
  UPoly monic() const;

  std::string to_string(const std::string& var = "y") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Rational function in y, stored gcd-reduced with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}                   // NOLINT
  RatFunc(UPoly num, UPoly den);
  static RatFunc y();
  /// y^k for any integer k.
  static RatFunc y_power(int k);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  RatFunc inverse() const;
  /// Value at a rational point; throws if the denominator vanishes there.
  Rational eval(const Rational& at) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const Rational& q);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(num)/(den)" or just "num" when the denominator is 1.
  std::string to_string() const;

 private:
  void normalize();
  UPoly num_, den_;
};

template <>
struct RingTraits<RatFunc> {
  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return RatFunc(1); }
  static RatFunc from_rational(const Rational& q) { return RatFunc(q); }
  static bool is_zero(const RatFunc& a) { return a.is_zero(); }
  static bool is_unit(const RatFunc& a) { return !a.is_zero(); }
  static RatFunc inverse(const RatFunc& a) { return a.inverse(); }
  static std::string to_string(const RatFunc& a) { return a.to_string(); }
};

}  // namespace gforge
