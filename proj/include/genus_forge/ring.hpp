#pragma once

#include <concepts>
#include <string>

#include "genus_forge/rational.hpp"

namespace gforge {

/// Per-ring hooks used by the generic series code.
///
/// Every coefficient ring specialises this with
///   zero(), one(), from_rational(q), is_zero(a), is_unit(a), inverse(a),
///   to_string(a).
/// is_zero on a truncated ring means "every known coefficient vanishes".
template <class R>
struct RingTraits;

template <class R>
concept CoefficientRing = requires(const R& a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { RingTraits<R>::zero() } -> std::convertible_to<R>;
  { RingTraits<R>::one() } -> std::convertible_to<R>;
  { RingTraits<R>::from_rational(q) } -> std::convertible_to<R>;
  { RingTraits<R>::is_zero(a) } -> std::convertible_to<bool>;
  { RingTraits<R>::is_unit(a) } -> std::convertible_to<bool>;
  { RingTraits<R>::inverse(a) } -> std::convertible_to<R>;
  { RingTraits<R>::to_string(a) } -> std::convertible_to<std::string>;
};

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static bool is_unit(const Rational& a) { return !a.is_zero(); }
  static Rational inverse(const Rational& a) { return a.inverse(); }
  static std::string to_string(const Rational& a) { return a.to_string(); }
};

template <CoefficientRing R>
inline bool is_zero(const R& a) {
  return RingTraits<R>::is_zero(a);
}

template <CoefficientRing R>
inline std::string to_string(const R& a) {
  return RingTraits<R>::to_string(a);
}

}  // namespace gforge
