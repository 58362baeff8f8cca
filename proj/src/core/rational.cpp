#include "genus_forge/rational.hpp"

#include <cctype>

namespace gforge {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' )
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("rational literal with zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("not invertible: zero rational");
  mpq_class r(1);
  r /= v_;
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(r));
}

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(r));
}

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) return power(base.inverse(), -exponent);
  Rational result(1), b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace gforge
