#include "genus_forge/ratfunc.hpp"

#include <stdexcept>

namespace gforge {

UPoly::UPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::y() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a) {
  UPoly r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const Rational& q) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= q;
  return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo;
  const int db = b.degree();
  if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead_inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (factor.is_zero()) continue;
    quo[static_cast<std::size_t>(k - db)] = factor;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k - db + i)] -= factor * b.c_[static_cast<std::size_t>(i)];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0/1";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[i].to_string();
    if (i == 1) out += "*" + var;
    if (i > 1) out += "*" + var + "^" + std::to_string(i);
  }
  return out;
}

// ------------------------------------------------------------------ RatFunc

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::y() { return RatFunc(UPoly::y(), UPoly(Rational(1))); }

RatFunc RatFunc::y_power(int k) {
  std::vector<Rational> mono(static_cast<std::size_t>(std::abs(k)) + 1, Rational(0));
  mono.back() = Rational(1);
  if (k >= 0) return RatFunc(UPoly(mono), UPoly(Rational(1)));
  return RatFunc(UPoly(Rational(1)), UPoly(mono));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(Rational(1));
    return;
  }
  const UPoly g = UPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    UPoly q, r;
    UPoly::divmod(num_, g, q, r);
    num_ = q;
    UPoly::divmod(den_, g, q, r);
    den_ = q;
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    num_ = num_ * lead.inverse();
    den_ = den_ * lead.inverse();
  }
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("not invertible: zero rational function");
  return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& at) const {
  const Rational d = den_.eval(at);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(at) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const Rational& q) {
  RatFunc r = a;
  r.num_ = r.num_ * q;
  if (q.is_zero()) r.den_ = UPoly(Rational(1));
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace gforge
