#include "genus_forge/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <tuple>
#include <stdexcept>
#include <unordered_map>

namespace gforge {

namespace {

struct VarTable {
  std::mutex mu;
  std::unordered_map<std::string, VarId> ids;
  std::deque<std::string> names;  // deque: references stay valid on growth
};

VarTable& table() {
  static VarTable t;
  return t;
}

}  // namespace

VarId intern_variable(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty parameter name");
  auto& t = table();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(std::string(name));
  if (it != t.ids.end()) return it->second;
  if (t.names.size() >= 0xFFFF) throw std::length_error("too many parameters");
  const auto id = static_cast<VarId>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(std::string(name), id);
  return id;
}

const std::string& variable_name(VarId id) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  if (id >= t.names.size()) throw std::out_of_range("unknown parameter id");
  return t.names[id];
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Storage factors) : f_(std::move(factors)) {
  std::sort(f_.begin(), f_.end());
  Storage merged;
  for (const auto& [v, e] : f_) {
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v)
      merged.back().second = static_cast<std::uint16_t>(merged.back().second + e);
    else
      merged.emplace_back(v, e);
  }
  f_ = std::move(merged);
}

Monomial Monomial::of(VarId v, int exponent) {
  if (exponent < 0) throw std::domain_error("negative exponent in monomial");
  Storage s;
  if (exponent > 0) s.emplace_back(v, static_cast<std::uint16_t>(exponent));
  Monomial m;
  m.f_ = std::move(s);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : f_) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::without(VarId v) const {
  Monomial m;
  for (const auto& fe : f_)
    if (fe.first != v) m.f_.push_back(fe);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.f_.begin(), j = b.f_.begin();
  while (i != a.f_.end() && j != b.f_.end()) {
    if (i->first == j->first) {
      r.f_.emplace_back(i->first, static_cast<std::uint16_t>(i->second + j->second));
      ++i;
      ++j;
    } else if (i->first < j->first) {
      r.f_.push_back(*i++);
    } else {
      r.f_.push_back(*j++);
    }
  }
  r.f_.insert(r.f_.end(), i, a.f_.end());
  r.f_.insert(r.f_.end(), j, b.f_.end());
  return r;
}

std::string Monomial::to_string() const {
  if (f_.empty()) return "1";
  std::vector<std::pair<std::string, int>> named;
  for (const auto& [v, e] : f_) named.emplace_back(variable_name(v), e);
  std::sort(named.begin(), named.end());
  std::string out;
  for (const auto& [n, e] : named) {
    if (!out.empty()) out += "*";
    out += n;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

Poly Poly::var(std::string_view name) {
  return term(Rational(1), Monomial::of(intern_variable(name)));
}

Poly Poly::term(const Rational& c, const Monomial& m) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
  return Rational(0);
}

int Poly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Poly::degree_in(VarId v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::vector<std::string> Poly::variables() const {
  std::vector<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.push_back(variable_name(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poly Poly::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::coefficient(VarId v, int k) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == k) out.emplace_back(m.without(v), c);
  return from_unsorted(std::move(out));
}

Poly Poly::substitute(VarId v, const Poly& value) const {
  Poly result;
  std::vector<Poly> powers{Poly(1)};
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    result += term(c, m.without(v)) * powers[e];
  }
  return result;
}

Poly Poly::substitute(const std::map<std::string, Rational>& values) const {
  Poly p = *this;
  for (const auto& [name, q] : values) p = p.substitute(intern_variable(name), Poly(q));
  return p;
}

Poly Poly::truncate_degree(const std::vector<VarId>& vars, int max_degree) const {
  Poly p;
  for (const auto& t : terms_) {
    int d = 0;
    for (VarId v : vars) d += t.first.exponent(v);
    if (d <= max_degree) p.terms_.push_back(t);
  }
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->first == j->first) {
      Rational s = i->second + j->second;
      if (!s.is_zero()) merged.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    } else if (i->first < j->first) {
      merged.push_back(std::move(*i++));
    } else {
      merged.push_back(*j++);
    }
  }
  for (; i != terms_.end(); ++i) merged.push_back(std::move(*i));
  for (; j != o.terms_.end(); ++j) merged.push_back(*j);
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly operator*(const Poly& a, const Rational& q) {
  if (q.is_zero()) return Poly();
  Poly r = a;
  for (auto& t : r.terms_) t.second *= q;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly();
  if (a.is_constant()) return b * a.terms_[0].second;
  if (b.is_constant()) return a * b.terms_[0].second;
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  return Poly::from_unsorted(std::move(prod));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0/1";
  std::vector<std::tuple<int, std::string, std::string>> rows;
  for (const auto& [m, c] : terms_) rows.emplace_back(m.degree(), m.to_string(), c.to_string());
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [d, mono, coeff] : rows) {
    if (!out.empty()) out += " + ";
    out += coeff;
    if (mono != "1") out += "*" + mono;
  }
  return out;
}

Poly RingTraits<Poly>::inverse(const Poly& a) {
  if (!is_unit(a)) throw std::domain_error("not invertible: non-constant parameter polynomial");
  return Poly(a.constant_term().inverse());
}

}  // namespace gforge
