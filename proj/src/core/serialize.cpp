#include "genus_forge/serialize.hpp"

#include <algorithm>

namespace gforge {

namespace {

std::vector<VarId> ids_of(const std::vector<std::string>& vars) {
  std::vector<VarId> ids;
  for (const auto& v : vars) ids.push_back(intern_variable(v));
  return ids;
}

std::vector<int> exponents_of(const Monomial& m, const std::vector<VarId>& ids) {
  std::vector<int> e(ids.size(), 0);
  int seen = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    e[i] = m.exponent(ids[i]);
    seen += e[i];
  }
  if (seen != m.degree()) fail(ErrorKind::InvalidArgument, "monomial " + m.to_string() + " uses an undeclared variable");
  return e;
}

Monomial monomial_of(const Json& ex, std::size_t offset, const std::vector<VarId>& ids) {
  if (!ex.is_array() || ex.size() != ids.size() + offset)
    fail(ErrorKind::InvalidArgument, "exponent vector has the wrong length");
  Monomial::Storage f;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const int e = ex.at(i + offset).get<int>();
    if (e < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
    if (e > 0) f.emplace_back(ids[i], static_cast<std::uint16_t>(e));
  }
  return Monomial(std::move(f));
}

Rational coeff_of(const Json& term) {
  if (!term.is_object() || !term.contains("coeff") || !term.contains("exponents"))
    fail(ErrorKind::InvalidArgument, "term needs \"exponents\" and \"coeff\"");
  return Rational::parse(term.at("coeff").get<std::string>());
}

}  // namespace

Json series_to_json(const Series<Rational>& s) {
  Json out = Json::array();
  for (int i = 0; i <= s.degree(); ++i)
    if (!s[i].is_zero()) out.push_back({{"exponents", {i}}, {"coeff", s[i].to_string()}});
  return out;
}

Series<Rational> series_from_json(const Json& j, int order) {
  if (!j.is_array()) fail(ErrorKind::InvalidArgument, "series JSON must be a list");
  std::vector<Rational> c;
  for (const auto& term : j) {
    const Rational q = coeff_of(term);
    const auto& ex = term.at("exponents");
    if (!ex.is_array() || ex.size() != 1) fail(ErrorKind::InvalidArgument, "series exponent must be [i]");
    const int i = ex.at(0).get<int>();
    if (i < 0) fail(ErrorKind::InvalidArgument, "negative series exponent");
    if (static_cast<int>(c.size()) <= i) c.resize(static_cast<std::size_t>(i) + 1);
    c[static_cast<std::size_t>(i)] += q;
  }
  return Series<Rational>(std::move(c), order);
}

Json poly_to_json(const Poly& p, const std::vector<std::string>& vars) {
  const auto ids = ids_of(vars);
  Json out = Json::array();
  std::vector<std::pair<std::vector<int>, std::string>> rows;
  for (const auto& [m, c] : p.terms()) rows.emplace_back(exponents_of(m, ids), c.to_string());
  std::sort(rows.begin(), rows.end());
  for (const auto& [e, c] : rows) out.push_back({{"exponents", e}, {"coeff", c}});
  return out;
}

Poly poly_from_json(const Json& j, const std::vector<std::string>& vars) {
  if (!j.is_array()) fail(ErrorKind::InvalidArgument, "polynomial JSON must be a list");
  const auto ids = ids_of(vars);
  Poly p;
  for (const auto& term : j) p += Poly::term(coeff_of(term), monomial_of(term.at("exponents"), 0, ids));
  return p;
}

Json series_to_json(const Series<Poly>& s, const std::vector<std::string>& vars) {
  const auto ids = ids_of(vars);
  Json out = Json::array();
  for (int i = 0; i <= s.degree(); ++i) {
    std::vector<std::pair<std::vector<int>, std::string>> rows;
    for (const auto& [m, c] : s[i].terms()) {
      std::vector<int> e{i};
      const auto rest = exponents_of(m, ids);
      e.insert(e.end(), rest.begin(), rest.end());
      rows.emplace_back(std::move(e), c.to_string());
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [e, c] : rows) out.push_back({{"exponents", e}, {"coeff", c}});
  }
  return out;
}

Series<Poly> series_from_json(const Json& j, const std::vector<std::string>& vars, int order) {
  if (!j.is_array()) fail(ErrorKind::InvalidArgument, "series JSON must be a list");
  const auto ids = ids_of(vars);
  std::vector<Poly> c;
  for (const auto& term : j) {
    const Rational q = coeff_of(term);
    const auto& ex = term.at("exponents");
    if (!ex.is_array() || ex.empty()) fail(ErrorKind::InvalidArgument, "series exponent vector is empty");
    const int i = ex.at(0).get<int>();
    if (i < 0) fail(ErrorKind::InvalidArgument, "negative series exponent");
    if (static_cast<int>(c.size()) <= i) c.resize(static_cast<std::size_t>(i) + 1);
    c[static_cast<std::size_t>(i)] += Poly::term(q, monomial_of(ex, 1, ids));
  }
  return Series<Poly>(std::move(c), order);
}

}  // namespace gforge
