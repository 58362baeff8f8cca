#include "genus_forge/model.hpp"

#include <map>
#include <mutex>
#include <regex>

namespace gforge {

VarietyModel::VarietyModel(std::string name, int dim, std::vector<BasisElement> basis)
    : name_(std::move(name)), dim_(dim), basis_(std::move(basis)) {
  if (dim_ < 0) fail(ErrorKind::InvalidArgument, "negative dimension");
  unit_ = -1;
  for (int i = 0; i < size(); ++i) {
    const int d = basis_[static_cast<std::size_t>(i)].degree;
    if (d < 0 || d > dim_) fail(ErrorKind::InvalidArgument, "basis degree out of range");
    if (d == 0) {
      if (unit_ >= 0) fail(ErrorKind::Unsupported, "models must be connected (one degree-0 basis element)");
      unit_ = i;
    }
  }
  if (unit_ < 0) fail(ErrorKind::InvalidArgument, "model has no unit");
  table_.assign(static_cast<std::size_t>(size() * size()), {});
  integral_.assign(static_cast<std::size_t>(size()), Rational(0));
}

const std::vector<Rational>& VarietyModel::tangent_chern() const {
  if (!tangent_) fail(ErrorKind::Unsupported, "model " + name_ + " carries no tangent data");
  return *tangent_;
}

const std::vector<Rational>& VarietyModel::generator(const std::string& name) const {
  for (std::size_t i = 0; i < generator_names_.size(); ++i)
    if (generator_names_[i] == name) return generators_[i];
  fail(ErrorKind::InvalidArgument, "model " + name_ + " has no generator " + name);
}

void VarietyModel::set_product(int i, int j, Entry e) {
  std::erase_if(e, [](const auto& t) { return t.second.is_zero(); });
  table_[static_cast<std::size_t>(i * size() + j)] = std::move(e);
}

void VarietyModel::add_generator(std::string name, std::vector<Rational> coords) {
  generator_names_.push_back(std::move(name));
  generators_.push_back(std::move(coords));
}

Json VarietyModel::to_json() const {
  Json basis = Json::array(), products = Json::array(), integrals = Json::array();
  for (const auto& b : basis_) basis.push_back({{"name", b.name}, {"degree", b.degree}});
  for (int i = 0; i < size(); ++i)
    for (int j = i; j < size(); ++j) {
      const auto& e = product(i, j);
      if (e.empty()) continue;
      Json terms = Json::array();
      for (const auto& [k, w] : e) terms.push_back(Json::array({k, w.to_string()}));
      products.push_back(Json::array({i, j, terms}));
    }
  for (const auto& q : integral_) integrals.push_back(q.to_string());
  Json chern = nullptr;
  if (tangent_) {
    chern = Json::array();
    for (const auto& q : *tangent_) chern.push_back(q.to_string());
  }
  Json gens = Json::object();
  for (std::size_t i = 0; i < generator_names_.size(); ++i) {
    Json c = Json::array();
    for (const auto& q : generators_[i]) c.push_back(q.to_string());
    gens[generator_names_[i]] = c;
  }
  return Json{{"name", name_},   {"dim", dim_},           {"basis", basis},  {"products", products},
              {"integrals", integrals}, {"chern", chern}, {"generators", gens}};
}

RClass unit_class(const ModelPtr& m) { return RClass::one(m); }
RClass generator(const ModelPtr& m, const std::string& name) { return RClass(m, m->generator(name)); }
RClass tangent_chern(const ModelPtr& m) { return RClass(m, m->tangent_chern()); }

RClass point_class(const ModelPtr& m) {
  for (int i = 0; i < m->size(); ++i)
    if (m->basis(i).degree == m->dim() && !m->integral(i).is_zero()) return RClass::basis(m, i) * m->integral(i).inverse();
  fail(ErrorKind::Domain, "model " + m->name() + " has no point class");
}

std::vector<RClass> chern_components(const RClass& c) {
  std::vector<RClass> out;
  for (int k = 0; k <= c.model()->dim(); ++k) out.push_back(c.degree_part(k));
  return out;
}

std::vector<RClass> power_sums(const RClass& c) {
  const auto cc = chern_components(c);
  const int n = c.model()->dim();
  std::vector<RClass> p(static_cast<std::size_t>(n) + 1, RClass::zero(c.model()));
  for (int k = 1; k <= n; ++k) {
    RClass acc = cc[static_cast<std::size_t>(k)] * Rational(k % 2 == 1 ? k : -k);
    for (int i = 1; i < k; ++i) {
      const RClass t = cc[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
      acc = i % 2 == 1 ? acc + t : acc - t;
    }
    p[static_cast<std::size_t>(k)] = acc;
  }
  return p;
}

RClass twist_chern(const RClass& c, int rank, const RClass& line) {
  const ModelPtr& m = c.model();
  const auto cc = chern_components(c);
  const RClass one_plus = RClass::one(m) + line;
  RClass acc = RClass::zero(m);
  for (int i = 0; i <= std::min(rank, m->dim()); ++i) {
    RClass p = cc[static_cast<std::size_t>(i)];
    for (int e = 0; e < rank - i; ++e) p = p * one_plus;
    acc += p;
  }
  return acc;
}

RClass segre(const RClass& c) { return inverse(c); }

// ------------------------------------------------------------ constructors

namespace {

ModelPtr build_projective_space(int n) {
  std::vector<VarietyModel::BasisElement> basis;
  for (int k = 0; k <= n; ++k) basis.push_back({k == 0 ? "1" : k == 1 ? "h" : "h^" + std::to_string(k), k});
  auto m = std::make_shared<VarietyModel>("P" + std::to_string(n), n, std::move(basis));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i + j <= n) m->set_product(i, j, {{i + j, Rational(1)}});
  m->set_integral(n, Rational(1));
  std::vector<Rational> c;
  for (int k = 0; k <= n; ++k) c.push_back(binomial(n + 1, k));
  m->set_tangent(std::move(c));
  if (n >= 1) {
    std::vector<Rational> h(static_cast<std::size_t>(n) + 1, Rational(0));
    h[1] = Rational(1);
    m->add_generator("h", std::move(h));
  }
  return m;
}

}  // namespace

// Shared instances, so that classes built from separate calls can be combined.
ModelPtr projective_space(int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "projective space of negative dimension");
  static std::mutex mu;
  static std::map<int, ModelPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_projective_space(n);
  return slot;
}

namespace {

std::string join_names(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + "*" + b;
}

std::vector<Rational> coords_of(const RClass& c) { return c.coeffs(); }

}  // namespace

ModelPtr product(const ModelPtr& x, const ModelPtr& y) {
  const int nx = x->size(), ny = y->size();
  std::vector<VarietyModel::BasisElement> basis;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      basis.push_back({join_names(x->basis(i).name, y->basis(j).name), x->basis(i).degree + y->basis(j).degree});
  auto m = std::make_shared<VarietyModel>(x->name() + "x" + y->name(), x->dim() + y->dim(), std::move(basis));
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int i2 = 0; i2 < nx; ++i2)
        for (int j2 = 0; j2 < ny; ++j2) {
          VarietyModel::Entry e;
          for (const auto& [a, wa] : x->product(i, i2))
            for (const auto& [b, wb] : y->product(j, j2)) e.push_back({a * ny + b, wa * wb});
          m->set_product(i * ny + j, i2 * ny + j2, std::move(e));
        }
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) m->set_integral(i * ny + j, x->integral(i) * y->integral(j));

  const ModelPtr mp = m;
  auto pull_x = [&](const std::vector<Rational>& c) {
    RClass out = RClass::zero(mp);
    for (int i = 0; i < nx; ++i) out += RClass::basis(mp, i * ny + y->unit_index()) * c[static_cast<std::size_t>(i)];
    return out;
  };
  auto pull_y = [&](const std::vector<Rational>& c) {
    RClass out = RClass::zero(mp);
    for (int j = 0; j < ny; ++j) out += RClass::basis(mp, x->unit_index() * ny + j) * c[static_cast<std::size_t>(j)];
    return out;
  };
  for (const auto& g : x->generator_names()) {
    const bool clash = std::find(y->generator_names().begin(), y->generator_names().end(), g) != y->generator_names().end();
    m->add_generator(clash ? g + "1" : g, coords_of(pull_x(x->generator(g))));
  }
  for (const auto& g : y->generator_names()) {
    const bool clash = std::find(x->generator_names().begin(), x->generator_names().end(), g) != x->generator_names().end();
    m->add_generator(clash ? g + "2" : g, coords_of(pull_y(y->generator(g))));
  }
  if (x->has_tangent() && y->has_tangent())
    m->set_tangent(coords_of(pull_x(x->tangent_chern()) * pull_y(y->tangent_chern())));
  return m;
}

RClass Embedding::pull(const RClass& a) const { return pull<Rational>(a); }
RClass Embedding::push(const RClass& b) const { return push<Rational>(b); }

Embedding point_in(const ModelPtr& x) {
  Embedding e;
  e.X = x;
  e.Z = projective_space(0);
  e.codim = x->dim();
  for (int i = 0; i < x->size(); ++i)
    e.pullback.push_back(i == x->unit_index() ? RClass::one(e.Z) : RClass::zero(e.Z));
  e.pushforward.push_back(point_class(x));
  e.normal_chern = RClass::one(e.Z);
  e.normal_roots.assign(static_cast<std::size_t>(e.codim), RClass::zero(e.Z));
  e.ambient_chern = RClass::one(x);
  e.ambient_rank = x->dim();
  return e;
}

Embedding linear_subspace(int n, int m) {
  if (m < 0 || m >= n) fail(ErrorKind::InvalidArgument, "linear subspace needs 0 <= m < n");
  Embedding e;
  e.X = projective_space(n);
  e.Z = projective_space(m);
  e.codim = n - m;
  for (int k = 0; k <= n; ++k) e.pullback.push_back(k <= m ? RClass::basis(e.Z, k) : RClass::zero(e.Z));
  for (int k = 0; k <= m; ++k) e.pushforward.push_back(RClass::basis(e.X, k + n - m));
  RClass cn = RClass::one(e.Z), cq = RClass::one(e.X);
  const RClass hz = m >= 1 ? generator(e.Z, "h") : RClass::zero(e.Z);
  const RClass hx = generator(e.X, "h");
  for (int i = 0; i < e.codim; ++i) {
    cn = cn * (RClass::one(e.Z) + hz);
    cq = cq * (RClass::one(e.X) + hx);
    e.normal_roots.push_back(hz);
  }
  e.normal_chern = cn;
  e.ambient_chern = cq;
  e.ambient_rank = e.codim;
  return e;
}

namespace {

// Polynomial in xi with Z-class coefficients, reduced by
// sum_j c_j(V) xi^(m-j) = 0.
using XiPoly = std::vector<RClass>;

void reduce_xi(XiPoly& p, const std::vector<RClass>& cv, int rank) {
  for (int k = static_cast<int>(p.size()) - 1; k >= rank; --k) {
    const RClass beta = p[static_cast<std::size_t>(k)];
    p[static_cast<std::size_t>(k)] = RClass::zero(beta.model());
    if (beta.is_zero()) continue;
    for (int j = 1; j <= rank && j < static_cast<int>(cv.size()); ++j)
      p[static_cast<std::size_t>(k - j)] -= beta * cv[static_cast<std::size_t>(j)];
  }
  p.resize(static_cast<std::size_t>(rank), RClass::zero(p.front().model()));
}

}  // namespace

RClass ProjectiveBundle::pull(const RClass& a) const {
  const int m = static_cast<int>(twists.size());
  RClass out = RClass::zero(model);
  for (int b = 0; b < a.size(); ++b)
    if (!a[b].is_zero()) out += RClass::basis(model, b * m) * a[b];
  return out;
}

ProjectiveBundle projective_bundle(const ModelPtr& z, const RClass& divisor, std::vector<long> twists) {
  if (twists.empty()) fail(ErrorKind::InvalidArgument, "projective bundle of a rank-0 bundle");
  if (divisor.model() != z) fail(ErrorKind::InvalidArgument, "divisor lives on another model");
  const int m = static_cast<int>(twists.size());
  const int nz = z->size();
  std::vector<VarietyModel::BasisElement> basis;
  for (int b = 0; b < nz; ++b)
    for (int k = 0; k < m; ++k) {
      const std::string xi = k == 0 ? "1" : k == 1 ? "xi" : "xi^" + std::to_string(k);
      basis.push_back({join_names(z->basis(b).name, xi), z->basis(b).degree + k});
    }
  std::string name = "P(" + z->name() + ";";
  for (std::size_t i = 0; i < twists.size(); ++i) name += (i ? "," : "") + std::to_string(twists[i]);
  auto model = std::make_shared<VarietyModel>(name + ")", z->dim() + m - 1, std::move(basis));

  RClass cv = RClass::one(z);
  for (long d : twists) cv = cv * (RClass::one(z) + divisor * Rational(d));
  const auto cvc = chern_components(cv);
  for (int b = 0; b < nz; ++b)
    for (int k = 0; k < m; ++k)
      for (int b2 = 0; b2 < nz; ++b2)
        for (int k2 = 0; k2 < m; ++k2) {
          XiPoly p(static_cast<std::size_t>(k + k2 + 1), RClass::zero(z));
          p[static_cast<std::size_t>(k + k2)] = RClass::basis(z, b) * RClass::basis(z, b2);
          reduce_xi(p, cvc, m);
          VarietyModel::Entry e;
          for (int kk = 0; kk < m; ++kk)
            for (int bb = 0; bb < nz; ++bb)
              if (!p[static_cast<std::size_t>(kk)][bb].is_zero()) e.push_back({bb * m + kk, p[static_cast<std::size_t>(kk)][bb]});
          model->set_product(b * m + k, b2 * m + k2, std::move(e));
        }
  for (int b = 0; b < nz; ++b) model->set_integral(b * m + m - 1, z->integral(b));

  ProjectiveBundle pb;
  pb.Z = z;
  pb.model = model;
  pb.divisor = divisor;
  pb.twists = std::move(twists);
  pb.xi = m >= 2 ? RClass::basis(model, z->unit_index() * m + 1) : RClass::zero(model);
  if (m == 1) {
    // P(L) = Z; O(-1) = L
    pb.xi = pb.pull(divisor * Rational(-pb.twists[0]));
  }
  for (const auto& g : z->generator_names()) model->add_generator(g, pb.pull(generator(z, g)).coeffs());
  if (m >= 2) model->add_generator("xi", pb.xi.coeffs());
  if (z->has_tangent()) {
    RClass c = pb.pull(tangent_chern(z));
    const RClass dpull = pb.pull(divisor);
    for (long d : pb.twists) c = c * (RClass::one(model) + dpull * Rational(d) + pb.xi);
    model->set_tangent(c.coeffs());
  }
  return pb;
}

Embedding zero_section(const ProjectiveBundle& b) {
  auto it = std::find(b.twists.begin(), b.twists.end(), 0L);
  if (it == b.twists.end()) fail(ErrorKind::InvalidArgument, "zero section needs a trivial summand (twist 0)");
  const int m = static_cast<int>(b.twists.size());
  if (m < 2) fail(ErrorKind::InvalidArgument, "zero section of a rank-1 bundle");
  std::vector<long> n_twists(b.twists.begin(), b.twists.end());
  n_twists.erase(n_twists.begin() + (it - b.twists.begin()));

  Embedding e;
  e.X = b.model;
  e.Z = b.Z;
  e.codim = m - 1;
  for (int i = 0; i < e.X->size(); ++i)
    e.pullback.push_back(i % m == 0 ? RClass::basis(e.Z, i / m) : RClass::zero(e.Z));
  RClass cv = RClass::one(e.Z);
  for (long d : n_twists) {
    const RClass root = b.divisor * Rational(d);
    cv = cv * (RClass::one(e.Z) + root);
    e.normal_roots.push_back(root);
  }
  e.normal_chern = cv;
  const RClass cq = b.pull(cv) * inverse(RClass::one(e.X) - b.xi);
  const RClass top = cq.degree_part(e.codim);
  for (int z = 0; z < e.Z->size(); ++z) e.pushforward.push_back(b.pull(RClass::basis(e.Z, z)) * top);
  e.ambient_chern = cq;
  e.ambient_rank = e.codim;
  return e;
}

RClass Blowup::phi_star(const RClass& a) const { return phi_star<Rational>(a); }

int Blowup::exceptional_index(int z_basis, int k) const {
  const int r = center.codim;
  if (r < 2 || k < 0 || k > r - 2) fail(ErrorKind::InvalidArgument, "no such exceptional basis element");
  return center.X->size() + z_basis * (r - 1) + k;
}

Blowup blow_up(const Embedding& e) {
  if (e.codim < 1) fail(ErrorKind::InvalidArgument, "blow-up center must have positive codimension");
  if (static_cast<int>(e.pullback.size()) != e.X->size() || static_cast<int>(e.pushforward.size()) != e.Z->size())
    fail(ErrorKind::InvalidArgument, "embedding maps have the wrong size");
  Blowup bl;
  bl.center = e;
  const int r = e.codim;
  if (r == 1) {
    bl.Y = e.X;
    bl.E = e.push(RClass::one(e.Z));
    for (int i = 0; i < e.X->size(); ++i) bl.phi_star_basis.push_back(RClass::basis(e.X, i));
    return bl;
  }
  const int nx = e.X->size(), nz = e.Z->size();
  std::vector<VarietyModel::BasisElement> basis;
  for (int i = 0; i < nx; ++i) basis.push_back(e.X->basis(i));
  for (int b = 0; b < nz; ++b)
    for (int k = 0; k <= r - 2; ++k) {
      const std::string xi = k == 0 ? "1" : k == 1 ? "xi" : "xi^" + std::to_string(k);
      basis.push_back({"j*(" + join_names(e.Z->basis(b).name, xi) + ")", e.Z->basis(b).degree + k + 1});
    }
  auto y = std::make_shared<VarietyModel>("Bl(" + e.X->name() + ")", e.X->dim(), std::move(basis));
  const auto cn = chern_components(e.normal_chern);

  struct Elem {
    RClass x;
    XiPoly xi;
  };
  auto flatten = [&](Elem el) {
    reduce_xi(el.xi, cn, r);
    // j_*(beta xi^(r-1)) = phi^* i_* beta - sum_(j>=1) j_*(beta c_j(N) xi^(r-1-j))
    const RClass beta = el.xi[static_cast<std::size_t>(r - 1)];
    if (!beta.is_zero()) {
      el.x += e.push(beta);
      for (int j = 1; j <= r - 1 && j < static_cast<int>(cn.size()); ++j)
        el.xi[static_cast<std::size_t>(r - 1 - j)] -= beta * cn[static_cast<std::size_t>(j)];
    }
    VarietyModel::Entry out;
    for (int i = 0; i < nx; ++i)
      if (!el.x[i].is_zero()) out.push_back({i, el.x[i]});
    for (int k = 0; k <= r - 2; ++k)
      for (int b = 0; b < nz; ++b) {
        const Rational& w = el.xi[static_cast<std::size_t>(k)][b];
        if (!w.is_zero()) out.push_back({nx + b * (r - 1) + k, w});
      }
    return out;
  };
  auto exc = [&](int idx) { return std::pair{(idx - nx) / (r - 1), (idx - nx) % (r - 1)}; };
  const int ny = y->size();
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < ny; ++j) {
      Elem el{RClass::zero(e.X), XiPoly(static_cast<std::size_t>(2 * r + 1), RClass::zero(e.Z))};
      if (i < nx && j < nx) {
        for (const auto& [k, w] : e.X->product(i, j)) el.x += RClass::basis(e.X, k) * w;
      } else if (i < nx || j < nx) {
        const int a = i < nx ? i : j;
        const auto [b, k] = exc(i < nx ? j : i);
        el.xi[static_cast<std::size_t>(k)] = e.pullback[static_cast<std::size_t>(a)] * RClass::basis(e.Z, b);
      } else {
        const auto [b, k] = exc(i);
        const auto [b2, k2] = exc(j);
        el.xi[static_cast<std::size_t>(k + k2 + 1)] = -(RClass::basis(e.Z, b) * RClass::basis(e.Z, b2));
      }
      y->set_product(i, j, flatten(std::move(el)));
    }
  for (int i = 0; i < nx; ++i) y->set_integral(i, e.X->integral(i));

  bl.Y = y;
  for (int i = 0; i < nx; ++i) bl.phi_star_basis.push_back(RClass::basis(bl.Y, i));
  bl.E = RClass::basis(bl.Y, nx + e.Z->unit_index() * (r - 1));
  for (const auto& g : e.X->generator_names()) y->add_generator(g, bl.phi_star(generator(e.X, g)).coeffs());
  y->add_generator("E", bl.E.coeffs());
  if (e.X->has_tangent() && e.ambient_chern) {
    if (e.ambient_rank != r) fail(ErrorKind::InvalidArgument, "ambient bundle rank differs from the codimension");
    const RClass cq = bl.phi_star(*e.ambient_chern);
    const RClass c = bl.phi_star(tangent_chern(e.X)) * inverse(cq) * (RClass::one(bl.Y) + bl.E) *
                     twist_chern(cq, r, -bl.E);
    y->set_tangent(c.coeffs());
  }
  return bl;
}

RClass exceptional_pushforward(const Embedding& e, int m) {
  const int r = e.codim;
  if (m < 0) fail(ErrorKind::InvalidArgument, "negative power");
  if (m <= r - 2) return RClass::zero(e.Z);
  const RClass s = segre(e.normal_chern).degree_part(m - r + 1);
  return m % 2 == 0 ? s : -s;
}

Embedding disjoint_center(const Blowup& b, const Embedding& in_x) {
  if (in_x.X != b.center.X) fail(ErrorKind::InvalidArgument, "center lives on another model");
  Embedding e = in_x;
  e.X = b.Y;
  e.pullback.clear();
  for (int i = 0; i < b.Y->size(); ++i)
    e.pullback.push_back(i < b.center.X->size() ? in_x.pullback[static_cast<std::size_t>(i)] : RClass::zero(e.Z));
  e.pushforward.clear();
  for (const auto& p : in_x.pushforward) e.pushforward.push_back(b.phi_star(p));
  if (in_x.ambient_chern) e.ambient_chern = b.phi_star(*in_x.ambient_chern);
  // the two centers must not meet: i^* E = 0 already, check i_*(1) . E = 0
  if (!(e.push(RClass::one(e.Z)) * b.E).is_zero()) fail(ErrorKind::Domain, "centers are not disjoint");
  return e;
}

namespace {

std::vector<long> parse_twists(const std::string& s) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    const std::string tok = s.substr(pos, end - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "bad twist '" + tok + "'");
    }
    pos = end + 1;
  }
  return out;
}

RClass hyperplane_or_zero(const ModelPtr& z) {
  const auto& names = z->generator_names();
  return std::find(names.begin(), names.end(), "h") != names.end() ? generator(z, "h") : RClass::zero(z);
}

}  // namespace

ModelPtr catalog_model(const std::string& name) {
  static const std::regex pn(R"(P(\d+))"), pmn(R"(P(\d+)xP(\d+))"), hirz(R"(F(\d+))");
  static const std::regex bundle(R"(proj-bundle\((.+);([-0-9,]+)\))"), zs(R"(bl-zero-section\((.+);([-0-9,]+)\))");
  std::smatch m;
  if (std::regex_match(name, m, pn)) return projective_space(std::stoi(m[1]));
  if (std::regex_match(name, m, pmn)) return product(projective_space(std::stoi(m[1])), projective_space(std::stoi(m[2])));
  if (std::regex_match(name, m, hirz)) return projective_bundle(projective_space(1), generator(projective_space(1), "h"), {0, std::stol(m[1])}).model;
  if (name == "bl-line-P3") return blow_up(linear_subspace(3, 1)).Y;
  if (name == "bl-pt-line-P3") {
    const Blowup first = blow_up(point_in(projective_space(3)));
    return blow_up(disjoint_center(first, linear_subspace(3, 1))).Y;
  }
  if (name.rfind("bl-pt-", 0) == 0) return blow_up(point_in(catalog_model(name.substr(6)))).Y;
  if (std::regex_match(name, m, bundle)) {
    const ModelPtr z = catalog_model(m[1]);
    return projective_bundle(z, hyperplane_or_zero(z), parse_twists(m[2])).model;
  }
  if (std::regex_match(name, m, zs)) {
    const ModelPtr z = catalog_model(m[1]);
    auto tw = parse_twists(m[2]);
    tw.push_back(0);
    return blow_up(zero_section(projective_bundle(z, hyperplane_or_zero(z), tw))).Y;
  }
  fail(ErrorKind::Unsupported, "unknown catalog space '" + name + "'");
}

}  // namespace gforge
