#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genus_forge/commands.hpp"
#include "genus_forge/errors.hpp"
#include "genus_forge/genus_forge.h"

struct gf_reports {
  std::vector<gforge::VerificationReport> items;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class Fn>
gf_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return GF_OK;
  } catch (const gforge::Error& e) {
    last_error = e.what();
    switch (e.kind()) {
      case gforge::ErrorKind::InvalidArgument: return GF_ERR_INVALID_ARGUMENT;
      case gforge::ErrorKind::Domain: return GF_ERR_DOMAIN;
      case gforge::ErrorKind::Precision: return GF_ERR_PRECISION;
      case gforge::ErrorKind::Unsupported: return GF_ERR_UNSUPPORTED;
    }
    return GF_ERR_INTERNAL;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return GF_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return GF_ERR_DOMAIN;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return GF_ERR_INTERNAL;
  }
}

std::string need(const char* s, const char* what) {
  if (!s) gforge::fail(gforge::ErrorKind::InvalidArgument, std::string(what) + " is NULL");
  return s;
}

template <class Out>
void need_out(Out* p) {
  if (!p) gforge::fail(gforge::ErrorKind::InvalidArgument, "output pointer is NULL");
}

gf_status wrap_reports(gf_reports** out, const std::function<std::vector<gforge::VerificationReport>()>& fn) {
  return guarded([&] {
    need_out(out);
    *out = nullptr;
    auto items = fn();
    *out = new gf_reports{std::move(items)};
  });
}

std::optional<int> opt_order(int order) { return order > 0 ? std::optional<int>(order) : std::nullopt; }

const gforge::VerificationReport* at(const gf_reports* r, size_t i) {
  return r && i < r->items.size() ? &r->items[i] : nullptr;
}

}  // namespace

extern "C" {

const char* gf_last_error(void) { return last_error.c_str(); }
const char* gf_version(void) { return "1.0.0"; }
void gf_string_free(char* s) { std::free(s); }

gf_status gf_eval(const char* genus, const char* space, const char* params, int order, char** value_out) {
  return guarded([&] {
    need_out(value_out);
    *value_out = nullptr;
    const auto p = gforge::parse_params(params ? params : "");
    *value_out = dup(gforge::eval_genus(need(genus, "genus"), need(space, "space"), p, opt_order(order)));
  });
}

gf_status gf_model_json(const char* space, char** json_out) {
  return guarded([&] {
    need_out(json_out);
    *json_out = nullptr;
    *json_out = dup(gforge::model_json(need(space, "space")).dump(2));
  });
}

gf_status gf_solve_fe(int order, char** relations_out, char** json_out) {
  return guarded([&] {
    need_out(json_out);
    *json_out = nullptr;
    if (relations_out) *relations_out = nullptr;
    if (order < 2) gforge::fail(gforge::ErrorKind::InvalidArgument, "solve-fe needs order >= 2");
    const auto s = gforge::solve_fe_command(order);
    std::string json = s.json.dump(2);
    char* j = dup(json);
    if (relations_out) {
      try {
        *relations_out = dup(s.text);
      } catch (...) {
        std::free(j);
        throw;
      }
    }
    *json_out = j;
  });
}

gf_status gf_verify_theorem_a(const char* which, const char* genus, int order, gf_reports** out) {
  return wrap_reports(out, [&] { return gforge::verify_theorem_a(need(which, "case"), need(genus, "genus"), opt_order(order)); });
}

gf_status gf_verify_s1(int codim, int degree, gf_reports** out) {
  return wrap_reports(out, [&] { return gforge::verify_s1(codim, degree); });
}

gf_status gf_verify_transition(const char* which, const char* e1, int order, gf_reports** out) {
  return wrap_reports(out, [&] {
    return gforge::verify_transition(need(which, "case"), gforge::Rational::parse(need(e1, "e1")), order > 0 ? order : 8);
  });
}

gf_status gf_verify_cov(const char* tower, int order, gf_reports** out) {
  return wrap_reports(out, [&] { return gforge::verify_cov(need(tower, "tower"), order > 0 ? order : 8); });
}

gf_status gf_verify_hodge(int n, int lmax, int pmax, gf_reports** out) {
  return wrap_reports(out, [&] { return gforge::verify_hodge(n, lmax, pmax); });
}

gf_status gf_report_all(gf_reports** out) {
  return wrap_reports(out, [] { return gforge::report_all(); });
}

gf_status gf_report_select(const char* const* checks, size_t count, gf_reports** out) {
  return wrap_reports(out, [&] {
    if (!checks && count > 0) gforge::fail(gforge::ErrorKind::InvalidArgument, "check list is NULL");
    if (count == 0) gforge::fail(gforge::ErrorKind::InvalidArgument, "no checks named");
    std::vector<std::string> names;
    for (size_t i = 0; i < count; ++i) names.push_back(need(checks[i], "check name"));
    return gforge::report_all(names);
  });
}

size_t gf_check_count(void) { return gforge::check_registry().size(); }

const char* gf_check_name(size_t i) {
  const auto& reg = gforge::check_registry();
  return i < reg.size() ? reg[i].name.c_str() : nullptr;
}

size_t gf_reports_count(const gf_reports* r) { return r ? r->items.size() : 0; }

int gf_reports_all_passed(const gf_reports* r) {
  if (!r) return 0;
  for (const auto& x : r->items)
    if (!x.passed()) return 0;
  return 1;
}

const char* gf_reports_check(const gf_reports* r, size_t i) {
  const auto* x = at(r, i);
  return x ? x->check.c_str() : nullptr;
}

gf_check_status gf_reports_status(const gf_reports* r, size_t i) {
  const auto* x = at(r, i);
  if (!x) return GF_CHECK_ERROR;
  switch (x->status) {
    case gforge::Status::Pass: return GF_CHECK_PASS;
    case gforge::Status::Fail: return GF_CHECK_FAIL;
    case gforge::Status::Error: return GF_CHECK_ERROR;
  }
  return GF_CHECK_ERROR;
}

const char* gf_reports_lhs(const gf_reports* r, size_t i) {
  const auto* x = at(r, i);
  return x ? x->lhs.c_str() : nullptr;
}

const char* gf_reports_rhs(const gf_reports* r, size_t i) {
  const auto* x = at(r, i);
  return x ? x->rhs.c_str() : nullptr;
}

const char* gf_reports_discrepancy(const gf_reports* r, size_t i) {
  const auto* x = at(r, i);
  return x && x->first_discrepancy ? x->first_discrepancy->c_str() : nullptr;
}

long gf_reports_millis(const gf_reports* r, size_t i) {
  const auto* x = at(r, i);
  return x ? x->millis : 0;
}

gf_status gf_reports_append(gf_reports* dst, const gf_reports* src) {
  return guarded([&] {
    if (!dst || !src) gforge::fail(gforge::ErrorKind::InvalidArgument, "report list is NULL");
    if (dst == src) {
      const auto copy = src->items;
      dst->items.insert(dst->items.end(), copy.begin(), copy.end());
    } else {
      dst->items.insert(dst->items.end(), src->items.begin(), src->items.end());
    }
  });
}

gf_status gf_reports_json(const gf_reports* r, int deterministic, char** json_out) {
  return guarded([&] {
    need_out(json_out);
    *json_out = nullptr;
    if (!r) gforge::fail(gforge::ErrorKind::InvalidArgument, "report list is NULL");
    *json_out = dup(gforge::reports_to_json(r->items, deterministic != 0).dump(2));
  });
}

void gf_reports_free(gf_reports* r) { delete r; }

}  // extern "C"
