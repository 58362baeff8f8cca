#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "genus_forge/genus_forge.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kError = 2 };

int api_error(gf_status s) {
  std::cerr << "error (" << static_cast<int>(s) << "): " << gf_last_error() << "\n";
  return kError;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

const char* status_word(gf_check_status s) {
  switch (s) {
    case GF_CHECK_PASS: return "PASS";
    case GF_CHECK_FAIL: return "FAIL";
    default: return "ERROR";
  }
}

std::string clip(const char* s, std::size_t width) {
  std::string t = s ? s : "";
  if (t.size() > width) t = t.substr(0, width) + "...";
  return t;
}

/// Prints one line per report, writes JSON if requested, frees the list.
int finish(gf_status st, gf_reports* reports, const std::string& json_path, bool deterministic, bool verbose) {
  if (st != GF_OK) return api_error(st);
  const std::size_t n = gf_reports_count(reports);
  for (std::size_t i = 0; i < n; ++i) {
    const gf_check_status s = gf_reports_status(reports, i);
    const std::size_t width = verbose ? std::string::npos : 160;
    std::cout << status_word(s) << "  " << gf_reports_check(reports, i);
    if (!deterministic) std::cout << "  (" << gf_reports_millis(reports, i) << " ms)";
    std::cout << "\n    lhs: " << clip(gf_reports_lhs(reports, i), width) << "\n    rhs: " << clip(gf_reports_rhs(reports, i), width)
              << "\n";
    if (const char* d = gf_reports_discrepancy(reports, i)) std::cout << "    at:  " << d << "\n";
  }
  const bool ok = gf_reports_all_passed(reports) != 0;
  int code = ok ? kPass : kFail;
  if (!json_path.empty()) {
    char* json = nullptr;
    const gf_status js = gf_reports_json(reports, deterministic ? 1 : 0, &json);
    if (js != GF_OK) {
      code = api_error(js);
    } else {
      if (!write_file(json_path, std::string(json) + "\n")) code = kError;
      gf_string_free(json);
    }
  }
  std::size_t passed = 0;
  for (std::size_t i = 0; i < n; ++i) passed += gf_reports_status(reports, i) == GF_CHECK_PASS;
  std::cout << passed << "/" << n << " checks passed\n";
  gf_reports_free(reports);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact genus computations and identity checks on blow-ups and projective models"};
  app.require_subcommand(1);
  bool deterministic = false, verbose = false;
  app.add_flag("--deterministic", deterministic, "Write millis as 0 and omit timings from the output");
  app.add_flag("-v,--verbose", verbose, "Print lhs/rhs in full");
  int rc = kPass;

  auto* solve = app.add_subcommand("solve-fe", "Solve the functional equation degree by degree");
  int fe_order = 8;
  std::string fe_json;
  solve->add_option("--order", fe_order, "Highest degree of f")->required();
  solve->add_option("--json", fe_json, "Write {order, f, A} to this file");
  solve->callback([&] {
    char *rel = nullptr, *json = nullptr;
    const gf_status s = gf_solve_fe(fe_order, &rel, &json);
    if (s != GF_OK) {
      rc = api_error(s);
      return;
    }
    std::cout << rel;
    if (!fe_json.empty() && !write_file(fe_json, std::string(json) + "\n")) rc = kError;
    gf_string_free(rel);
    gf_string_free(json);
  });

  auto* eval = app.add_subcommand("eval", "Exact genus value on a catalog space");
  std::string ev_genus, ev_space, ev_params;
  int ev_order = 0;
  eval->add_option("--genus", ev_genus, "todd, euler, chi-y, universal, elliptic-algebraic, elliptic-sigma, q-product")->required();
  eval->add_option("--space", ev_space, "Catalog name, e.g. P2, P1xP1, bl-pt-P2, proj-bundle(P1;0,1)")->required();
  eval->add_option("--params", ev_params, "Comma separated name=p/q values");
  eval->add_option("--order", ev_order, "Series truncation order");
  eval->callback([&] {
    char* v = nullptr;
    const gf_status s = gf_eval(ev_genus.c_str(), ev_space.c_str(), ev_params.c_str(), ev_order, &v);
    if (s != GF_OK) {
      rc = api_error(s);
      return;
    }
    std::cout << v << "\n";
    gf_string_free(v);
  });

  auto* model = app.add_subcommand("model", "Dump a catalog model as JSON");
  std::string md_space;
  model->add_option("--space", md_space, "Catalog name")->required();
  model->callback([&] {
    char* j = nullptr;
    const gf_status s = gf_model_json(md_space.c_str(), &j);
    if (s != GF_OK) {
      rc = api_error(s);
      return;
    }
    std::cout << j << "\n";
    gf_string_free(j);
  });

  auto* verify = app.add_subcommand("verify", "Run one identity check");
  verify->require_subcommand(1);
  std::string vjson;
  verify->add_option("--json", vjson, "Write the report list to this file");

  auto* ta = verify->add_subcommand("theorem-a", "Blow-up formula with residue term");
  std::string ta_case, ta_genus;
  int ta_order = 0;
  ta->add_option("--case", ta_case)->required()->check(CLI::IsMember({"bl-pt-p2", "bl-pt-p3", "bl-line-p3"}));
  ta->add_option("--genus", ta_genus)->required()->check(CLI::IsMember({"todd", "euler", "universal"}));
  ta->add_option("--order", ta_order, "Series order (number of free f_k for universal)");
  ta->callback([&] {
    gf_reports* r = nullptr;
    const gf_status st = gf_verify_theorem_a(ta_case.c_str(), ta_genus.c_str(), ta_order, &r);
    rc = finish(st, r, vjson, deterministic, verbose);
  });

  auto* s1 = verify->add_subcommand("s1", "Residue vanishing for the sigma-form genus");
  int s1_codim = 2, s1_order = 8;
  s1->add_option("--codim", s1_codim)->required();
  s1->add_option("--order", s1_order, "Total degree in the normal roots")->required();
  s1->callback([&] {
    gf_reports* r = nullptr;
    const gf_status st = gf_verify_s1(s1_codim, s1_order, &r);
    rc = finish(st, r, vjson, deterministic, verbose);
  });

  auto* tr = verify->add_subcommand("transition", "One blow-up with a divisor of rational discrepancy");
  std::string tr_case, tr_e1 = "1/2";
  int tr_order = 8;
  tr->add_option("--case", tr_case)->required();
  tr->add_option("--e1", tr_e1, "Discrepancy p/q")->required();
  tr->add_option("--order", tr_order);
  tr->callback([&] {
    gf_reports* r = nullptr;
    const gf_status st = gf_verify_transition(tr_case.c_str(), tr_e1.c_str(), tr_order, &r);
    rc = finish(st, r, vjson, deterministic, verbose);
  });

  auto* cov = verify->add_subcommand("cov", "Change of variables along a tower of blow-ups");
  std::string cov_tower;
  int cov_order = 8;
  cov->add_option("--tower", cov_tower, "pt+line-p3, pt-p3, pt-p2, pt-f3")->required();
  cov->add_option("--order", cov_order);
  cov->callback([&] {
    gf_reports* r = nullptr;
    const gf_status st = gf_verify_cov(cov_tower.c_str(), cov_order, &r);
    rc = finish(st, r, vjson, deterministic, verbose);
  });

  auto* hodge = verify->add_subcommand("hodge", "Hyperplane recursion for chi(O(l) x Omega^p) on P^n");
  int h_n = 2, h_l = 3, h_p = 2;
  hodge->add_option("--n", h_n)->required();
  hodge->add_option("--lmax", h_l)->required();
  hodge->add_option("--pmax", h_p)->required();
  hodge->callback([&] {
    gf_reports* r = nullptr;
    const gf_status st = gf_verify_hodge(h_n, h_l, h_p, &r);
    rc = finish(st, r, vjson, deterministic, verbose);
  });

  auto* report = app.add_subcommand("report", "Run built-in checks");
  bool all = false, list = false;
  std::vector<std::string> only;
  std::string rjson;
  report->add_flag("--all", all, "Run every built-in check");
  report->add_option("--check", only, "Run only these checks");
  report->add_flag("--list", list, "List check names");
  report->add_option("--json", rjson, "Write the report list to this file");
  report->callback([&] {
    if (list) {
      for (std::size_t i = 0; i < gf_check_count(); ++i) std::cout << gf_check_name(i) << "\n";
      return;
    }
    if (all == !only.empty()) {
      std::cerr << "error: give either --all or --check\n";
      rc = kError;
      return;
    }
    gf_reports* r = nullptr;
    gf_status s = GF_OK;
    if (all) {
      s = gf_report_all(&r);
    } else {
      std::vector<const char*> names;
      for (const auto& name : only) names.push_back(name.c_str());
      s = gf_report_select(names.data(), names.size(), &r);
    }
    rc = finish(s, r, rjson, deterministic, verbose);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kError;
  }
  return rc;
}
