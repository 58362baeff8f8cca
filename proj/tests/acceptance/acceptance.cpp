// One line per acceptance criterion. Runs the built-in checks through the C
// API and adds the value expectations each criterion names.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "genus_forge/genus_forge.h"

namespace {

struct Row {
  std::string check;
  gf_check_status status;
  std::string lhs, rhs;
  long millis;
};

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> checks;
  // extra expectations: check -> (lhs, rhs); empty string means "don't care"
  std::map<std::string, std::pair<std::string, std::string>> values;
  long max_millis_each = 0;
};

}  // namespace

int main() {
  gf_reports* all = nullptr;
  if (gf_report_all(&all) != GF_OK) {
    std::printf("criterion 0: FAIL (report_all: %s)\n", gf_last_error());
    return 1;
  }
  std::map<std::string, Row> rows;
  for (size_t i = 0; i < gf_reports_count(all); ++i) {
    Row r{gf_reports_check(all, i), gf_reports_status(all, i), gf_reports_lhs(all, i), gf_reports_rhs(all, i),
          gf_reports_millis(all, i)};
    rows[r.check] = r;
  }
  gf_reports_free(all);

  const std::vector<Criterion> criteria{
      {1, "functional equation solver relations and order-20 solve", {"fe-relations", "fe-solve-order-20"}, {}, 120000},
      {2, "Weierstrass recovery from the order-12 solution", {"weierstrass-recovery"}, {}},
      {3, "sigma-form membership to degree 12 and algebraic expansion", {"algebraic-expansion", "sigma-membership"}, {}},
      {4, "residue vanishing r=2 deg 8, r=3 deg 6, negative control",
       {"s1-negative-control", "s1-r2-degree8", "s1-r3-degree6"}, {}, 300000},
      {5, "blow-up formula with calibrated sign",
       {"theorem-a-euler-bl-pt-p2", "theorem-a-todd-bl-pt-p2", "theorem-a-universal-bl-line-p3",
        "theorem-a-universal-bl-line-p3:specialized"},
       {{"theorem-a-todd-bl-pt-p2", {"1/1", "1/1 + 0/1"}}, {"theorem-a-euler-bl-pt-p2", {"4/1", "3/1 + 1/1"}}}},
      {6, "projective identities for todd, euler, universal",
       {"projective-identities-euler", "projective-identities-todd", "projective-identities-universal"}, {}},
      {7, "four-term blow-up difference on (P3, line)",
       {"blowup-difference-euler-line-p3", "blowup-difference-universal-line-p3"},
       {{"blowup-difference-euler-line-p3", {"-2/1", "-2/1"}}}},
      {8, "transition e1=1/2 and two-step tower in P3", {"cov-pt+line-p3", "transition-bl-pt-p2-line"}, {}},
      {9, "singular genus resolution independence and log-terminal check",
       {"singular-genus-rejects-non-log-terminal", "singular-genus-resolution-independence"}, {}},
      {10, "hyperplane recursion n<=3, l<=3, p<=n with spot value",
       {"hodge-p1", "hodge-p2", "hodge-p3", "hodge-spot-p2-p1-l1"},
       {{"hodge-spot-p2-p1-l1", {"0/1", "-1/1 + 0/1 + 1/1"}}}},
      {11, "q-product membership and q=0 chi_y comparison", {"q-product-chi-y", "q-product-membership"}, {}},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = true;
    std::string why;
    for (const auto& name : c.checks) {
      const auto it = rows.find(name);
      if (it == rows.end()) {
        ok = false;
        why += " missing:" + name;
        continue;
      }
      const Row& r = it->second;
      if (r.status != GF_CHECK_PASS) {
        ok = false;
        why += " " + name + (r.status == GF_CHECK_FAIL ? ":fail" : ":error");
      }
      if (c.max_millis_each > 0 && r.millis > c.max_millis_each) {
        ok = false;
        why += " " + name + ":slow(" + std::to_string(r.millis) + "ms)";
      }
      const auto v = c.values.find(name);
      if (v != c.values.end() && (r.lhs != v->second.first || r.rhs != v->second.second)) {
        ok = false;
        why += " " + name + ":value(" + r.lhs + " vs " + r.rhs + ")";
      }
    }
    long ms = 0;
    for (const auto& name : c.checks)
      if (rows.count(name)) ms += rows[name].millis;
    std::printf("criterion %d: %s  %s  [%ld ms]%s\n", c.id, ok ? "PASS" : "FAIL", c.title, ms, why.c_str());
    failures += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
