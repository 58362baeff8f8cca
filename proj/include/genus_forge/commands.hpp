#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genus_forge/funeq.hpp"
#include "genus_forge/rational.hpp"
#include "genus_forge/report.hpp"

namespace gforge {

/// "k=1/2,g2=3" -> {k: 1/2, g2: 3}. Empty text gives an empty map.
std::map<std::string, Rational> parse_params(const std::string& text);

std::vector<std::string> genus_names();

/// Exact value of a named genus on a catalog space, rendered as text.
/// Parameters not given stay symbolic. Without an order the smallest
/// truncation that determines the value is used.
std::string eval_genus(const std::string& genus, const std::string& space,
                       const std::map<std::string, Rational>& params, std::optional<int> order);

Json model_json(const std::string& space);

/// Relations "f5 = ..." / "a4 = ..." one per line, plus the JSON export.
struct SolveFeOutput {
  std::string text;
  Json json;
};
SolveFeOutput solve_fe_command(int order);

std::vector<VerificationReport> verify_theorem_a(const std::string& which, const std::string& genus, std::optional<int> order);
std::vector<VerificationReport> verify_s1(int codim, int degree);
std::vector<VerificationReport> verify_transition(const std::string& which, const Rational& e1, int order);
std::vector<VerificationReport> verify_cov(const std::string& tower, int order);
std::vector<VerificationReport> verify_hodge(int n, int lmax, int pmax);

struct CheckEntry {
  std::string name;
  std::function<VerificationReport()> run;
};

/// Every built-in check, in name order.
const std::vector<CheckEntry>& check_registry();

/// Runs the registry (or the entries whose names are listed); results sorted by check name.
std::vector<VerificationReport> report_all(const std::vector<std::string>& only = {});

Json reports_to_json(const std::vector<VerificationReport>& reports, bool deterministic);

}  // namespace gforge
