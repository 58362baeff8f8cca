#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gforge {

enum class Status { Pass, Fail, Error };

const char* status_name(Status s);

/// One theorem-instance check. lhs/rhs are exact serialized values.
struct VerificationReport {
  std::string check;
  Status status = Status::Error;
  std::string lhs, rhs;
  std::optional<std::string> first_discrepancy;
  long millis = 0;
  /// Sub-results that are not part of the JSON schema but help humans.
  std::vector<std::string> details;

  bool passed() const { return status == Status::Pass; }
};

VerificationReport make_report(std::string check, bool pass, std::string lhs, std::string rhs,
                               std::optional<std::string> where = std::nullopt);
VerificationReport error_report(std::string check, const std::string& message);

/// {"check","status","lhs","rhs","first_discrepancy","millis"}; with
/// deterministic set, millis is written as 0.
nlohmann::json to_json(const VerificationReport& r, bool deterministic = false);

/// Runs fn, turning exceptions into error reports and filling in millis.
template <class Fn>
VerificationReport timed(const std::string& check, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r = error_report(check, e.what());
  }
  if (r.check.empty()) r.check = check;
  r.millis = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  return r;
}

/// Conjunction of several sub-checks: passes iff all pass; the first failing
/// one supplies lhs/rhs/locator.
VerificationReport combine(std::string check, const std::vector<VerificationReport>& parts);

}  // namespace gforge
