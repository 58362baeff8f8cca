#include "genus_forge/report.hpp"

namespace gforge {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

VerificationReport make_report(std::string check, bool pass, std::string lhs, std::string rhs,
                               std::optional<std::string> where) {
  VerificationReport r;
  r.check = std::move(check);
  r.status = pass ? Status::Pass : Status::Fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  if (!pass) r.first_discrepancy = std::move(where);
  return r;
}

VerificationReport error_report(std::string check, const std::string& message) {
  VerificationReport r;
  r.check = std::move(check);
  r.status = Status::Error;
  r.first_discrepancy = message;
  return r;
}

nlohmann::json to_json(const VerificationReport& r, bool deterministic) {
  nlohmann::json j;
  j["check"] = r.check;
  j["status"] = status_name(r.status);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["first_discrepancy"] = r.first_discrepancy ? nlohmann::json(*r.first_discrepancy) : nlohmann::json(nullptr);
  j["millis"] = deterministic ? 0L : r.millis;
  return j;
}

VerificationReport combine(std::string check, const std::vector<VerificationReport>& parts) {
  VerificationReport out;
  out.check = std::move(check);
  out.status = Status::Pass;
  for (const auto& p : parts) {
    out.details.push_back(p.check + ": " + status_name(p.status));
    if (out.status == Status::Pass && !p.passed()) {
      out.status = p.status;
      out.lhs = p.lhs;
      out.rhs = p.rhs;
      out.first_discrepancy = p.check + ": " + p.first_discrepancy.value_or("");
    }
  }
  if (out.status == Status::Pass) {
    for (const auto& p : parts) {
      out.lhs += (out.lhs.empty() ? "" : "; ") + p.lhs;
      out.rhs += (out.rhs.empty() ? "" : "; ") + p.rhs;
    }
  }
  return out;
}

}  // namespace gforge
