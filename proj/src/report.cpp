#include "powelem/report.hpp"

#include "powelem/poly_io.hpp"

namespace powelem {

nlohmann::json to_json(const VerificationReport& report) {
  const auto& c = report.case_tuple;
  nlohmann::json j;
  j["case"] = {{"d", c.d}, {"n", c.n}, {"i", c.i}, {"N", nullptr}};
  if (c.order) {
    j["case"]["N"] = *c.order;
  }
  j["check"] = report.check;
  j["status"] = report.passed ? "pass" : "fail";
  j["witness"] = report.witness ? nlohmann::json(*report.witness) : nlohmann::json(nullptr);
  j["millis"] = report.millis;
  if (!report.details.empty()) {
    j["details"] = report.details;
  }
  return j;
}

bool report_less(const VerificationReport& a, const VerificationReport& b) {
  if (a.check != b.check) {
    return a.check < b.check;
  }
  if (a.case_tuple != b.case_tuple) {
    return a.case_tuple < b.case_tuple;
  }
  return a.details.dump() < b.details.dump();
}

std::optional<std::string> difference_witness(const Polynomial& lhs, const Polynomial& rhs) {
  const Polynomial diff = lhs - rhs;
  if (diff.is_zero()) {
    return std::nullopt;
  }
  return term_to_text(diff.signature(), diff.leading_term());
}

}  // namespace powelem
