#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "powelem/poly.hpp"

namespace powelem {

/// Parameters identifying one verification case. Unused fields stay 0 / empty.
struct CaseTuple {
  int d = 0;
  int n = 0;
  int i = 0;
  std::optional<int> order;

  auto operator<=>(const CaseTuple&) const = default;
};

struct VerificationReport {
  std::string check;
  CaseTuple case_tuple;
  bool passed = false;
  /// Canonical text of the first mismatching term, when there is one.
  std::optional<std::string> witness;
  std::int64_t millis = 0;
  /// Check-specific fields (seed, generic_nonzero, conventions in force, ...).
  nlohmann::json details = nlohmann::json::object();
};

/// {"case": {...}, "check": ..., "status": "pass"|"fail", "witness": ..., "millis": ...}
/// plus "details" when non-empty.
nlohmann::json to_json(const VerificationReport& report);

/// Canonical report order: by check name, then case tuple, then details.
bool report_less(const VerificationReport& a, const VerificationReport& b);

/// Leading term of lhs - rhs in text form, or nullopt when they are equal.
std::optional<std::string> difference_witness(const Polynomial& lhs, const Polynomial& rhs);

/// Runs `body` and records its wall-clock time in `report.millis`.
template <class Body>
void run_timed(VerificationReport& report, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
}

}  // namespace powelem
