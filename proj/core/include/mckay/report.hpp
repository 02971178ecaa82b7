// Verification reports: named pass/fail checks with counterexample
// witnesses.  Failures are data; nothing here throws.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mckay {

struct CheckResult {
  std::string name;
  bool pass = true;
  /// First violated identity (labels and both sides), null on success.
  nlohmann::json witness = nullptr;
  /// Extra facts such as determinants or error magnitudes.
  nlohmann::json detail = nlohmann::json::object();
};

struct VerificationReport {
  std::string subject;
  nlohmann::json group = nlohmann::json::object();
  /// Exact theorem checks: multiplicativity, additive-rank, isometry,
  /// equivariance.
  std::vector<CheckResult> checks;
  /// Ring axioms of the algebras on both sides.
  std::vector<CheckResult> axioms;
  /// Nondegeneracy of the character-table minor.
  std::optional<CheckResult> lemma;
  /// Floating-point re-evaluation; advisory, never affects pass().
  std::vector<CheckResult> diagnostics;
  nlohmann::json phi;
  std::vector<VerificationReport> blocks;
  /// Wall-clock milliseconds per stage; kept out of to_json().
  std::map<std::string, double> timings;

  bool pass() const;
  bool diagnostics_pass() const;
  const CheckResult* find(const std::string& name) const;
  /// Deterministic content only (no timings).
  nlohmann::json to_json() const;
};

nlohmann::json to_json(const CheckResult& check);

}  // namespace mckay
