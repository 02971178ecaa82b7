#include "mckay/report.hpp"

#include <algorithm>

namespace mckay {

nlohmann::json to_json(const CheckResult& check) {
  nlohmann::json out = {{"name", check.name}, {"pass", check.pass}};
  if (!check.witness.is_null()) out["witness"] = check.witness;
  if (!check.detail.empty()) out["detail"] = check.detail;
  return out;
}

bool VerificationReport::pass() const {
  auto ok = [](const CheckResult& c) { return c.pass; };
  return std::all_of(checks.begin(), checks.end(), ok) && std::all_of(axioms.begin(), axioms.end(), ok) &&
         (!lemma || lemma->pass) &&
         std::all_of(blocks.begin(), blocks.end(), [](const VerificationReport& b) { return b.pass(); });
}

bool VerificationReport::diagnostics_pass() const {
  return std::all_of(diagnostics.begin(), diagnostics.end(), [](const CheckResult& c) { return c.pass; }) &&
         std::all_of(blocks.begin(), blocks.end(), [](const VerificationReport& b) { return b.diagnostics_pass(); });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto* list : {&checks, &axioms, &diagnostics}) {
    for (const auto& c : *list) {
      if (c.name == name) return &c;
    }
  }
  if (lemma && lemma->name == name) return &*lemma;
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  auto list = [](const std::vector<CheckResult>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : v) a.push_back(mckay::to_json(c));
    return a;
  };
  nlohmann::json out = {{"subject", subject},
                        {"group", group},
                        {"checks", list(checks)},
                        {"axioms", list(axioms)},
                        {"diagnostics", list(diagnostics)},
                        {"pass", pass()}};
  if (lemma) out["lemma"] = mckay::to_json(*lemma);
  if (!phi.is_null()) out["phi"] = phi;
  if (!blocks.empty()) {
    nlohmann::json b = nlohmann::json::array();
    for (const auto& r : blocks) b.push_back(r.to_json());
    out["blocks"] = b;
  }
  return out;
}

}  // namespace mckay
