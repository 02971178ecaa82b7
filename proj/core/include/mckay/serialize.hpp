// JSON encodings of cyclotomic numbers, matrices, groups and tables, and
// the group-spec resolver shared by the command-line tools.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "mckay/algebra.hpp"
#include "mckay/chartab.hpp"
#include "mckay/cyclo.hpp"
#include "mckay/cyclo_matrix.hpp"
#include "mckay/groups.hpp"

namespace mckay {

/// Malformed input document.  `path` locates the offending field.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(path), message_(message) {}
  const std::string& path() const { return path_; }
  const std::string& message() const { return message_; }

 private:
  std::string path_;
  std::string message_;
};

/// {"conductor": N, "coeffs": {"k": "p/q", ...}}, zero coefficients omitted.
nlohmann::json to_json(const CycNum& x);
CycNum cycnum_from_json(const nlohmann::json& j, const std::string& path = "");

nlohmann::json to_json(const CycMatrix& m);
nlohmann::json to_json(const AlgebraElement& x, const GradedAlgebra& algebra);

/// {"name", "order", "exponent", "class_sizes", "class_orders"}.
nlohmann::json group_summary(const FiniteGroup& group, const ConjugacyStructure& classes);
nlohmann::json to_json(const CharacterTable& table);
nlohmann::json to_json(const McKayGraph& graph);

/// {"cayley": [[...]]} or {"generators": [[[a, b], [c, d]], ...]}.
FiniteGroup group_from_json(const nlohmann::json& j, const std::string& name);

/// An ADE label ("E8"), a named small group ("S3", "Z6"), or a path to a
/// JSON group file.  Throws InputError when none applies.
std::shared_ptr<const FiniteGroup> resolve_group(const std::string& spec);

nlohmann::json read_json_file(const std::string& path);

}  // namespace mckay
