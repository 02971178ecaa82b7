#include "mckay/serialize.hpp"

#include <filesystem>
#include <fstream>

namespace mckay {

nlohmann::json to_json(const CycNum& x) {
  nlohmann::json coeffs = nlohmann::json::object();
  const auto c = x.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) coeffs[std::to_string(k)] = c[k].get_str();
  }
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const nlohmann::json& j, const std::string& path) {
  if (j.is_number_integer()) return CycNum(j.get<long>());
  if (j.is_string()) {
    try {
      Rational r(j.get<std::string>());
      r.canonicalize();
      return CycNum(r);
    } catch (const std::invalid_argument&) {
      throw InputError(path, "not a rational number");
    }
  }
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs")) {
    throw InputError(path, "expected {\"conductor\": N, \"coeffs\": {...}}");
  }
  const auto& n = j.at("conductor");
  if (!n.is_number_integer() || n.get<long>() < 1) throw InputError(path + ".conductor", "conductor must be >= 1");
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_object()) throw InputError(path + ".coeffs", "expected an object");
  std::map<std::int64_t, Rational> terms;
  for (const auto& [key, value] : coeffs.items()) {
    const std::string field = path + ".coeffs." + key;
    std::int64_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError(field, "exponent is not an integer");
    }
    terms[k] += cycnum_from_json(value, field).to_rational().value();
  }
  return CycNum::from_terms(static_cast<std::uint32_t>(n.get<long>()), terms);
}

nlohmann::json to_json(const CycMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const AlgebraElement& x, const GradedAlgebra& algebra) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [i, c] : x) out[algebra.basis(i).label] = to_json(c);
  return out;
}

nlohmann::json group_summary(const FiniteGroup& group, const ConjugacyStructure& classes) {
  nlohmann::json orders = nlohmann::json::array();
  for (auto r : classes.representatives) orders.push_back(group.element_order(r));
  return {{"name", group.name()},
          {"order", group.order()},
          {"exponent", classes.exponent},
          {"classes", classes.size()},
          {"class_sizes", classes.class_sizes},
          {"class_orders", orders}};
}

nlohmann::json to_json(const CharacterTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : table.row(i)) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  nlohmann::json out = {{"group", group_summary(table.group(), table.classes())},
                        {"conductor", table.conductor()},
                        {"degrees", std::vector<long>(table.degrees().begin(), table.degrees().end())},
                        {"rows", rows}};
  if (table.natural_character()) {
    nlohmann::json nat = nlohmann::json::array();
    for (const auto& v : *table.natural_character()) nat.push_back(to_json(v));
    out["natural_character"] = nat;
  }
  return out;
}

nlohmann::json to_json(const McKayGraph& graph) {
  return {{"adjacency", graph.adjacency},
          {"dims", graph.dims},
          {"trivial_vertex", graph.trivial_vertex},
          {"affine", graph.diagram.affine.to_string()},
          {"finite", graph.diagram.finite.to_string()}};
}

namespace {

FiniteGroup group_from_generators_json(const nlohmann::json& gens, const std::string& name) {
  if (!gens.is_array() || gens.empty()) throw InputError("generators", "expected a non-empty array of 2x2 matrices");
  std::vector<Matrix2> mats;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = "generators[" + std::to_string(i) + "]";
    const auto& m = gens[i];
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 || !m[1].is_array() ||
        m[1].size() != 2) {
      throw InputError(path, "expected [[a, b], [c, d]]");
    }
    Matrix2 x;
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        x[2 * r + c] =
            cycnum_from_json(m[r][c], path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
    mats.push_back(x);
  }
  try {
    return group_from_generators(mats, name);
  } catch (const GroupError& e) {
    throw InputError("generators", e.what());
  }
}

FiniteGroup group_from_cayley_json(const nlohmann::json& table, const std::string& name) {
  if (!table.is_array() || table.empty()) throw InputError("cayley", "expected a non-empty square array");
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const std::string path = "cayley[" + std::to_string(r) + "]";
    if (!table[r].is_array()) throw InputError(path, "expected an array");
    std::vector<std::uint32_t> row;
    for (std::size_t c = 0; c < table[r].size(); ++c) {
      const auto& v = table[r][c];
      if (!v.is_number_integer() || v.get<long>() < 0) {
        throw InputError(path + "[" + std::to_string(c) + "]", "expected a non-negative integer");
      }
      row.push_back(v.get<std::uint32_t>());
    }
    rows.push_back(std::move(row));
  }
  try {
    return group_from_cayley(rows, name);
  } catch (const GroupError& e) {
    throw InputError("cayley", e.what());
  }
}

}  // namespace

FiniteGroup group_from_json(const nlohmann::json& j, const std::string& name) {
  if (!j.is_object()) throw InputError("", "group file must hold a JSON object");
  const std::string n = j.value("name", name);
  if (j.contains("cayley")) return group_from_cayley_json(j.at("cayley"), n);
  if (j.contains("generators")) return group_from_generators_json(j.at("generators"), n);
  throw InputError("", "group file needs a \"cayley\" or \"generators\" field");
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path, std::string("invalid JSON: ") + e.what());
  }
}

std::shared_ptr<const FiniteGroup> resolve_group(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    return std::make_shared<const FiniteGroup>(
        group_from_json(read_json_file(spec), std::filesystem::path(spec).stem().string()));
  }
  std::string ade_error;
  try {
    return std::make_shared<const FiniteGroup>(build_binary_polyhedral(AdeLabel::parse(spec)));
  } catch (const std::invalid_argument& e) {
    ade_error = e.what();
  }
  try {
    return std::make_shared<const FiniteGroup>(build_named_group(spec));
  } catch (const std::invalid_argument&) {
  }
  if (!spec.empty() && (spec[0] == 'A' || spec[0] == 'D' || spec[0] == 'E')) throw InputError("group", ade_error);
  throw InputError("group", "unknown group '" + spec + "' (expected an ADE label, S3, S4, Alt4, Dih8, Q8, Z<n> or a file)");
}

}  // namespace mckay
