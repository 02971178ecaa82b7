#include "mckay/global.hpp"

#include <chrono>
#include <filesystem>
#include <future>
#include <set>
#include <stdexcept>

#include "mckay/orbifold.hpp"
#include "mckay/resolution.hpp"
#include "mckay/serialize.hpp"

namespace mckay {

namespace {

std::string point_label(char kind, const std::string& id, std::size_t index) {
  return std::string(1, kind) + "[" + id + ":" + std::to_string(index) + "]";
}

// Copies the degree-1 products of a local ring into the global ring, with
// local unit and point classes sent to the global ones.
void embed_block(GradedAlgebra& global, const GradedAlgebra& local, const std::vector<std::size_t>& index_map) {
  for (auto a : local.indices_of_degree(1)) {
    for (auto b : local.indices_of_degree(1)) {
      AlgebraElement value;
      for (const auto& [k, c] : local.product(a, b)) {
        if (k == local.point()) {
          add_term(value, global.point(), c);
        } else if (k == local.unit()) {
          add_term(value, global.unit(), c);
        } else {
          add_term(value, index_map[k], c);
        }
      }
      global.set_product(index_map[a], index_map[b], std::move(value));
    }
  }
}

GradedAlgebra make_ring(const std::string& name, const SurfaceModel& s,
                        const std::vector<std::pair<std::string, const GradedAlgebra*>>& blocks, char kind,
                        const std::vector<std::vector<std::size_t>>& local_ids,
                        std::vector<std::vector<std::size_t>>& index_maps) {
  std::vector<BasisVector> basis{{"1", 0}};
  for (std::size_t i = 0; i < s.picard_rank; ++i) basis.push_back({"D" + std::to_string(i + 1), 1});
  index_maps.assign(blocks.size(), {});
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    const GradedAlgebra& local = *blocks[p].second;
    index_maps[p].assign(local.dimension(), 0);
    const auto deg1 = local.indices_of_degree(1);
    for (std::size_t i = 0; i < deg1.size(); ++i) {
      index_maps[p][deg1[i]] = basis.size();
      basis.push_back({point_label(kind, blocks[p].first, local_ids[p][i]), 1});
    }
  }
  basis.push_back({"[pt]", 2});
  GradedAlgebra ring(name, std::move(basis));
  for (std::size_t b = 0; b < ring.dimension(); ++b) ring.set_symmetric_product(ring.unit(), b, ring.element(b));
  for (std::size_t i = 0; i < s.picard_rank; ++i) {
    for (std::size_t j = 0; j < s.picard_rank; ++j) {
      if (s.intersection_matrix[i][j] != 0) {
        ring.set_product(i + 1, j + 1, {{ring.point(), CycNum(s.intersection_matrix[i][j])}});
      }
    }
  }
  for (std::size_t p = 0; p < blocks.size(); ++p) embed_block(ring, *blocks[p].second, index_maps[p]);
  return ring;
}

}  // namespace

SurfaceModel parse_surface(const nlohmann::json& config, const std::string& name) {
  if (!config.is_object()) throw InputError("", "surface config must be a JSON object");
  SurfaceModel s;
  s.name = config.value("name", name);

  if (!config.contains("picard_rank")) throw InputError("picard_rank", "missing field");
  const auto& b = config.at("picard_rank");
  if (!b.is_number_integer() || b.get<long>() < 0) throw InputError("picard_rank", "must be a non-negative integer");
  s.picard_rank = b.get<std::size_t>();

  if (!config.contains("intersection_matrix")) throw InputError("intersection_matrix", "missing field");
  const auto& q = config.at("intersection_matrix");
  if (!q.is_array() || q.size() != s.picard_rank) {
    throw InputError("intersection_matrix", "expected " + std::to_string(s.picard_rank) + " rows");
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    const std::string row_path = "intersection_matrix[" + std::to_string(i) + "]";
    if (!q[i].is_array() || q[i].size() != s.picard_rank) {
      throw InputError(row_path, "expected " + std::to_string(s.picard_rank) + " entries");
    }
    std::vector<long> row;
    for (std::size_t j = 0; j < q[i].size(); ++j) {
      if (!q[i][j].is_number_integer()) throw InputError(row_path + "[" + std::to_string(j) + "]", "expected an integer");
      row.push_back(q[i][j].get<long>());
    }
    s.intersection_matrix.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < s.picard_rank; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (s.intersection_matrix[i][j] != s.intersection_matrix[j][i]) {
        throw InputError("intersection_matrix", "intersection matrix not symmetric");
      }
    }
  }

  const auto& pts = config.contains("points") ? config.at("points") : nlohmann::json::array();
  if (!pts.is_array()) throw InputError("points", "expected an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string path = "points[" + std::to_string(i) + "]";
    const auto& p = pts[i];
    if (!p.is_object() || !p.contains("id") || !p.at("id").is_string()) throw InputError(path + ".id", "missing string id");
    if (!p.contains("type") || !p.at("type").is_string()) throw InputError(path + ".type", "missing ADE type");
    const std::string id = p.at("id").get<std::string>();
    if (id.empty() || id.find_first_of(":[]") != std::string::npos) {
      throw InputError(path + ".id", "ids must be non-empty and avoid ':', '[' and ']'");
    }
    if (!seen.insert(id).second) throw InputError(path + ".id", "duplicate point id '" + id + "'");
    AdeLabel type;
    try {
      type = AdeLabel::parse(p.at("type").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(path + ".type", e.what());
    }
    s.points.push_back({id, type});
  }
  return s;
}

SurfaceModel parse_surface_file(const std::string& path) {
  return parse_surface(read_json_file(path), std::filesystem::path(path).stem().string());
}

nlohmann::json to_json(const SurfaceModel& model) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : model.points) pts.push_back({{"id", p.id}, {"type", p.type.to_string()}});
  return {{"name", model.name},
          {"picard_rank", model.picard_rank},
          {"intersection_matrix", model.intersection_matrix},
          {"points", pts}};
}

WeightedMap GlobalModel::weighted_map() const { return WeightedMap{&resolution, &orbifold, images, weights}; }

GlobalModel assemble_global(const SurfaceModel& surface, const CharacterTableOptions& options) {
  std::map<AdeLabel, std::future<LocalModel>> pending;
  for (const auto& p : surface.points) {
    if (!pending.count(p.type)) {
      pending.emplace(p.type, std::async(std::launch::async, [label = p.type, options] {
                        return build_local_model(label, options);
                      }));
    }
  }
  std::map<AdeLabel, std::shared_ptr<const LocalModel>> locals;
  std::map<AdeLabel, std::shared_ptr<const GradedAlgebra>> invariants;
  for (auto& [label, fut] : pending) {
    auto model = std::make_shared<const LocalModel>(fut.get());
    invariants.emplace(label, std::make_shared<const GradedAlgebra>(
                                  invariant_subalgebra(model->orbifold, *model->group, model->table->classes())));
    locals.emplace(label, std::move(model));
  }

  std::vector<std::pair<std::string, const GradedAlgebra*>> res_blocks, orb_blocks;
  std::vector<std::vector<std::size_t>> res_ids, orb_ids;
  for (const auto& p : surface.points) {
    const LocalModel& m = *locals.at(p.type);
    res_blocks.emplace_back(p.id, &m.resolution);
    orb_blocks.emplace_back(p.id, invariants.at(p.type).get());
    res_ids.push_back(m.psi.irreps);
    orb_ids.push_back(m.psi.classes);
  }
  std::vector<std::vector<std::size_t>> res_maps, orb_maps;
  GradedAlgebra resolution = make_ring("resolution(" + surface.name + ")", surface, res_blocks, 'E', res_ids, res_maps);
  GradedAlgebra orbifold = make_ring("orbifold(" + surface.name + ")", surface, orb_blocks, 'f', orb_ids, orb_maps);

  std::vector<AlgebraElement> images(resolution.dimension());
  std::vector<std::uint64_t> weights(resolution.dimension(), 1);
  images[resolution.unit()] = orbifold.element(orbifold.unit());
  images[resolution.point()] = orbifold.element(orbifold.point());
  for (std::size_t i = 0; i < surface.picard_rank; ++i) images[i + 1] = orbifold.element(i + 1);
  for (std::size_t p = 0; p < surface.points.size(); ++p) {
    const LocalModel& m = *locals.at(surface.points[p].type);
    const GradedAlgebra& inv = *orb_blocks[p].second;
    for (std::size_t c = 0; c < m.psi.irreps.size(); ++c) {
      const std::size_t src = res_maps[p][m.resolution.index_of(curve_label(m.psi.irreps[c]))];
      weights[src] = m.psi.scale;
      for (std::size_t r = 0; r < m.psi.classes.size(); ++r) {
        const std::size_t tgt = orb_maps[p][inv.index_of(class_sum_label(m.psi.classes[r]))];
        add_term(images[src], tgt, m.psi.matrix(r, c));
      }
    }
  }
  return GlobalModel{surface, std::move(locals), std::move(resolution), std::move(orbifold), std::move(images),
                     std::move(weights)};
}

VerificationReport verify_global(const GlobalModel& model) {
  using Clock = std::chrono::steady_clock;
  VerificationReport report;
  report.subject = model.surface.name;
  report.group = {{"surface", to_json(model.surface)},
                  {"dimension", {model.resolution.dimension(), model.orbifold.dimension()}},
                  {"realization", "cohomological: every point class is identified with [pt]"}};

  std::map<AdeLabel, std::future<VerificationReport>> pending;
  for (const auto& [label, local] : model.locals) {
    pending.emplace(label, std::async(std::launch::async, [local] { return verify_local(*local); }));
  }
  std::map<AdeLabel, VerificationReport> local_reports;
  for (auto& [label, fut] : pending) local_reports.emplace(label, fut.get());

  const auto start = Clock::now();
  const WeightedMap map = model.weighted_map();
  report.checks.push_back(check_multiplicativity(map));
  report.checks.push_back(check_additive_rank(map));
  report.checks.push_back(check_isometry(map));

  CheckResult equiv{"equivariance"};
  for (const auto& p : model.surface.points) {
    VerificationReport block = local_reports.at(p.type);
    block.subject = p.id + ":" + p.type.to_string();
    block.timings.clear();
    const CheckResult* local_equiv = block.find("equivariance");
    if (equiv.pass && (local_equiv == nullptr || !local_equiv->pass)) {
      equiv.pass = false;
      equiv.witness = {{"point", p.id}, {"local", local_equiv ? local_equiv->witness : nlohmann::json()}};
    }
    report.blocks.push_back(std::move(block));
  }
  equiv.detail["points"] = model.surface.points.size();
  report.checks.push_back(equiv);
  report.timings["checks"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  for (auto& c : algebra_axioms(model.resolution, "resolution", false)) report.axioms.push_back(std::move(c));
  for (auto& c : algebra_axioms(model.orbifold, "orbifold", false)) report.axioms.push_back(std::move(c));
  report.diagnostics = float_checks(map);

  nlohmann::json phi = nlohmann::json::object();
  for (std::size_t i = 0; i < model.resolution.dimension(); ++i) {
    phi[model.resolution.basis(i).label] = {{"image", to_json(model.images[i], model.orbifold)},
                                            {"weight", model.weights[i]}};
  }
  report.phi = {{"convention", "image = sqrt(weight) * phi"}, {"columns", phi}};
  return report;
}

VerificationReport verify_global(const SurfaceModel& surface, const CharacterTableOptions& options) {
  return verify_global(assemble_global(surface, options));
}

}  // namespace mckay
