// Global models: a proper surface with isolated ADE points, described by
// the intersection form on classes pulled back from the singular surface.
// Every point class is identified with the single class [pt].
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mckay/correspondence.hpp"

namespace mckay {

struct SingularPoint {
  std::string id;
  AdeLabel type;
};

struct SurfaceModel {
  std::string name = "surface";
  std::size_t picard_rank = 0;
  std::vector<std::vector<long>> intersection_matrix;
  std::vector<SingularPoint> points;
};

/// {"picard_rank": b, "intersection_matrix": [[...]], "points": [{"id", "type"}]}.
/// Throws InputError naming the offending field.
SurfaceModel parse_surface(const nlohmann::json& config, const std::string& name = "surface");
SurfaceModel parse_surface_file(const std::string& path);
nlohmann::json to_json(const SurfaceModel& model);

struct GlobalModel {
  SurfaceModel surface;
  /// One local model per distinct point type.
  std::map<AdeLabel, std::shared_ptr<const LocalModel>> locals;
  /// Cohomology ring of the resolution: 1, D_i, E[x:rho], [pt].
  GradedAlgebra resolution;
  /// Orbifold ring of the stack: 1, D_i, f[x:c], [pt].
  GradedAlgebra orbifold;
  /// Identity on 1, D_i, [pt]; Psi of each point on its curves.
  std::vector<AlgebraElement> images;
  std::vector<std::uint64_t> weights;

  WeightedMap weighted_map() const;
};

/// Local models of distinct types are built concurrently.
GlobalModel assemble_global(const SurfaceModel& surface, const CharacterTableOptions& options = {});

/// Exact checks on the global map plus one verify_local block per point.
VerificationReport verify_global(const GlobalModel& model);
VerificationReport verify_global(const SurfaceModel& surface, const CharacterTableOptions& options = {});

}  // namespace mckay
