#include <doctest.h>

#include "mckay/global.hpp"
#include "mckay/serialize.hpp"

using namespace mckay;

namespace {

const char* kConfig = MCKAY_TEST_DATA_DIR "/surface_a2_d4_e8.json";

std::string error_of(const nlohmann::json& j) {
  try {
    (void)parse_surface(j);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("surface parsing") {
  const SurfaceModel one = parse_surface(nlohmann::json::parse(
      R"({"picard_rank": 1, "intersection_matrix": [[1]], "points": [{"id": "p", "type": "A1"}]})"));
  CHECK(one.picard_rank == 1);
  CHECK(one.points.size() == 1);

  const SurfaceModel three = parse_surface_file(kConfig);
  CHECK(three.name == "a2_d4_e8");
  CHECK(three.points.size() == 3);
  CHECK(three.points[2].type.to_string() == "E8");
  CHECK(parse_surface(to_json(three)).points.size() == 3);
}

TEST_CASE("surface parsing errors name the field") {
  CHECK(error_of(nlohmann::json::parse(R"({"picard_rank": 2, "intersection_matrix": [[0,1],[2,0]]})")) ==
        "intersection_matrix: intersection matrix not symmetric");
  CHECK(error_of(nlohmann::json::parse(
            R"({"picard_rank": 1, "intersection_matrix": [[1]],
                "points": [{"id": "p", "type": "A1"}, {"id": "p", "type": "A2"}]})"))
            .rfind("points[1].id:", 0) == 0);
  CHECK(error_of(nlohmann::json::parse(
            R"({"picard_rank": 1, "intersection_matrix": [[1]], "points": [{"id": "p", "type": "D3"}]})"))
            .rfind("points[0].type:", 0) == 0);
  CHECK(error_of(nlohmann::json::parse(R"({"intersection_matrix": []})")).rfind("picard_rank:", 0) == 0);
  CHECK(error_of(nlohmann::json::parse(R"({"picard_rank": 2, "intersection_matrix": [[1, 0]]})"))
            .rfind("intersection_matrix:", 0) == 0);
}

TEST_CASE("A2 + D4 + E8 surface") {
  const GlobalModel model = assemble_global(parse_surface_file(kConfig));
  CHECK(model.resolution.dimension() == 18);
  CHECK(model.orbifold.dimension() == 18);
  CHECK(model.locals.size() == 3);

  const std::size_t ep = model.resolution.index_of("E[p:1]");
  for (std::size_t i = 0; i < model.resolution.dimension(); ++i) {
    const std::string& label = model.resolution.basis(i).label;
    if (label.rfind("E[q:", 0) == 0 || label.rfind("E[r:", 0) == 0 || label[0] == 'D') {
      CHECK(model.resolution.product(ep, i).empty());
    }
  }

  const VerificationReport r = verify_global(model);
  CHECK(r.pass());
  CHECK(r.diagnostics_pass());
  REQUIRE(r.blocks.size() == 3);
  CHECK(r.blocks[0].subject == "p:A2");

  VerificationReport local = verify_local(AdeLabel::parse("A2"));
  local.subject = "p:A2";
  CHECK(r.blocks[0].to_json() == local.to_json());
}

TEST_CASE("single A1 surface") {
  const SurfaceModel s = parse_surface(nlohmann::json::parse(
      R"({"picard_rank": 1, "intersection_matrix": [[1]], "points": [{"id": "p", "type": "A1"}]})"));
  const VerificationReport r = verify_global(s);
  CHECK(r.pass());
  CHECK(r.group.at("dimension") == nlohmann::json::array({4, 4}));
}

TEST_CASE("one-sided change of the intersection form is caught") {
  GlobalModel model = assemble_global(parse_surface_file(kConfig));
  const std::size_t d1 = model.resolution.index_of("D1"), d2 = model.resolution.index_of("D2");
  model.resolution.set_symmetric_product(d1, d2, scale(model.resolution.element(model.resolution.point()), CycNum(2L)));
  const VerificationReport r = verify_global(model);
  CHECK_FALSE(r.pass());
  const CheckResult* mult = r.find("multiplicativity");
  REQUIRE(mult != nullptr);
  CHECK_FALSE(mult->pass);
  CHECK(mult->witness.at("pair") == nlohmann::json::array({"D1", "D2"}));
  CHECK_FALSE(r.find("isometry")->pass);
}
