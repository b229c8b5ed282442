#include "fibcomm/descriptor.hpp"
#include "fibcomm/error.hpp"
#include "fibcomm/norm.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

using namespace fibcomm;
using namespace fibcomm::descriptor;
using json = nlohmann::json;

namespace {

struct Failure {
  ErrorCode code = ErrorCode::Internal;
  std::string message;
};

Failure failure_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  return {};
}

json minimal() {
  return json::parse(R"({
    "name": "toy", "betti": 2,
    "norm_source": {"kind": "dual_vertices", "vertices": [[1,1],[1,-1],[-1,1],[-1,-1]]},
    "faces": [{"id": 0, "dual_vertex": [1,1], "fibered": true,
               "polynomial": {"terms": [{"exp": [1,1], "coeff": 1}, {"exp": [0,0], "coeff": "-3"}]}}],
    "named_classes": {"A": [1, 1]}
  })");
}

} // namespace

TEST_CASE("bundled six22") {
  const auto d = bundled_descriptor("six22");
  CHECK(d.betti == 2);
  CHECK(d.norm_ball().dual_vertices().size() == 4);
  CHECK(d.faces.size() == 4);
  CHECK(d.basis_labels == std::vector<std::string>{"U", "T"});
  CHECK(d.named_classes.at("T") == CohomologyClass{0, 1});
  CHECK(d.volume_text == "4.0597664256");
  CHECK(d.flags.cusps == 2);
  CHECK(d.flags.all_fibrations_minimal);
  for (const auto& f : d.faces) {
    CHECK(f.fibered);
    REQUIRE(f.polynomial);
    // every face polynomial carries the whole norm ball
    CHECK(norm::norm_from_newton(*f.polynomial) == d.norm_ball());
  }
  CHECK(d.sources.contains("/volume"));
  CHECK(d.sources.contains("/norm_source"));
}

TEST_CASE("bundled magic: the face polynomial produces the declared ball") {
  const auto d = bundled_descriptor("magic");
  CHECK(d.betti == 3);
  CHECK(d.norm_ball().dual_vertices() ==
        std::vector<IntVector>{{-1, -1, 1}, {-1, 1, -1}, {-1, 1, 1}, {1, -1, -1}, {1, -1, 1}, {1, 1, -1}});
  CHECK(d.faces.size() == 6);
  for (const auto& f : d.faces) CHECK(norm::norm_from_newton(*f.polynomial) == d.norm_ball());
}

TEST_CASE("every bundled fibered class has a dilatation") {
  for (const auto& name : bundled_names()) {
    const auto d = bundled_descriptor(name);
    for (const auto& f : d.faces)
      for (const auto& w : norm::enumerate_primitive_classes(f, d.norm_ball(), 5))
        CHECK(laurent::largest_real_root(laurent::specialize(*f.polynomial, w)) > 1);
  }
}

TEST_CASE("round trip through canonical JSON") {
  for (const auto& name : bundled_names()) {
    const auto d = bundled_descriptor(name);
    const auto text = to_json(d).dump();
    const auto back = parse_descriptor(text);
    CHECK(back == d);
    CHECK(to_json(back).dump() == text);
  }
  const auto toy = parse_descriptor(minimal().dump());
  CHECK(parse_descriptor(to_json(toy).dump()) == toy);
  CHECK(toy.faces.size() == 4);
  CHECK(toy.face(0).polynomial->terms().at({0, 0}) == -3);
  // unlisted faces get fresh ids after the listed ones
  std::set<std::size_t> ids;
  for (const auto& f : toy.faces) ids.insert(f.id);
  CHECK(ids == std::set<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("parse errors carry a position") {
  auto f = failure_of([] { parse_descriptor(""); });
  CHECK(f.code == ErrorCode::ParseError);
  f = failure_of([] { parse_descriptor("{\"name\": \"x\", "); });
  CHECK(f.code == ErrorCode::ParseError);
  CHECK(f.message.find("byte") != std::string::npos);
  auto j = minimal();
  j["norm_source"].erase("vertices");
  f = failure_of([&] { parse_descriptor(j.dump()); });
  CHECK(f.code == ErrorCode::ParseError);
  CHECK(f.message.find("/norm_source") != std::string::npos);
  j = minimal();
  j["faces"][0]["polynomial"]["terms"][1]["coeff"] = 1.5;
  f = failure_of([&] { parse_descriptor(j.dump()); });
  CHECK(f.code == ErrorCode::ParseError);
  CHECK(f.message.find("/faces/0/polynomial/terms/1/coeff") != std::string::npos);
  j = minimal();
  j["volume"] = 4.05;
  CHECK(failure_of([&] { parse_descriptor(j.dump()); }).code == ErrorCode::ParseError);
  j["volume"] = "4.05x";
  CHECK(failure_of([&] { parse_descriptor(j.dump()); }).code == ErrorCode::ParseError);
  j = minimal();
  j["norm_source"]["kind"] = "triangulation";
  CHECK(failure_of([&] { parse_descriptor(j.dump()); }).code == ErrorCode::ParseError);
}

TEST_CASE("validation names the broken invariant") {
  auto j = minimal();
  j["named_classes"]["B"] = {1, 2, 3};
  auto f = failure_of([&] { parse_descriptor(j.dump()); });
  CHECK(f.code == ErrorCode::ValidationError);
  CHECK(f.message.find("named class 'B'") != std::string::npos);

  j = minimal();
  j["betti"] = 0;
  CHECK(failure_of([&] { parse_descriptor(j.dump()); }).code == ErrorCode::ValidationError);

  j = minimal();
  j["norm_source"]["vertices"] = {{1, 1}, {1, -1}};
  CHECK(failure_of([&] { parse_descriptor(j.dump()); }).code == ErrorCode::ValidationError);

  j = minimal();
  j["faces"][0]["dual_vertex"] = {2, 2};
  CHECK(failure_of([&] { parse_descriptor(j.dump()); }).code == ErrorCode::ValidationError);

  j = minimal();
  j["faces"][0]["polynomial"]["terms"][0]["exp"] = {1, 1, 1};
  CHECK(failure_of([&] { parse_descriptor(j.dump()); }).code == ErrorCode::ValidationError);

  j = minimal();
  j["symmetries"] = {{"generators", {{{2, 0}, {0, 1}}}}};
  CHECK(failure_of([&] { parse_descriptor(j.dump()); }).code == ErrorCode::ValidationError);

  // swapping coordinates does not preserve a rectangle
  j = minimal();
  j["norm_source"]["vertices"] = {{2, 0}, {-2, 0}, {0, 1}, {0, -1}};
  j["faces"] = json::array();
  j["symmetries"] = {{"generators", {{{0, 1}, {1, 0}}}}};
  f = failure_of([&] { parse_descriptor(j.dump()); });
  CHECK(f.code == ErrorCode::ValidationError);
  CHECK(f.message.find("preserves the norm ball") != std::string::npos);

  j = minimal();
  j["cusps"] = -1;
  CHECK(failure_of([&] { parse_descriptor(j.dump()); }).code == ErrorCode::ValidationError);
}

TEST_CASE("load from disk") {
  const auto path = std::filesystem::temp_directory_path() / "fibcomm_descriptor_test.json";
  {
    std::ofstream out(path);
    out << minimal().dump(2);
  }
  CHECK(load_descriptor(path).name == "toy");
  {
    std::ofstream out(path, std::ios::trunc);
  }
  CHECK(failure_of([&] { load_descriptor(path); }).code == ErrorCode::ParseError);
  std::filesystem::remove(path);
  CHECK(failure_of([&] { load_descriptor(path); }).code == ErrorCode::ParseError);
  CHECK(failure_of([] { bundled_descriptor("no-such-manifold"); }).code == ErrorCode::InvalidArgument);
}
