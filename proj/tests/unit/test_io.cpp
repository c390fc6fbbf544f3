#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cubeprop/error.hpp"
#include "cubeprop/generate.hpp"
#include "cubeprop/io.hpp"
#include "cubeprop/presheaf.hpp"

using namespace cubeprop;

TEST_CASE("presheaves and maps round trip through JSON") {
  Rng rng(53);
  GenConfig cfg;
  for (int i = 0; i < 30; ++i) {
    TCSet x = random_tcset(rng, cfg);
    CHECK(tcset_from_json(to_json(x)) == x);
    CHECK(tcset_from_json(Json::parse(to_json(x).dump())) == x);
  }
  for (int i = 0; i < 20; ++i) {
    Instance inst = random_fibrant_mono(rng, cfg);
    Json j = to_json(inst.map);
    CHECK(is_morphism_json(j));
    CHECK(tcsetmor_from_json(j) == inst.map);
  }
  CHECK_FALSE(is_morphism_json(to_json(yoneda(1, 1))));
}

TEST_CASE("hand-written presheaf with omitted tables") {
  Json j = Json::parse(R"({"trunc": 1, "levels": {"0": ["a", "b"], "1": ["a", "b"]}})");
  CHECK(tcset_from_json(j) == delta_const({"a", "b"}, 1));
}

TEST_CASE("decoding errors name the JSON path") {
  Json j = to_json(yoneda(1, 1));
  Json bad_level = j;
  bad_level["levels"]["0"] = 3;
  CHECK_THROWS_WITH_AS(tcset_from_json(bad_level), doctest::Contains("$.levels"), ParseError);
  Json bad_action = j;
  bad_action["action"]["1->0:[c0]"] = Json::array();
  CHECK_THROWS_AS(tcset_from_json(bad_action), ParseError);
  Json broken = j;
  broken["action"]["1->1:[c0]"]["1->1:[v0]"] = "1->1:[c1]";
  CHECK_THROWS_AS(tcset_from_json(broken), Error);
  CHECK_THROWS_AS(tcset_from_json(Json::parse(R"({"levels": {}})")), ParseError);

  Json m = to_json(identity(yoneda(1, 1)));
  m["components"]["0"]["0->1:[c0]"] = "0->1:[c1]";
  CHECK_THROWS_AS(tcsetmor_from_json(m), Error);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "cubeprop-io-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "y1.json";
  write_json_file(path, to_json(yoneda(1, 2)));
  CHECK(tcset_from_json(read_json_file(path)) == yoneda(1, 2));
  {
    std::ofstream out(dir / "bad.json");
    out << "{\"trunc\": 1,, }";
  }
  CHECK_THROWS_WITH_AS(read_json_file(dir / "bad.json"), doctest::Contains("byte"), ParseError);
  CHECK_THROWS_AS(read_json_file(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("generated files depend only on the seed") {
  GenConfig cfg;
  for (const char* kind : {"constant", "representable", "subobject-of-product", "negation-image", "random-quotient"}) {
    Rng a(99), b(99);
    auto fa = generate_kind(kind, a, cfg, 3);
    auto fb = generate_kind(kind, b, cfg, 3);
    REQUIRE(fa.size() == fb.size());
    REQUIRE_FALSE(fa.empty());
    for (std::size_t i = 0; i < fa.size(); ++i) {
      CHECK(fa[i].name == fb[i].name);
      Json ja = fa[i].object ? to_json(*fa[i].object) : to_json(*fa[i].map);
      Json jb = fb[i].object ? to_json(*fb[i].object) : to_json(*fb[i].map);
      CHECK(ja.dump(2) == jb.dump(2));
    }
  }
  Rng rng(1);
  CHECK_THROWS_AS(generate_kind("nope", rng, cfg, 1), Error);
}
