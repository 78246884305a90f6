#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "category.hpp"
#include "examples.hpp"
#include "gspace.hpp"
#include "hypergroupoid.hpp"
#include "io.hpp"
#include "representations.hpp"

using namespace hgc;
using io::Json;

namespace {

// Scratch directory recreated fresh for each test case that touches disk.
struct TempDir {
  std::filesystem::path path;

  TempDir() : path(std::filesystem::temp_directory_path() / "hgc_io_test") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("canonical_dump sorts keys and ends with a newline") {
  Json j;
  j["zeta"] = 1;
  j["alpha"] = Json::array({1, 2});
  CHECK(io::canonical_dump(j) == "{\n  \"alpha\": [\n    1,\n    2\n  ],\n  \"zeta\": 1\n}\n");
}

TEST_CASE("rationals serialize reduced and parse strictly") {
  CHECK(io::rational_to_json(Rational(3, 6)) == Json("1/2"));
  CHECK(io::rational_to_json(Rational(-4, 2)) == Json("-2"));
  CHECK(io::rational_from_json(Json("7/3"), "t") == Rational(7, 3));
  CHECK_THROWS_AS(io::rational_from_json(Json(1.5), "t"), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(Json("1.5"), "t"), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(Json("1/0"), "t"), ParseError);
}

TEST_CASE("scalars serialize as [re, im] pairs") {
  const Scalar s(Rational(1, 2), Rational(-3));
  const Json j = io::scalar_to_json(s);
  CHECK(j == Json::array({"1/2", "-3"}));
  CHECK(io::scalar_from_json(j, "t") == s);
  CHECK_THROWS_AS(io::scalar_from_json(Json::array({"1"}), "t"), ParseError);
  CHECK_THROWS_AS(io::scalar_from_json(Json("1"), "t"), ParseError);
}

TEST_CASE("groupoids round-trip through json") {
  const GroupoidPtr g = shipped_example("s3-dcoset").groupoid;
  const Json j = io::groupoid_to_json(g->data());
  CHECK(*FiniteGroupoid::make(io::groupoid_from_json(j)) == *g);
  CHECK_FALSE(j.contains("haar"));  // counting weights stay implicit

  GroupoidData weighted = g->data();
  for (const auto& name : weighted.arrows) weighted.haar[name] = Rational(3);
  const Json jw = io::groupoid_to_json(weighted);
  CHECK(jw.contains("haar"));
  CHECK(jw["haar"]["e"] == Json("3"));
  const GroupoidPtr back = FiniteGroupoid::make(io::groupoid_from_json(jw));
  CHECK(back->haar(0) == Rational(3));
}

TEST_CASE("groupoid schema is strict") {
  Json j = io::groupoid_to_json(shipped_example("z2-free").groupoid->data());
  SUBCASE("unknown key") {
    j["extra"] = 1;
    CHECK_THROWS_WITH_AS(io::groupoid_from_json(j), "groupoid: unknown key \"extra\"",
                         ParseError);
  }
  SUBCASE("missing key") {
    j.erase("range");
    CHECK_THROWS_WITH_AS(io::groupoid_from_json(j), "groupoid: missing key \"range\"",
                         ParseError);
  }
  SUBCASE("wrong shapes") {
    Json bad = j;
    bad["arrows"] = 3;
    CHECK_THROWS_AS(io::groupoid_from_json(bad), ParseError);
    bad = j;
    bad["compose"] = Json::array({Json::array({"a", "b"})});
    CHECK_THROWS_AS(io::groupoid_from_json(bad), ParseError);
  }
  SUBCASE("not an object") {
    CHECK_THROWS_AS(io::groupoid_from_json(Json::array()), ParseError);
  }
}

TEST_CASE("spaces round-trip through json, weights included") {
  const NamedExample ex = shipped_example("s3-dcoset");
  const Json j = io::space_to_json(ex.space->data());
  CHECK_FALSE(j.contains("weights"));
  const GSpaceData d = io::space_from_json(j);
  CHECK(*MeasuredGSpace::make(FiniteGSpace::make(ex.groupoid, d), d.weights) == *ex.space);

  GSpaceData weighted = ex.space->data();
  for (const auto& p : weighted.points) weighted.weights[p] = Rational(3, 2);
  const Json jw = io::space_to_json(weighted);
  CHECK(jw["weights"]["(12)"] == Json("3/2"));
  const GSpaceData dw = io::space_from_json(jw);
  const MeasuredPtr back = MeasuredGSpace::make(FiniteGSpace::make(ex.groupoid, dw), dw.weights);
  CHECK(back->weight(0) == Rational(3, 2));

  Json bad = j;
  bad["typo"] = true;
  CHECK_THROWS_AS(io::space_from_json(bad), ParseError);
}

TEST_CASE("function files round-trip with inline context") {
  const NamedExample ex = shipped_example("s3-dcoset");
  const OrbitPtr os = OrbitSpace::make(ex.space, ex.space);
  const Arrow f = make_arrow(os, {{0, Scalar(Rational(1, 3))}, {1, Scalar::i()}});
  const Json j = io::arrow_to_json(f);
  CHECK(j["values"] == Json{{"(12)|(12)", Json::array({"1/3", "0"})},
                            {"(12)|(123)", Json::array({"0", "1"})}});

  const io::ArrowBundle b = io::arrow_from_json(j, ".");
  CHECK(arrow_equal(b.arrow, f));
  CHECK(*b.groupoid == *ex.groupoid);
  CHECK(*b.dst == *ex.space);
}

TEST_CASE("function values must use canonical orbit keys") {
  const NamedExample ex = shipped_example("s3-dcoset");
  const OrbitPtr os = OrbitSpace::make(ex.space, ex.space);
  Json j = io::arrow_to_json(delta(os, 1));

  SUBCASE("member of the orbit that is not the representative") {
    j["values"] = Json{{"(123)|(12)", Json::array({"1", "0"})}};
    CHECK_THROWS_AS(io::arrow_from_json(j, "."), ParseError);
  }
  SUBCASE("unknown points") {
    j["values"] = Json{{"bogus|bogus", Json::array({"1", "0"})}};
    CHECK_THROWS_AS(io::arrow_from_json(j, "."), ParseError);
  }
  SUBCASE("values not an object") {
    j["values"] = Json::array();
    CHECK_THROWS_AS(io::arrow_from_json(j, "."), ParseError);
  }
}

TEST_CASE("function files resolve file references against their directory") {
  const TempDir tmp;
  const NamedExample ex = shipped_example("z2-free");
  io::write_json_file(tmp.path / "g.json", io::groupoid_to_json(ex.groupoid->data()));
  io::write_json_file(tmp.path / "x.json", io::space_to_json(ex.space->data()));

  Json j;
  j["groupoid"] = "g.json";
  j["dst_space"] = "x.json";
  j["src_space"] = "x.json";
  j["values"] = Json{{"e|s", Json::array({"1", "0"})}};
  io::write_json_file(tmp.path / "f.json", j);

  const io::ArrowBundle b = io::load_arrow(tmp.path / "f.json");
  CHECK(*b.groupoid == *ex.groupoid);
  CHECK(b.arrow.values.size() == 1);
  CHECK(b.arrow.values.at(b.arrow.orbits->orbit_by_key("e|s")) == Scalar::one());

  j["groupoid"] = "missing.json";
  io::write_json_file(tmp.path / "f2.json", j);
  CHECK_THROWS_AS(io::load_arrow(tmp.path / "f2.json"), IoError);
}

TEST_CASE("file loading distinguishes io and parse failures") {
  const TempDir tmp;
  CHECK_THROWS_AS(io::load_json_file(tmp.path / "absent.json"), IoError);

  std::ofstream(tmp.path / "garbled.json") << "{not json";
  CHECK_THROWS_AS(io::load_json_file(tmp.path / "garbled.json"), ParseError);

  io::write_json_file(tmp.path / "ok.json", Json{{"k", 1}});
  CHECK(io::load_json_file(tmp.path / "ok.json") == Json{{"k", 1}});
  std::ifstream in(tmp.path / "ok.json", std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.back() == '\n');
}

TEST_CASE("validation reports serialize with axiom and witness") {
  GroupoidData d = shipped_example("z2-free").groupoid->data();
  d.range.erase("s");
  const Json j = io::report_to_json(FiniteGroupoid::validate(d));
  CHECK(j["ok"] == Json(false));
  REQUIRE(j["violations"].is_array());
  REQUIRE_FALSE(j["violations"].empty());
  CHECK(j["violations"][0].contains("axiom"));
  CHECK(j["violations"][0].contains("witness"));

  const Json ok = io::report_to_json(FiniteGroupoid::validate(shipped_example("z2-free").groupoid->data()));
  CHECK(ok == Json{{"ok", true}, {"violations", Json::array()}});
}

TEST_CASE("orbit listings carry keys, members, and counts") {
  const NamedExample ex = shipped_example("s3-dcoset");
  const OrbitPtr os = OrbitSpace::make(ex.space, ex.space);
  const Json j = io::orbits_to_json(*os);
  CHECK(j["pair_count"] == Json(9));
  CHECK(j["orbit_count"] == Json(2));
  REQUIRE(j["orbits"].size() == 2);
  CHECK(j["orbits"][0]["key"] == Json("(12)|(12)"));
  CHECK(j["orbits"][0]["members"].size() == 3);
  CHECK(j["orbits"][1]["key"] == Json("(12)|(123)"));
  CHECK(j["orbits"][1]["members"].size() == 6);
}

TEST_CASE("structure tables serialize only the nonzero constants") {
  const Json j = io::table_to_json(build_hypergroupoid(shipped_example("s3-dcoset").space));
  CHECK(j["orbits"] == Json::array({"(12)|(12)", "(12)|(123)"}));
  CHECK(j["star"] == Json{{"(12)|(12)", "(12)|(12)"}, {"(12)|(123)", "(12)|(123)"}});
  CHECK(j["constants"] == Json::array({Json::array({0, 0, 0, "1"}), Json::array({0, 1, 1, "1"}),
                                       Json::array({1, 0, 1, "1"}), Json::array({1, 1, 0, "2"}),
                                       Json::array({1, 1, 1, "1"})}));
}

TEST_CASE("representation matrices serialize with their weights") {
  const NamedExample ex = shipped_example("s3-dcoset");
  const OrbitPtr os = OrbitSpace::make(ex.space, ex.space);
  const Json j = io::matrix_to_json(rep_matrix(delta(os, 1)));
  CHECK(j["rows"] == Json::array({"(12)", "(123)", "(132)"}));
  CHECK(j["cols"] == j["rows"]);
  CHECK(j["row_weights"]["(12)"] == Json("1"));
  CHECK(j["col_weights"]["(132)"] == Json("1"));
  CHECK(j["entries"].size() == 6);  // J - I has six nonzero cells
  for (const auto& e : j["entries"]) {
    REQUIRE(e.size() == 4);
    CHECK(e[0] != e[1]);  // diagonal stays zero, hence unserialized
    CHECK(e[2] == Json("1"));
    CHECK(e[3] == Json("0"));
  }
}
