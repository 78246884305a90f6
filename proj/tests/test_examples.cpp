#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "category.hpp"
#include "examples.hpp"
#include "gspace.hpp"
#include "hypergroupoid.hpp"
#include "io.hpp"

using namespace hgc;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::filesystem::path kDataDir = HGC_DATA_DIR;

}  // namespace

TEST_CASE("the shipped catalog is stable") {
  const std::vector<std::string> expected = {"point", "z2-free", "z2-swap", "s3-dcoset",
                                             "z4-normal"};
  CHECK(shipped_example_names() == expected);
  CHECK_THROWS_AS(shipped_example("no-such-example"), ArgumentError);
}

TEST_CASE("every shipped example rebuilds to its pinned tensor") {
  for (const auto& name : shipped_example_names()) {
    CAPTURE(name);
    const NamedExample ex = shipped_example(name);
    CHECK(ex.name == name);
    CHECK(FiniteGroupoid::validate(ex.groupoid->data()).ok());
    REQUIRE_FALSE(ex.expected.empty());

    const HypergroupoidTable t = build_hypergroupoid(ex.space);
    std::set<std::array<int, 3>> pinned;
    for (const TensorEntry& e : ex.expected) {
      pinned.insert({e.o, e.p, e.q});
      CHECK(t.at(e.o, e.p, e.q) == e.value);
    }
    const int n = t.orbit_count();
    for (int o = 0; o < n; ++o) {
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          if (!pinned.count({o, p, q})) CHECK(t.at(o, p, q) == Rational(0));
        }
      }
    }
  }
}

TEST_CASE("hecke_pair builds the same object as double_coset_space") {
  const std::set<std::string> k = {"e", "(12)"};
  const NamedExample a = double_coset_space(symmetric3(), k, "left");
  const NamedExample b = hecke_pair(symmetric3(), k, "right");
  CHECK(*a.groupoid == *b.groupoid);
  CHECK(*a.space == *b.space);
  CHECK(a.name == "left");
  CHECK(b.name == "right");
}

TEST_CASE("quotient by the full group collapses to a point") {
  const GroupTable s3 = symmetric3();
  const std::set<std::string> all(s3.elements.begin(), s3.elements.end());
  const NamedExample ex = double_coset_space(s3, all);
  CHECK(ex.space->space().point_count() == 1);
  const HypergroupoidTable t = build_hypergroupoid(ex.space);
  CHECK(t.orbit_count() == 1);
  CHECK(t.at(0, 0, 0) == Rational(1));
}

TEST_CASE("quotient by the trivial subgroup recovers the free action") {
  const NamedExample ex = double_coset_space(symmetric3(), {"e"});
  CHECK(ex.space->space().point_count() == 6);
  CHECK(is_free(ex.space->space()).free);
  const HypergroupoidTable t = build_hypergroupoid(ex.space);
  CHECK(t.orbit_count() == 6);
  CHECK(is_groupoid_like(t).groupoid_like);
}

TEST_CASE("subgroupoid_quotient generalizes the group construction") {
  const std::set<std::string> k = {"e", "(12)"};
  const NamedExample grp = double_coset_space(symmetric3(), k);
  const NamedExample gpd =
      subgroupoid_quotient(group_as_groupoid(symmetric3()), k);
  CHECK(*grp.space == *gpd.space);
}

TEST_CASE("builders reject sets that are not subgroups") {
  CHECK_THROWS_AS(double_coset_space(symmetric3(), {"e", "(123)"}), ValidationError);
  CHECK_THROWS_AS(double_coset_space(symmetric3(), {"(12)"}), ValidationError);
  CHECK_THROWS_AS(
      subgroupoid_quotient(group_as_groupoid(symmetric3()), {"e", "(123)"}),
      ValidationError);
}

TEST_CASE("the s3 pair satisfies the quadratic Hecke relation") {
  // With K = ⟨(12)⟩ the double-coset generator T obeys T² = T + 2·1.
  const NamedExample ex = hecke_pair(symmetric3(), {"e", "(12)"});
  const OrbitPtr os = OrbitSpace::make(ex.space, ex.space);
  REQUIRE(os->orbit_count() == 2);
  const Arrow one = delta(os, 0);
  const Arrow t = delta(os, 1);
  const Arrow lhs = convolve(t, t);
  const Arrow rhs = linear_combine(Scalar::one(), t, Scalar(2), one);
  CHECK(arrow_equal(lhs, rhs));
}

TEST_CASE("cyclic_group range checking") {
  CHECK(cyclic_group(4).elements.size() == 4);
  CHECK_THROWS_AS(cyclic_group(0), ArgumentError);
  CHECK_THROWS_AS(cyclic_group(11), ArgumentError);
}

TEST_CASE("golden files reproduce byte for byte") {
  for (const auto& name : shipped_example_names()) {
    CAPTURE(name);
    const NamedExample ex = shipped_example(name);

    const std::string groupoid_text =
        io::canonical_dump(io::groupoid_to_json(ex.groupoid->data()));
    CHECK(groupoid_text == slurp(kDataDir / (name + ".groupoid.json")));

    const std::string space_text =
        io::canonical_dump(io::space_to_json(ex.space->data()));
    CHECK(space_text == slurp(kDataDir / (name + ".space.json")));

    const std::string structure_text =
        io::canonical_dump(io::table_to_json(build_hypergroupoid(ex.space)));
    CHECK(structure_text == slurp(kDataDir / (name + ".structure.json")));
  }
}

TEST_CASE("golden files load back into the same objects") {
  for (const auto& name : shipped_example_names()) {
    CAPTURE(name);
    const NamedExample ex = shipped_example(name);
    const GroupoidPtr g = io::load_groupoid(kDataDir / (name + ".groupoid.json"));
    CHECK(*g == *ex.groupoid);
    const MeasuredPtr x = io::load_space(kDataDir / (name + ".space.json"), g);
    CHECK(*x == *ex.space);
  }
}
