#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "examples.hpp"
#include "groupoid.hpp"
#include "gspace.hpp"
#include "oracles.hpp"

using namespace hgc;

namespace {

bool has_violation(const ValidationReport& report, const std::string& axiom) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

MeasuredPtr s3_coset_space() { return shipped_example("s3-dcoset").space; }

// Orbit classes must agree with the label-propagation oracle, member by
// member, in the same canonical order.
void check_against_oracle(const OrbitSpace& os) {
  const auto classes = test::brute_orbit_classes(os.left().space(), os.right().space());
  REQUIRE(os.orbit_count() == static_cast<int>(classes.size()));
  int pairs = 0;
  for (int o = 0; o < os.orbit_count(); ++o) {
    CHECK(os.members(o) == classes[o]);
    CHECK(os.representative(o) == classes[o].front());
    pairs += static_cast<int>(classes[o].size());
  }
  CHECK(os.pair_count() == pairs);
}

}  // namespace

TEST_CASE("the S3 coset space validates and has the expected orbits") {
  const MeasuredPtr alpha = s3_coset_space();
  const FiniteGSpace& x = alpha->space();
  CHECK(x.point_count() == 3);
  CHECK(FiniteGSpace::validate(x.groupoid(), x.data()).ok());

  const OrbitPtr os = OrbitSpace::make(alpha, alpha);
  CHECK(os->pair_count() == 9);
  CHECK(os->orbit_count() == 2);
  CHECK(os->key(0) == "(12)|(12)");
  CHECK(os->key(1) == "(12)|(123)");
  check_against_oracle(*os);
}

TEST_CASE("a unit acting nontrivially is reported by name") {
  const MeasuredPtr alpha = s3_coset_space();
  GSpaceData d = alpha->space().data();
  for (auto& entry : d.action) {
    if (entry[0] == "e" && entry[1] == "(12)") entry[2] = "(123)";
  }
  const ValidationReport report = FiniteGSpace::validate(alpha->groupoid(), d);
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "unit acts trivially"));
}

TEST_CASE("anchor must reach every unit") {
  const GroupoidPtr g = transformation_groupoid(
      z2_table(), {"a", "b"},
      {{{"e", "a"}, "a"}, {{"e", "b"}, "b"}, {{"s", "a"}, "b"}, {{"s", "b"}, "a"}});
  GSpaceData d;
  d.points = {"p"};
  d.anchor["p"] = "(e,a)";
  d.action.push_back({"(e,a)", "p", "p"});
  const ValidationReport report = FiniteGSpace::validate(*g, d);
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "anchor onto"));
}

TEST_CASE("freeness: translation on the group is free, the coset action is not") {
  const GroupoidPtr s3 = group_as_groupoid(symmetric3());
  const MeasuredPtr self = groupoid_as_measured_space(s3);
  CHECK(is_free(self->space()).free);

  const MeasuredPtr cosets = s3_coset_space();
  const FreeResult r = is_free(cosets->space());
  REQUIRE_FALSE(r.free);
  // The witness is a genuine coincidence γx = γ′x with γ ≠ γ′.
  CHECK(r.gamma != r.gamma_other);
  CHECK(cosets->space().act(r.gamma, r.x) == cosets->space().act(r.gamma_other, r.x));

  CHECK(is_proper(cosets->space()));
}

TEST_CASE("weights must be constant on orbits") {
  const MeasuredPtr alpha = s3_coset_space();
  std::map<std::string, Rational> weights;
  for (const auto& p : alpha->space().point_names()) weights[p] = Rational(1);
  weights["(123)"] = Rational(2);  // same G-orbit as the other cosets
  const ValidationReport report = MeasuredGSpace::validate(alpha->space(), weights);
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "weight invariance"));

  std::map<std::string, Rational> constant;
  for (const auto& p : alpha->space().point_names()) constant[p] = Rational(3, 2);
  CHECK(MeasuredGSpace::validate(alpha->space(), constant).ok());
}

TEST_CASE("weights must be positive and on known points") {
  const MeasuredPtr alpha = s3_coset_space();
  std::map<std::string, Rational> weights;
  for (const auto& p : alpha->space().point_names()) weights[p] = Rational(-1);
  CHECK(has_violation(MeasuredGSpace::validate(alpha->space(), weights), "weight positive"));
  std::map<std::string, Rational> stray{{"ghost", Rational(1)}};
  CHECK(has_violation(MeasuredGSpace::validate(alpha->space(), stray), "weight domain"));
}

TEST_CASE("orbit spaces across different spaces match the oracle") {
  const GroupTable s3 = symmetric3();
  const GroupoidPtr g = group_as_groupoid(s3);
  const MeasuredPtr self = groupoid_as_measured_space(g);
  const MeasuredPtr cosets = s3_coset_space();
  // Both spaces live over equal groupoids (value equality), so the mixed
  // quotient (G * G/K)/G is well-defined.
  const OrbitPtr os = OrbitSpace::make(self, cosets);
  CHECK(os->pair_count() == 18);
  check_against_oracle(*os);

  const OrbitPtr swapped = OrbitSpace::make(cosets, self);
  CHECK(swapped->orbit_count() == os->orbit_count());
  check_against_oracle(*swapped);
}

TEST_CASE("the z2 swap quotient matches the oracle") {
  const NamedExample ex = shipped_example("z2-swap");
  const OrbitPtr os = OrbitSpace::make(ex.space, ex.space);
  CHECK(os->orbit_count() == 4);
  check_against_oracle(*os);
}

TEST_CASE("orbit spaces demand a common groupoid") {
  const MeasuredPtr z2self = groupoid_as_measured_space(group_as_groupoid(z2_table()));
  CHECK_THROWS_AS(OrbitSpace::make(z2self, s3_coset_space()), ArgumentError);
}

TEST_CASE("point orbits partition the coset space into one class") {
  const MeasuredPtr alpha = s3_coset_space();
  const PointOrbits po = point_orbits(alpha->space());
  REQUIRE(po.orbits.size() == 1);
  CHECK(po.orbits.front().size() == 3);
  for (int x = 0; x < 3; ++x) CHECK(po.orbit_of[x] == 0);
}

TEST_CASE("orbit keys resolve through any member") {
  const MeasuredPtr alpha = s3_coset_space();
  const OrbitPtr os = OrbitSpace::make(alpha, alpha);
  CHECK(os->orbit_by_key("(12)|(123)") == 1);
  CHECK(os->orbit_by_key("(132)|(12)") == 1);  // non-canonical member
  CHECK(os->orbit_by_key("(12)|(12)") == 0);
  CHECK(os->orbit_by_key("(12)|nope") == -1);
  CHECK(os->canonical_key("(12)|(123)"));
  CHECK_FALSE(os->canonical_key("(132)|(12)"));
}

TEST_CASE("self identification pairs orbits of (G*X)/G with points of X") {
  const GroupoidPtr z2 = group_as_groupoid(z2_table());
  const MeasuredPtr self = groupoid_as_measured_space(z2);
  const SelfIdentification si = self_identification(self);
  CHECK(si.orbits->orbit_count() == 2);
  const FiniteGSpace& x = self->space();
  for (int o = 0; o < si.orbits->orbit_count(); ++o) {
    CHECK(si.to_orbit[si.to_point[o]] == o);
    // Every member (γ, x₀) of the orbit maps to the same point γ⁻¹x₀.
    for (const auto& [gamma_pt, x_pt] : si.orbits->members(o)) {
      const int arrow = z2->arrow_index(si.orbits->left().space().point_name(gamma_pt));
      CHECK(x.act(z2->inverse(arrow), x_pt) == si.to_point[o]);
    }
  }
}

TEST_CASE("self identification covers the coset space") {
  const MeasuredPtr alpha = s3_coset_space();
  const SelfIdentification si = self_identification(alpha);
  CHECK(si.orbits->orbit_count() == alpha->space().point_count());
  for (int x = 0; x < alpha->space().point_count(); ++x) {
    CHECK(si.to_point[si.to_orbit[x]] == x);
  }
}

TEST_CASE("measured weights descend to point orbits") {
  const MeasuredPtr alpha = s3_coset_space();
  const PointOrbits po = point_orbits(alpha->space());
  for (const auto& orbit : po.orbits) {
    for (int p : orbit) CHECK(alpha->weight(p) == alpha->weight(orbit.front()));
  }
}
