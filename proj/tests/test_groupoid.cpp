#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "error.hpp"
#include "examples.hpp"
#include "groupoid.hpp"

using namespace hgc;

namespace {

bool has_violation(const ValidationReport& report, const std::string& axiom) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

}  // namespace

TEST_CASE("Z/2 as a one-unit groupoid validates") {
  const GroupoidPtr g = group_as_groupoid(z2_table());
  CHECK(g->arrow_count() == 2);
  CHECK(g->units().size() == 1);
  CHECK(FiniteGroupoid::validate(g->data()).ok());
}

TEST_CASE("breaking the involution produces the inverse-law violation") {
  GroupoidData d = group_as_groupoid(z2_table())->data();
  for (auto& entry : d.compose) {
    if (entry[0] == "s" && entry[1] == "s") entry[2] = "s";
  }
  const ValidationReport report = FiniteGroupoid::validate(d);
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "inverse law"));
  const bool witnessed = std::any_of(
      report.violations.begin(), report.violations.end(), [](const Violation& v) {
        return v.axiom == "inverse law" && !v.witness.empty() && v.witness.front() == "s";
      });
  CHECK(witnessed);
}

TEST_CASE("the swap transformation groupoid has four arrows and two units") {
  const GroupoidPtr g = transformation_groupoid(
      z2_table(), {"a", "b"},
      {{{"e", "a"}, "a"}, {{"e", "b"}, "b"}, {{"s", "a"}, "b"}, {{"s", "b"}, "a"}});
  CHECK(g->arrow_count() == 4);
  CHECK(g->units().size() == 2);
  CHECK(FiniteGroupoid::validate(g->data()).ok());
}

TEST_CASE("a broken action is rejected with a witness") {
  CHECK_THROWS_AS(transformation_groupoid(
                      z2_table(), {"a", "b"},
                      {{{"e", "a"}, "b"}, {{"e", "b"}, "b"}, {{"s", "a"}, "b"}, {{"s", "b"}, "a"}}),
                  ValidationError);
}

TEST_CASE("pair groupoids of all small sizes validate") {
  CHECK(pair_groupoid({"p"})->arrow_count() == 1);
  const GroupoidPtr two = pair_groupoid({"p", "q"});
  CHECK(two->arrow_count() == 4);
  CHECK(two->units().size() == 2);
  const GroupoidPtr three = pair_groupoid({"p", "q", "r"});
  CHECK(three->arrow_count() == 9);
  CHECK(FiniteGroupoid::validate(three->data()).ok());
  CHECK_THROWS_AS(pair_groupoid({}), ArgumentError);
}

TEST_CASE("non-groups are rejected with an associativity or inverse witness") {
  GroupTable magma;
  magma.elements = {"e", "a", "b"};
  // A left-unital magma that is not associative.
  const auto set = [&](const char* x, const char* y, const char* z) {
    magma.product[{x, y}] = z;
  };
  set("e", "e", "e"); set("e", "a", "a"); set("e", "b", "b");
  set("a", "e", "a"); set("a", "a", "e"); set("a", "b", "a");
  set("b", "e", "b"); set("b", "a", "b"); set("b", "b", "e");
  CHECK_THROWS_AS(group_as_groupoid(magma), ValidationError);
}

TEST_CASE("S3 builds and multiplies correctly") {
  const GroupTable s3 = symmetric3();
  CHECK(s3.elements.size() == 6);
  CHECK(s3.identity() == "e");
  CHECK(s3.prod("(12)", "(12)") == "e");
  CHECK(s3.inverse_of("(123)") == "(132)");
  const GroupoidPtr g = group_as_groupoid(s3);
  CHECK(g->arrow_count() == 6);
  CHECK(g->units().size() == 1);
}

TEST_CASE("wide subgroupoid check accepts subgroups and rejects non-closed sets") {
  const GroupoidPtr g = group_as_groupoid(symmetric3());
  std::set<std::string> units_only{"e"};
  CHECK(wide_subgroupoid_check(*g, units_only));
  CHECK(wide_subgroupoid_check(*g, {"e", "(12)"}));
  CHECK_FALSE(wide_subgroupoid_check(*g, {"e", "(123)"}));  // missing (132)
  CHECK_FALSE(wide_subgroupoid_check(*g, {"(12)"}));        // missing the unit
}

TEST_CASE("left translation is a bijection between fibers") {
  const GroupoidPtr g = transformation_groupoid(
      z2_table(), {"a", "b"},
      {{{"e", "a"}, "a"}, {{"e", "b"}, "b"}, {{"s", "a"}, "b"}, {{"s", "b"}, "a"}});
  for (int gamma = 0; gamma < g->arrow_count(); ++gamma) {
    std::set<int> image;
    int domain = 0;
    for (int other = 0; other < g->arrow_count(); ++other) {
      if (!g->composable(gamma, other)) continue;
      ++domain;
      const int composed = g->compose(gamma, other);
      CHECK(g->range(composed) == g->range(gamma));
      image.insert(composed);
    }
    CHECK(static_cast<int>(image.size()) == domain);
  }
}

TEST_CASE("structural defects are reported, not thrown") {
  GroupoidData d = group_as_groupoid(z2_table())->data();
  d.range.erase("s");
  const ValidationReport report = FiniteGroupoid::validate(d);
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "range total"));
}

TEST_CASE("non-invariant haar weights are refused") {
  GroupoidData d = group_as_groupoid(z2_table())->data();
  d.haar["s"] = Rational(2);  // haar(s∘s) = haar(e) = 1 ≠ haar(s)
  const ValidationReport report = FiniteGroupoid::validate(d);
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "haar invariance"));

  GroupoidData ok = group_as_groupoid(z2_table())->data();
  ok.haar["e"] = Rational(3);
  ok.haar["s"] = Rational(3);  // constant weights stay invariant on a group
  CHECK(FiniteGroupoid::validate(ok).ok());
}

TEST_CASE("nonpositive haar weights are refused") {
  GroupoidData d = group_as_groupoid(z2_table())->data();
  d.haar["e"] = Rational(0);
  d.haar["s"] = Rational(0);
  const ValidationReport report = FiniteGroupoid::validate(d);
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "haar positive"));
}

TEST_CASE("identifiers may not contain the pair separator") {
  GroupoidData d;
  d.arrows = {"a|b"};
  d.units = {"a|b"};
  d.range["a|b"] = "a|b";
  d.source["a|b"] = "a|b";
  d.inverse["a|b"] = "a|b";
  d.compose.push_back({"a|b", "a|b", "a|b"});
  const ValidationReport report = FiniteGroupoid::validate(d);
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "identifier"));
}

TEST_CASE("empty groupoids are rejected") {
  const ValidationReport report = FiniteGroupoid::validate(GroupoidData{});
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "nonempty"));
}
