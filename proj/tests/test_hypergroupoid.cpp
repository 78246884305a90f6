#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "category.hpp"
#include "examples.hpp"
#include "gspace.hpp"
#include "hypergroupoid.hpp"
#include "oracles.hpp"
#include "randgen.hpp"

using namespace hgc;

namespace {

// Recomputes the full tensor by direct summation over fibered triples, with
// orbit membership taken from the label-propagation oracle, evaluated at
// every member of the target orbit.
void check_tensor_against_direct_sum(const HypergroupoidTable& t) {
  const MeasuredGSpace& alpha = *t.base;
  const auto classes = test::brute_orbit_classes(alpha.space(), alpha.space());
  REQUIRE(static_cast<int>(classes.size()) == t.orbit_count());
  for (int o = 0; o < t.orbit_count(); ++o) {
    for (int p = 0; p < t.orbit_count(); ++p) {
      for (int q = 0; q < t.orbit_count(); ++q) {
        for (const auto& [x, z] : classes[q]) {
          CHECK(test::direct_product_value(alpha, classes, o, p, x, z) == t.at(o, p, q));
        }
      }
    }
  }
}

void check_tensor_invariants(const HypergroupoidTable& t) {
  const int n = t.orbit_count();
  for (int o = 0; o < n; ++o) {
    CHECK(t.star[t.star[o]] == o);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        CHECK(t.at(o, p, q) >= 0);
        CHECK(t.at(t.star[p], t.star[o], t.star[q]) == t.at(o, p, q));
      }
    }
  }
  // Σ_E c[A][B][E]·c[E][C][D] = Σ_F c[B][C][F]·c[A][F][D].
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          Rational lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) lhs += t.at(a, b, e) * t.at(e, c, d);
          for (int f = 0; f < n; ++f) rhs += t.at(b, c, f) * t.at(a, f, d);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("the S3 double-coset tensor matches both oracles") {
  const NamedExample ex = shipped_example("s3-dcoset");
  const HypergroupoidTable t = build_hypergroupoid(ex.space);
  REQUIRE(t.orbit_count() == 2);

  CHECK(t.at(0, 0, 0) == 1);
  CHECK(t.at(0, 1, 1) == 1);
  CHECK(t.at(1, 0, 1) == 1);
  CHECK(t.at(1, 1, 0) == 2);
  CHECK(t.at(1, 1, 1) == 1);
  CHECK(t.at(0, 0, 1) == 0);
  CHECK(t.at(0, 1, 0) == 0);
  CHECK(t.at(1, 0, 0) == 0);

  check_tensor_against_direct_sum(t);

  // Group-algebra cross-check through K\G/K.
  const std::set<std::string> k{"e", "(12)"};
  const test::GroupAlgebraOracle oracle(symmetric3(), k);
  REQUIRE(oracle.coset_count() == 2);
  const GroupTable s3 = symmetric3();
  std::map<int, int> to_coset;  // orbit -> double coset, via the rep key
  for (int o = 0; o < t.orbit_count(); ++o) {
    const auto [x, y] = t.orbits->representative(o);
    const std::string& xk = t.base->space().point_name(x);
    const std::string& yk = t.base->space().point_name(y);
    to_coset[o] = oracle.coset_of(s3.prod(s3.inverse_of(xk), yk));
  }
  for (int o = 0; o < 2; ++o) {
    for (int p = 0; p < 2; ++p) {
      for (int q = 0; q < 2; ++q) {
        CHECK(t.at(o, p, q) == oracle.constant(to_coset[o], to_coset[p], to_coset[q]));
      }
    }
  }
}

TEST_CASE("every shipped tensor matches the direct-sum oracle and its invariants") {
  for (const auto& name : shipped_example_names()) {
    CAPTURE(name);
    const HypergroupoidTable t = build_hypergroupoid(shipped_example(name).space);
    check_tensor_against_direct_sum(t);
    check_tensor_invariants(t);
  }
}

TEST_CASE("the normal-subgroup Hecke algebra is the Z/2 group algebra") {
  const NamedExample ex = shipped_example("z4-normal");
  const HypergroupoidTable t = build_hypergroupoid(ex.space);
  REQUIRE(t.orbit_count() == 2);
  for (int o = 0; o < 2; ++o) {
    for (int p = 0; p < 2; ++p) {
      for (int q = 0; q < 2; ++q) {
        CHECK(t.at(o, p, q) == ((o ^ p) == q ? 1 : 0));
      }
    }
  }

  const std::set<std::string> k{"0", "2"};
  const test::GroupAlgebraOracle oracle(cyclic_group(4), k);
  CHECK(oracle.coset_count() == 2);
  CHECK(oracle.constant(1, 1, 0) == 1);
  CHECK(oracle.constant(1, 1, 1) == 0);
}

TEST_CASE("free actions give 0/1 groupoid-like tensors") {
  const NamedExample ex = shipped_example("z2-free");
  const HypergroupoidTable t = build_hypergroupoid(ex.space);
  const GroupoidLikeResult like = is_groupoid_like(t);
  CHECK(like.groupoid_like);
  for (int o = 0; o < t.orbit_count(); ++o) {
    for (int p = 0; p < t.orbit_count(); ++p) {
      for (int q = 0; q < t.orbit_count(); ++q) {
        const Rational& c = t.at(o, p, q);
        CHECK((c == 0 || c == 1));
      }
    }
  }
}

TEST_CASE("the double-coset tensor is not groupoid-like") {
  const HypergroupoidTable t = build_hypergroupoid(shipped_example("s3-dcoset").space);
  const GroupoidLikeResult like = is_groupoid_like(t);
  REQUIRE_FALSE(like.groupoid_like);
  CHECK(like.o == 1);
  CHECK(like.p == 1);
}

TEST_CASE("hypergroup detection is transitivity of the action") {
  CHECK(detect_hypergroup(build_hypergroupoid(shipped_example("s3-dcoset").space)));
  CHECK(detect_hypergroup(build_hypergroupoid(shipped_example("point").space)));
  CHECK_FALSE(detect_hypergroup(build_hypergroupoid(shipped_example("z2-swap").space)));
}

TEST_CASE("expanding through the tensor agrees with convolution") {
  Rng rng(2024);
  for (const auto& name : shipped_example_names()) {
    CAPTURE(name);
    const NamedExample ex = shipped_example(name);
    const HypergroupoidTable t = build_hypergroupoid(ex.space);
    const OrbitPtr os = t.orbits;
    for (int round = 0; round < 10; ++round) {
      const Arrow f = random_arrow(rng, os);
      const Arrow g = random_arrow(rng, os);
      CHECK(arrow_equal(expand_through_table(t, f, g), convolve(f, g)));
    }
  }
}

TEST_CASE("the one-point example has the trivial tensor") {
  const HypergroupoidTable t = build_hypergroupoid(shipped_example("point").space);
  REQUIRE(t.orbit_count() == 1);
  CHECK(t.at(0, 0, 0) == 1);
  CHECK(t.star[0] == 0);
  CHECK(is_groupoid_like(t).groupoid_like);
}
