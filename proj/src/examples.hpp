#pragma once

#include <set>
#include <string>
#include <vector>

#include "groupoid.hpp"
#include "gspace.hpp"
#include "scalar.hpp"

namespace hgc {

// Small catalog of group tables for builders and tests.
GroupTable cyclic_group(int n);  // elements "0" … "n-1"
GroupTable z2_table();           // {e, s}
GroupTable symmetric3();         // {e, (12), (13), (23), (123), (132)}

struct TensorEntry {
  int o, p, q;
  Rational value;
};

// A validated groupoid acting on a validated measured space, optionally with
// the hand-derived nonzero structure constants of its hypergroupoid pinned as
// a fixture.
struct NamedExample {
  std::string name;
  GroupoidPtr groupoid;
  MeasuredPtr space;
  std::vector<TensorEntry> expected;
};

// X = G/K with left translation and counting weights; K must be a subgroup.
// Cosets are labeled by their lexicographically least member.
NamedExample double_coset_space(const GroupTable& g, const std::set<std::string>& k,
                                std::string name = "dcoset");

// Identical construction; the based algebra on (X*X)/G is the Hecke algebra
// of the pair.
NamedExample hecke_pair(const GroupTable& g, const std::set<std::string>& k,
                        std::string name = "hecke");

// X = G/K for a wide subgroupoid K (classes γK, anchored at range, left
// translation, counting weights).
NamedExample subgroupoid_quotient(GroupoidPtr g, const std::set<std::string>& k,
                                  std::string name = "quotient");

const std::vector<std::string>& shipped_example_names();
// Builds one of point, z2-free, z2-swap, s3-dcoset, z4-normal; checks any
// pinned fixture against live recomputation before returning.
NamedExample shipped_example(const std::string& name);

}  // namespace hgc
