#pragma once

#include <string>
#include <vector>

#include "category.hpp"
#include "gspace.hpp"

namespace hgc {

// The based algebra on the orbits of (X*X)/G: the structure-constant tensor
// of the indicator basis, δ_O ∗ δ_{O′} = Σ c[O][O′][O″]·δ_{O″}, together with
// the swap involution on orbits.
struct HypergroupoidTable {
  MeasuredPtr base;
  OrbitPtr orbits;  // the quotient (X*X)/G the tensor is indexed by
  std::vector<std::vector<std::vector<Rational>>> constants;
  std::vector<int> star;

  int orbit_count() const { return static_cast<int>(star.size()); }
  const Rational& at(int o, int p, int q) const { return constants[o][p][q]; }
};

HypergroupoidTable build_hypergroupoid(const MeasuredPtr& alpha);

// Expands a product of arbitrary arrows through the tensor; used to check the
// table against convolve.
Arrow expand_through_table(const HypergroupoidTable& t, const Arrow& f, const Arrow& g);

struct GroupoidLikeResult {
  bool groupoid_like = true;
  int o = -1, p = -1;  // pair whose product has two or more targets
};
GroupoidLikeResult is_groupoid_like(const HypergroupoidTable& t);

// True when the action on X is transitive, i.e. the based algebra has a
// single object in the hypergroup sense.
bool detect_hypergroup(const HypergroupoidTable& t);

}  // namespace hgc
