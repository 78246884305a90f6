#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "groupoid.hpp"
#include "scalar.hpp"

namespace hgc {

class FiniteGSpace;
class MeasuredGSpace;
class OrbitSpace;
using GSpacePtr = std::shared_ptr<const FiniteGSpace>;
using MeasuredPtr = std::shared_ptr<const MeasuredGSpace>;
using OrbitPtr = std::shared_ptr<const OrbitSpace>;

// Raw form of a left G-space: points with an anchor map onto the units of G
// and an action table of (arrow, point, result) entries, one per composable
// pair.  Weights ride along for file round-trips; an empty map means counting
// weights.
struct GSpaceData {
  std::vector<std::string> points;
  std::map<std::string, std::string> anchor;
  std::vector<std::array<std::string, 3>> action;
  std::map<std::string, Rational> weights;
};

class FiniteGSpace {
 public:
  // Action axioms with witnesses: anchor onto units, anchor(γx) = range(γ),
  // units act trivially, compatibility on composable triples, injectivity of
  // each translation.  Structural defects (dangling names, non-functional or
  // mis-domained tables) are reported the same way and end validation early.
  static ValidationReport validate(const FiniteGroupoid& g, const GSpaceData& d);
  static GSpacePtr make(GroupoidPtr g, const GSpaceData& d);

  int point_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& point_names() const { return names_; }
  const std::string& point_name(int x) const { return names_[x]; }
  int point_index(std::string_view name) const;

  // Unit arrow of the groupoid over the point.
  int anchor(int x) const { return anchor_[x]; }
  bool acts(int arrow, int x) const { return g_->source(arrow) == anchor_[x]; }
  // Result of γ·x, or -1 when source(γ) ≠ anchor(x).
  int act(int arrow, int x) const { return action_[arrow * names_.size() + x]; }

  const FiniteGroupoid& groupoid() const { return *g_; }
  const GroupoidPtr& groupoid_ptr() const { return g_; }

  GSpaceData data() const;  // canonical snapshot, weights left empty
  bool operator==(const FiniteGSpace& o) const;

 private:
  FiniteGSpace() = default;
  GroupoidPtr g_;
  std::vector<std::string> names_;  // sorted
  std::vector<int> anchor_;
  std::vector<int> action_;  // dense arrows × points, -1 when undefined
};

class MeasuredGSpace {
 public:
  // Positivity and invariance w(γx) = w(x); violations carry (γ, x).
  static ValidationReport validate(const FiniteGSpace& x,
                                   const std::map<std::string, Rational>& weights);
  static MeasuredPtr make(GSpacePtr x, const std::map<std::string, Rational>& weights);

  const FiniteGSpace& space() const { return *x_; }
  const GSpacePtr& space_ptr() const { return x_; }
  const FiniteGroupoid& groupoid() const { return x_->groupoid(); }
  const Rational& weight(int x) const { return weights_[x]; }
  bool counting() const;
  GSpaceData data() const;  // snapshot including weights
  bool operator==(const MeasuredGSpace& o) const;

 private:
  MeasuredGSpace() = default;
  GSpacePtr x_;
  std::vector<Rational> weights_;
};

// The action of G on itself by left translation: points are the arrows,
// anchored at their range, weighted by the Haar weights.
MeasuredPtr groupoid_as_measured_space(GroupoidPtr g);

struct FreeResult {
  bool free = true;
  // Distinct arrows moving the same point to the same place, when not free.
  int gamma = -1;
  int gamma_other = -1;
  int x = -1;
};
FreeResult is_free(const FiniteGSpace& x);

// Every action of a finite groupoid on a finite set is proper: the map
// (γ,x) ↦ (γx,x) has finite (hence compact) preimages.  Kept as an explicit
// predicate so the hypothesis checklist stays visible at call sites.
constexpr bool is_proper(const FiniteGSpace&) { return true; }

struct PointOrbits {
  std::vector<int> orbit_of;            // point -> orbit id
  std::vector<std::vector<int>> orbits;  // sorted members, ordered by least point
};
PointOrbits point_orbits(const FiniteGSpace& x);

// Orbits of the diagonal action on X*Y = {(x,y) : anchor(x) = anchor(y)},
// with lexicographically least representatives.  Carries the measured spaces
// so convolution can read both weight systems off one object.
class OrbitSpace {
 public:
  static OrbitPtr make(MeasuredPtr left, MeasuredPtr right);

  const MeasuredGSpace& left() const { return *left_; }
  const MeasuredGSpace& right() const { return *right_; }
  const MeasuredPtr& left_ptr() const { return left_; }
  const MeasuredPtr& right_ptr() const { return right_; }

  int orbit_count() const { return static_cast<int>(reps_.size()); }
  // Orbit containing (x,y), or -1 when anchors differ.
  int orbit_of(int x, int y) const { return orbit_[x * ny_ + y]; }
  const std::pair<int, int>& representative(int o) const { return reps_[o]; }
  const std::vector<std::pair<int, int>>& members(int o) const { return members_[o]; }
  int pair_count() const { return pair_count_; }

  // Canonical key "x|y" built from the representative's point names.
  std::string key(int o) const;
  // Resolves a "x|y" key through orbit_of; returns -1 for unknown points or
  // non-fibered pairs.
  int orbit_by_key(std::string_view key) const;
  // True when the key names the canonical representative itself.
  bool canonical_key(std::string_view key) const;

  bool same_context(const OrbitSpace& o) const;

 private:
  OrbitSpace() = default;
  MeasuredPtr left_, right_;
  int ny_ = 0;
  int pair_count_ = 0;
  std::vector<int> orbit_;  // dense |X|×|Y|, -1 off the fibered set
  std::vector<std::pair<int, int>> reps_;
  std::vector<std::vector<std::pair<int, int>>> members_;
};

// The identification (G*X)/G ↔ X through [γ,x] ↦ γ⁻¹x, with inverse
// x ↦ [anchor(x), x].
struct SelfIdentification {
  OrbitPtr orbits;            // left factor is G acting on itself
  std::vector<int> to_point;  // orbit -> point of X
  std::vector<int> to_orbit;  // point of X -> orbit
};
SelfIdentification self_identification(const MeasuredPtr& x);

}  // namespace hgc
