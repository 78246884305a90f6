#pragma once

#include <array>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace hgc {

/// Identifiers are opaque strings under lexicographic order. '|' is reserved
/// as the pair separator in file keys and never allowed inside an identifier.
bool valid_identifier(std::string_view id);

/// Raw groupoid tables exactly as they appear in a groupoid file. May violate
/// any number of axioms; FiniteGroupoid::validate reports all of them.
struct GroupoidData {
  std::vector<std::string> arrows;
  std::vector<std::string> units;
  std::map<std::string, std::string> range;
  std::map<std::string, std::string> source;
  std::map<std::string, std::string> inverse;
  std::vector<std::array<std::string, 3>> compose;  // {a, b, c} meaning a∘b = c
  std::map<std::string, Rational> haar;             // absent arrow => weight 1
};

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// A validated finite groupoid with a left-invariant Haar system. Arrows are
/// indexed in lexicographic name order; all tables are total and immutable.
class FiniteGroupoid {
 public:
  /// Checks every groupoid axiom and the Haar invariance, returning one
  /// violation with witness per failure. Malformed tables (dangling names,
  /// conflicting entries) are reported as violations, never thrown.
  static ValidationReport validate(const GroupoidData& d);

  /// Builds a groupoid or throws ValidationError carrying the full report.
  static GroupoidPtr make(const GroupoidData& d);

  int arrow_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& arrow_names() const { return names_; }
  const std::string& arrow_name(int a) const { return names_[a]; }
  int arrow_index(std::string_view name) const;  // -1 when unknown

  bool is_unit(int a) const { return is_unit_[a]; }
  const std::vector<int>& units() const { return units_; }

  int range(int a) const { return range_[a]; }
  int source(int a) const { return source_[a]; }
  int inverse(int a) const { return inverse_[a]; }
  bool composable(int a, int b) const { return source_[a] == range_[b]; }
  int compose(int a, int b) const { return compose_[a * arrow_count() + b]; }

  const Rational& haar(int a) const { return haar_[a]; }
  bool counting_haar() const;  // every weight equal to 1

  /// Canonical snapshot of the tables (arrows sorted, compose sorted).
  GroupoidData data() const;

  bool operator==(const FiniteGroupoid& o) const;

 private:
  FiniteGroupoid() = default;

  std::vector<std::string> names_;  // sorted
  std::vector<char> is_unit_;
  std::vector<int> units_;
  std::vector<int> range_, source_, inverse_;
  std::vector<int> compose_;  // dense n*n, -1 where undefined
  std::vector<Rational> haar_;
};

/// Finite group given by its multiplication table over element names.
struct GroupTable {
  std::vector<std::string> elements;
  std::map<std::pair<std::string, std::string>, std::string> product;

  const std::string& prod(const std::string& a, const std::string& b) const;
  std::string identity() const;  // throws ValidationError if there is none
  std::string inverse_of(const std::string& a) const;
};

/// One-unit groupoid of a finite group; Haar weight 1 (counting measure).
/// Rejects non-groups with a witness for the broken axiom.
GroupoidPtr group_as_groupoid(const GroupTable& table);

/// Arrows are ordered pairs "(a,b)", units the diagonal, compose
/// (a,b)∘(b,c) = (a,c). Rejects the empty point set.
GroupoidPtr pair_groupoid(const std::vector<std::string>& points);

/// Semi-direct groupoid of a group action: arrows "(g,y)" with range g·y and
/// source y. The action table must be a genuine group action.
GroupoidPtr transformation_groupoid(
    const GroupTable& group, const std::vector<std::string>& space,
    const std::map<std::pair<std::string, std::string>, std::string>& action);

/// True iff the subset contains every unit and is closed under composition
/// and inverse.
bool wide_subgroupoid_check(const FiniteGroupoid& g, const std::set<std::string>& subset);

}  // namespace hgc
