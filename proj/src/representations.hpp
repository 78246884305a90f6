#pragma once

#include <utility>
#include <vector>

#include "category.hpp"
#include "gspace.hpp"

namespace hgc {

// A compactly supported section ξ ∈ C_c(X): one scalar per point.
struct SectionVector {
  MeasuredPtr space;
  std::vector<Scalar> entries;

  bool is_zero() const;
};

SectionVector make_section(MeasuredPtr space, std::vector<Scalar> entries);
SectionVector delta_section(MeasuredPtr space, int point);
bool section_equal(const SectionVector& a, const SectionVector& b);
// ⟨ξ,η⟩ = Σ_x conj(ξ(x))·η(x)·w(x), conjugate-linear in the first slot.
Scalar weighted_dot(const SectionVector& a, const SectionVector& b);

// An element h ∈ C_c(G): one scalar per arrow.
struct GroupoidFunction {
  GroupoidPtr groupoid;
  std::vector<Scalar> entries;

  bool is_zero() const;
};

GroupoidFunction make_groupoid_function(GroupoidPtr g, std::vector<Scalar> entries);
GroupoidFunction delta_function(GroupoidPtr g, int arrow);
bool function_equal(const GroupoidFunction& a, const GroupoidFunction& b);

// (h₁ ∗ h₂)(γ) = Σ_{γ′: r(γ′)=r(γ)} h₁(γ′)·h₂(γ′⁻¹γ)·haar(γ′); left_action
// makes C_c(X) a module over this algebra.
GroupoidFunction groupoid_convolve(const GroupoidFunction& h1, const GroupoidFunction& h2);

// (ξf)(y) = Σ_x ξ(x)·f[x,y]·α(x); requires ξ over the destination object of f.
SectionVector right_action(const SectionVector& xi, const Arrow& f);

// (hξ)(x) = Σ_{γ: r(γ)=anchor(x)} h(γ)·ξ(γ⁻¹x)·haar(γ).
SectionVector left_action(const GroupoidFunction& h, const SectionVector& xi);

// ⟨ξ,η⟩[x,y] = Σ_{γ: r(γ)=anchor(x)} conj(ξ(γ⁻¹x))·η(γ⁻¹y)·haar(γ).  ξ and η
// may live over different spaces of the same groupoid; the result is an arrow
// between those objects (both over X gives the algebra-valued product).
Arrow inner_space(const SectionVector& xi, const SectionVector& eta);

// ⟨⟨ξ,η⟩⟩(γ) = Σ_{x: anchor(x)=r(γ)} ξ(x)·conj(η(γ⁻¹x))·α(x).
GroupoidFunction inner_groupoid(const SectionVector& xi, const SectionVector& eta);

// Matrix of right_action in the point bases: entry (y,x) = f[x,y]·α(x), a map
// from sections over the column space to sections over the row space.
struct WeightedMatrix {
  MeasuredPtr rows;  // source object of the arrow
  MeasuredPtr cols;  // destination object of the arrow
  std::vector<std::vector<Scalar>> entries;  // entries[row][col]
};

WeightedMatrix rep_matrix(const Arrow& f);
WeightedMatrix multiply(const WeightedMatrix& a, const WeightedMatrix& b);
bool matrix_equal(const WeightedMatrix& a, const WeightedMatrix& b);
bool matrix_is_zero(const WeightedMatrix& a);

// Operator norm of rep_matrix between the weighted ℓ² spaces: the largest
// singular value of D_rows^{1/2}·M·D_cols^{-1/2}.
double reduced_norm(const Arrow& f);

// True iff f is self-adjoint and its weighted matrix is positive
// semidefinite (minimum eigenvalue ≥ −1e-9 after Hermitian symmetrization).
bool is_positive(const Arrow& f);

// Exact rank over the rationals of span{inner_space(δ_x, δ_y)} inside the
// orbit basis of (X*X)/G, paired with the orbit count; equality means the
// module is full.
std::pair<int, int> fullness_rank(const MeasuredPtr& alpha);

// True iff span{inner_groupoid(δ_x, δ_y)} is a two-sided convolution ideal
// of C_c(G).
bool ideal_check(const MeasuredPtr& alpha);

}  // namespace hgc
