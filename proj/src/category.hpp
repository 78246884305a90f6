#pragma once

#include <map>
#include <optional>

#include "gspace.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace hgc {

// An arrow of the convolution category: a finitely supported function on the
// orbits of (X*Y)/G, from the object (Y, β) to the object (X, α).  The orbit
// space carries both measured spaces; only nonzero values are stored, keyed
// by orbit index.
struct Arrow {
  OrbitPtr orbits;
  std::map<int, Scalar> values;

  const MeasuredGSpace& dst() const { return orbits->left(); }
  const MeasuredGSpace& src() const { return orbits->right(); }
  bool is_zero() const { return values.empty(); }
};

// Drops zero entries and checks orbit indices are in range.
Arrow make_arrow(OrbitPtr orbits, std::map<int, Scalar> values);
Arrow delta(OrbitPtr orbits, int orbit);
Arrow zero_arrow(OrbitPtr orbits);

bool arrow_equal(const Arrow& f, const Arrow& g);

// Convolution against the middle weights: (f∗g)[x,z] = Σ_y f[x,y]·g[y,z]·β(y),
// the sum over the anchor fiber of x.  The middle objects must be the same
// measured space.
Arrow convolve(const Arrow& f, const Arrow& g);
// Same product evaluated into a caller-supplied orbit space for (dst f, src g);
// saves rebuilding the quotient in inner loops.
Arrow convolve_into(OrbitPtr out, const Arrow& f, const Arrow& g);
// Eq. evaluated at one (possibly non-canonical) pair; used to test that the
// convolution value is independent of the representative.
Scalar convolve_at_pair(const Arrow& f, const Arrow& g, int x, int z);

// f*[y,x] = conj(f[x,y]), reindexed along the swap (X*Y)/G → (Y*X)/G.
Arrow involute(const Arrow& f);

Arrow linear_combine(const Scalar& c1, const Arrow& f1, const Scalar& c2, const Arrow& f2);
Arrow scale_arrow(const Scalar& c, const Arrow& f);

// Σ_y f[x,y]·β(y); constant on G-orbits of x.
Scalar fiber_sum(const Arrow& f, int x);

// max over rows/columns of weighted absolute sums; exact while the values
// stay real, floating point once a genuinely complex value appears.
double i_norm(const Arrow& f);

// Searches for a two-sided unit of the algebra on (X*X)/G by solving the
// exact left-unit system over the indicator basis.
std::optional<Arrow> find_unit(const MeasuredPtr& alpha);

}  // namespace hgc
