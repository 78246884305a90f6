#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "category.hpp"
#include "groupoid.hpp"
#include "gspace.hpp"
#include "representations.hpp"

namespace hgc {

// Deterministic generator: mt19937_64 with modulo draws, so transcripts are
// identical across platforms (uniform_int_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t raw() { return eng_(); }
  int below(int n);  // uniform in [0, n)
  bool chance(int percent);
  // Numerator drawn from [-5, 5], denominator from {1..4}.
  Rational rational();
  Rational positive_rational();  // numerator from [1, 5]
  Scalar scalar(bool allow_complex);

 private:
  std::mt19937_64 eng_;
};

// A groupoid together with several measured spaces over it, enough to compose
// arrows through distinct objects.
struct RandomContext {
  GroupoidPtr groupoid;
  std::vector<MeasuredPtr> spaces;  // at least three entries

  const MeasuredPtr& space(Rng& rng) const;
};

// Draws from a fixed catalog of groups (cyclic up to 6, Z/2, S3), pair
// groupoids, and transformation groupoids, with randomized source-determined
// Haar weights; spaces are coset quotients and the groupoid itself, with
// randomized orbit-constant weights.
RandomContext random_context(Rng& rng);

// Fresh invariant weights: a random positive rational per G-orbit.
MeasuredPtr reweight_randomly(Rng& rng, const MeasuredPtr& space);

Arrow random_arrow(Rng& rng, OrbitPtr orbits, bool allow_complex = true);
SectionVector random_section(Rng& rng, MeasuredPtr space, bool allow_complex = true);
GroupoidFunction random_function(Rng& rng, GroupoidPtr g, bool allow_complex = true);

}  // namespace hgc
