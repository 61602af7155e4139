#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quivoa/algebra.hpp"
#include "quivoa/graph.hpp"

namespace quivoa {

struct BoundConfig {
  int character_grid = 16;   // torus points per coordinate
  int refinement_steps = 50; // coordinate-ascent passes
  int rep_trials = 64;
  std::vector<int> rep_dims = {2, 3, 4};
  std::uint64_t seed = 0;

  void validate() const;
};

// Certified interval: lower is the value of an actual representation, upper
// is the l1 bound, so lower <= universal norm <= upper.
struct NormBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::string lower_witness;
  std::string upper_witness;
};

// Bounds for the universal operator-algebra norm of x in Cw(Q). Lower bound
// from characters (torus grid + coordinate ascent per component), nest
// families with unimodular parameters, and random contractive reps.
NormBounds oa_norm_bounds(const DirectedMultigraph& q, const AlgebraElement& x,
                          const BoundConfig& cfg);

// Bounds for the Gelfand-Naimark seminorm on the doubled-graph algebra.
// Characters conjugate-extend over the involution; *-representations are
// sampled at the configured dimensions.
NormBounds gcm_norm_bounds(const DoubledGraph& d, const AlgebraElement& x,
                           const BoundConfig& cfg);

}  // namespace quivoa
