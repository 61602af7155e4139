#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quivoa/algebra.hpp"
#include "quivoa/graph.hpp"

namespace quivoa {

// One connected component of M_{OA(Q)}: the closed polydisc of dimension
// n(S) indexed by a nonempty vertex subset S.
struct Component {
  std::uint32_t subset;  // vertex-index bitmask, nonzero
  int dim;               // n(S) = |E(S)|
  int degree;            // |S|
};

// The full component structure: one component per nonempty S, in subset-mask
// order, so |components| = 2^|V| - 1.
struct MaxIdealDescriptor {
  int vertex_count;
  std::vector<Component> components;
};

// Labels stripped: only dimensions and the intersection incidence relation
// survive a Banach-algebra isomorphism, so only those are carried.
struct BlindedDescriptor {
  struct Entry {
    int id;
    int dim;
  };
  std::vector<Entry> entries;
  std::vector<std::vector<bool>> incidence;  // symmetric, reflexive, by position
};

// Multiplicative linear functional: supported on the component of S, with a
// point of the closed polydisc assigned to the internal edges of S.
struct Character {
  const DirectedMultigraph* graph;
  std::uint32_t subset;
  std::map<int, std::complex<double>> lambda;  // edge index -> value, |.| <= 1

  static Character make(const DirectedMultigraph& q, std::uint32_t subset,
                        std::map<int, std::complex<double>> lambda);
};

struct InvariantReport {
  long long n_components;  // N_Q
  int vertex_count;
  int edge_count;
  int alpha;  // loop edges
  int beta;   // non-loop edges
  long long total_dim;
  int k0_rank;
};

MaxIdealDescriptor build_mispace(const DirectedMultigraph& q);

// Identical to build_mispace: M_A and M_{C*_m(A)} are homeomorphic.
MaxIdealDescriptor mispace_of_gcm(const DirectedMultigraph& q);

// Extends the letterwise assignment multiplicatively over words and linearly
// over terms. Accepts elements over the character's graph or its double
// (with lambda(e~) the conjugate of lambda(e)).
std::complex<double> char_eval(const Character& c, const AlgebraElement& x);

InvariantReport invariants(const MaxIdealDescriptor& d);
InvariantReport invariants(const BlindedDescriptor& b);

BlindedDescriptor blind(const MaxIdealDescriptor& d, std::uint64_t seed);

// Degree of each entry, recovered from the incidence relation alone:
// degree-1 entries are the ones with inclusion-minimal neighborhoods, and
// degree(X) counts the degree-1 entries incident to X. Keyed by entry id.
std::map<int, int> degrees_of(const BlindedDescriptor& b);

// Rebuild the undirected shadow graph from a blinded
// descriptor. Vertices are the degree-1 entries (named by id), loops from
// their dims, pair multiplicities from dim(X_{Y,Z}) - dim(Y) - dim(Z).
UndirectedMultigraph recover_shadow(const BlindedDescriptor& b);

}  // namespace quivoa
