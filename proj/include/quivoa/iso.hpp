#pragma once

#include <map>
#include <optional>
#include <string>

#include "quivoa/graph.hpp"

namespace quivoa {

inline constexpr int kMaxIsoVertices = 10;

// Bijection certificate or first-failing-invariant refutation.
struct IsoWitness {
  bool verdict = false;
  std::optional<std::map<std::string, std::string>> vertex_map;
  std::optional<std::map<std::string, std::string>> edge_map;  // directed only
  std::optional<std::string> refutation;
};

// Exact decision by invariant-pruned backtracking; guarded at |V| <= 10.
IsoWitness digraph_isomorphic(const DirectedMultigraph& q1, const DirectedMultigraph& q2);
IsoWitness udgraph_isomorphic(const UndirectedMultigraph& s1, const UndirectedMultigraph& s2);

// OA(Q1) ~ OA(Q2) as Banach algebras iff the directed
// graphs are isomorphic.
IsoWitness oa_isomorphic(const DirectedMultigraph& q1, const DirectedMultigraph& q2);

// GC*_m(Q1) ~ GC*_m(Q2) iff the shadows are isomorphic.
IsoWitness gcm_isomorphic(const DirectedMultigraph& q1, const DirectedMultigraph& q2);

// Re-verifies a returned mapping against both graphs, independently of the
// search that produced it.
bool validate_digraph_witness(const DirectedMultigraph& q1, const DirectedMultigraph& q2,
                              const IsoWitness& w);
bool validate_udgraph_witness(const UndirectedMultigraph& s1, const UndirectedMultigraph& s2,
                              const IsoWitness& w);

}  // namespace quivoa
