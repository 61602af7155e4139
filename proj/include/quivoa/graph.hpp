#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace quivoa {

// Vertex-subset sweeps are exponential; inputs above this are rejected.
inline constexpr int kMaxSubsetVertices = 24;

// Finite directed multigraph. Identifiers are opaque strings interned to
// dense indices; declared order is preserved for deterministic enumeration.
class DirectedMultigraph {
public:
  struct Edge {
    std::string id;
    int src;  // source vertex index
    int rng;  // range vertex index
  };

  // Validates uniqueness of identifiers and that endpoints are declared.
  static DirectedMultigraph make(std::vector<std::string> vertices,
                                 std::vector<std::tuple<std::string, std::string, std::string>>
                                     edges /* (id, source-id, range-id) */);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }
  const std::string& vertex_id(int i) const { return vertex_ids_[i]; }

  // -1 when absent.
  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;

  bool operator==(const DirectedMultigraph& o) const;
  bool operator!=(const DirectedMultigraph& o) const { return !(*this == o); }

private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::map<std::string, int> vertex_lookup_;
  std::map<std::string, int> edge_lookup_;
};

// Undirected multigraph: vertex list plus multiplicity on unordered pairs.
// Pairs are stored normalized (i <= j); {v,v} counts self-loops.
class UndirectedMultigraph {
public:
  UndirectedMultigraph() = default;
  UndirectedMultigraph(std::vector<std::string> vertices,
                       std::map<std::pair<int, int>, int> multiplicity);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::map<std::pair<int, int>, int>& multiplicity() const { return multiplicity_; }
  int multiplicity_of(int v, int w) const;
  int total_edges() const;

private:
  std::vector<std::string> vertex_ids_;
  std::map<std::pair<int, int>, int> multiplicity_;
};

// Q together with a reversed partner e~ for each edge e, and the pairing.
// Edges 0..n-1 are the base edges, n..2n-1 the reversed partners.
struct DoubledGraph {
  DirectedMultigraph base;
  DirectedMultigraph graph;
  std::vector<int> partner;  // self-inverse pairing on edge indices of `graph`

  bool is_base_edge(int e) const { return e < base.edge_count(); }
};

UndirectedMultigraph shadow(const DirectedMultigraph& q);

// E(S): edges with both endpoints in S. S given as vertex-index bitmask.
std::vector<int> internal_edges(const DirectedMultigraph& q, std::uint32_t subset_mask);
int n_of(const DirectedMultigraph& q, std::uint32_t subset_mask);

// (loop edges, non-loop edges), both in declared order.
std::pair<std::vector<int>, std::vector<int>> loop_partition(const DirectedMultigraph& q);

DoubledGraph double_graph(const DirectedMultigraph& q);

// Number of edges e with r(e) = v and s(e) = w (indices).
int directed_multiplicity(const DirectedMultigraph& q, int v, int w);

// Helper: bitmask with one bit per vertex id in `ids`; throws on unknown ids.
std::uint32_t subset_mask_of(const DirectedMultigraph& q, const std::vector<std::string>& ids);

}  // namespace quivoa
