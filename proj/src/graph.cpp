#include "quivoa/graph.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include "quivoa/error.hpp"

namespace quivoa {

DirectedMultigraph DirectedMultigraph::make(
    std::vector<std::string> vertices,
    std::vector<std::tuple<std::string, std::string, std::string>> edges) {
  DirectedMultigraph g;
  for (auto& v : vertices) {
    if (!g.vertex_lookup_.emplace(v, g.vertex_count()).second)
      throw DomainError("duplicate vertex identifier: " + v);
    g.vertex_ids_.push_back(std::move(v));
  }
  for (auto& [id, src, rng] : edges) {
    if (g.vertex_lookup_.count(id))
      throw DomainError("edge identifier collides with vertex: " + id);
    if (!g.edge_lookup_.emplace(id, g.edge_count()).second)
      throw DomainError("duplicate edge identifier: " + id);
    const int si = g.vertex_index(src);
    const int ri = g.vertex_index(rng);
    if (si < 0) throw DomainError("unknown source vertex: " + src);
    if (ri < 0) throw DomainError("unknown range vertex: " + rng);
    g.edges_.push_back({std::move(id), si, ri});
  }
  return g;
}

int DirectedMultigraph::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  return it == vertex_lookup_.end() ? -1 : it->second;
}

int DirectedMultigraph::edge_index(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  return it == edge_lookup_.end() ? -1 : it->second;
}

bool DirectedMultigraph::operator==(const DirectedMultigraph& o) const {
  if (vertex_ids_ != o.vertex_ids_) return false;
  if (edges_.size() != o.edges_.size()) return false;
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id != o.edges_[i].id || edges_[i].src != o.edges_[i].src ||
        edges_[i].rng != o.edges_[i].rng)
      return false;
  }
  return true;
}

UndirectedMultigraph::UndirectedMultigraph(std::vector<std::string> vertices,
                                           std::map<std::pair<int, int>, int> multiplicity)
    : vertex_ids_(std::move(vertices)), multiplicity_(std::move(multiplicity)) {
  const int n = vertex_count();
  for (const auto& [pair, count] : multiplicity_) {
    if (pair.first < 0 || pair.second < pair.first || pair.second >= n)
      throw DomainError("multiplicity pair endpoints out of range");
    if (count <= 0) throw DomainError("multiplicities must be strictly positive");
  }
}

int UndirectedMultigraph::multiplicity_of(int v, int w) const {
  auto key = std::minmax(v, w);
  auto it = multiplicity_.find({key.first, key.second});
  return it == multiplicity_.end() ? 0 : it->second;
}

int UndirectedMultigraph::total_edges() const {
  int total = 0;
  for (const auto& [pair, count] : multiplicity_) total += count;
  return total;
}

UndirectedMultigraph shadow(const DirectedMultigraph& q) {
  std::map<std::pair<int, int>, int> mult;
  for (const auto& e : q.edges()) {
    auto key = std::minmax(e.src, e.rng);
    ++mult[{key.first, key.second}];
  }
  return UndirectedMultigraph(q.vertex_ids(), std::move(mult));
}

std::vector<int> internal_edges(const DirectedMultigraph& q, std::uint32_t subset_mask) {
  if (subset_mask == 0) throw DomainError("internal_edges: subset must be nonempty");
  if (q.vertex_count() > kMaxSubsetVertices)
    throw CapacityError("internal_edges: vertex count exceeds subset capacity");
  if (subset_mask >> q.vertex_count())
    throw DomainError("internal_edges: subset contains unknown vertices");
  std::vector<int> result;
  for (int i = 0; i < q.edge_count(); ++i) {
    const auto& e = q.edge(i);
    const std::uint32_t need = (1u << e.src) | (1u << e.rng);
    if ((subset_mask & need) == need) result.push_back(i);
  }
  return result;
}

int n_of(const DirectedMultigraph& q, std::uint32_t subset_mask) {
  return static_cast<int>(internal_edges(q, subset_mask).size());
}

std::pair<std::vector<int>, std::vector<int>> loop_partition(const DirectedMultigraph& q) {
  std::vector<int> loops, nonloops;
  for (int i = 0; i < q.edge_count(); ++i) {
    (q.edge(i).src == q.edge(i).rng ? loops : nonloops).push_back(i);
  }
  return {loops, nonloops};
}

DoubledGraph double_graph(const DirectedMultigraph& q) {
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  edges.reserve(2 * q.edge_count());
  for (const auto& e : q.edges())
    edges.emplace_back(e.id, q.vertex_id(e.src), q.vertex_id(e.rng));
  for (const auto& e : q.edges())
    edges.emplace_back(e.id + "~", q.vertex_id(e.rng), q.vertex_id(e.src));

  DoubledGraph d;
  d.base = q;
  d.graph = DirectedMultigraph::make(q.vertex_ids(), std::move(edges));
  const int n = q.edge_count();
  d.partner.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    d.partner[i] = n + i;
    d.partner[n + i] = i;
  }
  return d;
}

int directed_multiplicity(const DirectedMultigraph& q, int v, int w) {
  if (v < 0 || v >= q.vertex_count() || w < 0 || w >= q.vertex_count())
    throw DomainError("directed_multiplicity: vertex index out of range");
  int count = 0;
  for (const auto& e : q.edges())
    if (e.rng == v && e.src == w) ++count;
  return count;
}

std::uint32_t subset_mask_of(const DirectedMultigraph& q, const std::vector<std::string>& ids) {
  std::uint32_t mask = 0;
  for (const auto& id : ids) {
    const int i = q.vertex_index(id);
    if (i < 0) throw DomainError("unknown vertex: " + id);
    mask |= 1u << i;
  }
  return mask;
}

}  // namespace quivoa
