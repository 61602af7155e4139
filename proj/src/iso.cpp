#include "quivoa/iso.hpp"

#include <algorithm>
#include <vector>

#include "quivoa/error.hpp"
#include "quivoa/mispace.hpp"

namespace quivoa {

namespace {

IsoWitness refuted(std::string why) {
  IsoWitness w;
  w.verdict = false;
  w.refutation = std::move(why);
  return w;
}

// Per-vertex fingerprint preserved by any isomorphism.
struct VertexSig {
  int loops;
  std::vector<int> out;  // sorted multiplicities to other vertices
  std::vector<int> in;

  bool operator==(const VertexSig& o) const = default;
  bool operator<(const VertexSig& o) const {
    return std::tie(loops, out, in) < std::tie(o.loops, o.out, o.in);
  }
};

std::vector<VertexSig> directed_signatures(const DirectedMultigraph& q) {
  const int n = q.vertex_count();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const auto& e : q.edges()) ++mult[e.src][e.rng];
  std::vector<VertexSig> sigs(n);
  for (int v = 0; v < n; ++v) {
    sigs[v].loops = mult[v][v];
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      if (mult[v][w]) sigs[v].out.push_back(mult[v][w]);
      if (mult[w][v]) sigs[v].in.push_back(mult[w][v]);
    }
    std::sort(sigs[v].out.begin(), sigs[v].out.end());
    std::sort(sigs[v].in.begin(), sigs[v].in.end());
  }
  return sigs;
}

std::vector<VertexSig> undirected_signatures(const UndirectedMultigraph& s) {
  const int n = s.vertex_count();
  std::vector<VertexSig> sigs(n);
  for (int v = 0; v < n; ++v) {
    sigs[v].loops = s.multiplicity_of(v, v);
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      const int m = s.multiplicity_of(v, w);
      if (m) sigs[v].out.push_back(m);
    }
    std::sort(sigs[v].out.begin(), sigs[v].out.end());
  }
  return sigs;
}

// Vertices ordered most-constrained-first: rarest signature, ties by index.
std::vector<int> search_order(const std::vector<VertexSig>& sigs) {
  const int n = static_cast<int>(sigs.size());
  std::vector<int> rarity(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (sigs[v] == sigs[w]) ++rarity[v];
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return rarity[a] < rarity[b]; });
  return order;
}

template <typename Consistent>
bool backtrack(int depth, const std::vector<int>& order,
               const std::vector<VertexSig>& sig1, const std::vector<VertexSig>& sig2,
               std::vector<int>& mapping, std::vector<bool>& used,
               const Consistent& consistent) {
  const int n = static_cast<int>(order.size());
  if (depth == n) return true;
  const int v = order[depth];
  for (int w = 0; w < n; ++w) {
    if (used[w] || !(sig1[v] == sig2[w])) continue;
    bool ok = true;
    for (int d = 0; d < depth && ok; ++d)
      ok = consistent(v, w, order[d], mapping[order[d]]);
    if (!ok) continue;
    mapping[v] = w;
    used[w] = true;
    if (backtrack(depth + 1, order, sig1, sig2, mapping, used, consistent)) return true;
    used[w] = false;
    mapping[v] = -1;
  }
  return false;
}

bool same_multiset(std::vector<VertexSig> a, std::vector<VertexSig> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

IsoWitness digraph_isomorphic(const DirectedMultigraph& q1, const DirectedMultigraph& q2) {
  if (q1.vertex_count() > kMaxIsoVertices || q2.vertex_count() > kMaxIsoVertices)
    throw CapacityError("digraph_isomorphic: vertex count exceeds capacity guard");
  if (q1.vertex_count() != q2.vertex_count()) return refuted("vertex count");
  if (q1.edge_count() != q2.edge_count()) return refuted("edge count");
  if (loop_partition(q1).first.size() != loop_partition(q2).first.size())
    return refuted("loop count");

  const auto sig1 = directed_signatures(q1);
  const auto sig2 = directed_signatures(q2);
  if (!same_multiset(sig1, sig2)) return refuted("degree multiset");

  const int n = q1.vertex_count();
  std::vector<std::vector<int>> m1(n, std::vector<int>(n, 0)), m2 = m1;
  for (const auto& e : q1.edges()) ++m1[e.src][e.rng];
  for (const auto& e : q2.edges()) ++m2[e.src][e.rng];

  std::vector<int> mapping(n, -1);
  std::vector<bool> used(n, false);
  const auto consistent = [&](int v, int w, int u, int mu) {
    return m1[v][u] == m2[w][mu] && m1[u][v] == m2[mu][w];
  };
  if (!backtrack(0, search_order(sig1), sig1, sig2, mapping, used, consistent))
    return refuted("exhausted search");

  IsoWitness w;
  w.verdict = true;
  w.vertex_map.emplace();
  for (int v = 0; v < n; ++v)
    (*w.vertex_map)[q1.vertex_id(v)] = q2.vertex_id(mapping[v]);

  // Parallel classes matched in declared identifier order.
  w.edge_map.emplace();
  std::map<std::pair<int, int>, std::vector<int>> classes2;
  for (int e = 0; e < q2.edge_count(); ++e)
    classes2[{q2.edge(e).src, q2.edge(e).rng}].push_back(e);
  std::map<std::pair<int, int>, size_t> cursor;
  for (int e = 0; e < q1.edge_count(); ++e) {
    const std::pair<int, int> key{mapping[q1.edge(e).src], mapping[q1.edge(e).rng]};
    const int mate = classes2.at(key)[cursor[key]++];
    (*w.edge_map)[q1.edge(e).id] = q2.edge(mate).id;
  }
  return w;
}

IsoWitness udgraph_isomorphic(const UndirectedMultigraph& s1, const UndirectedMultigraph& s2) {
  if (s1.vertex_count() > kMaxIsoVertices || s2.vertex_count() > kMaxIsoVertices)
    throw CapacityError("udgraph_isomorphic: vertex count exceeds capacity guard");
  if (s1.vertex_count() != s2.vertex_count()) return refuted("vertex count");
  if (s1.total_edges() != s2.total_edges()) return refuted("edge count");

  int loops1 = 0, loops2 = 0;
  for (int v = 0; v < s1.vertex_count(); ++v) loops1 += s1.multiplicity_of(v, v);
  for (int v = 0; v < s2.vertex_count(); ++v) loops2 += s2.multiplicity_of(v, v);
  if (loops1 != loops2) return refuted("loop count");

  const auto sig1 = undirected_signatures(s1);
  const auto sig2 = undirected_signatures(s2);
  if (!same_multiset(sig1, sig2)) return refuted("degree multiset");

  const int n = s1.vertex_count();
  std::vector<int> mapping(n, -1);
  std::vector<bool> used(n, false);
  const auto consistent = [&](int v, int w, int u, int mu) {
    return s1.multiplicity_of(v, u) == s2.multiplicity_of(w, mu);
  };
  if (!backtrack(0, search_order(sig1), sig1, sig2, mapping, used, consistent))
    return refuted("exhausted search");

  IsoWitness w;
  w.verdict = true;
  w.vertex_map.emplace();
  for (int v = 0; v < n; ++v)
    (*w.vertex_map)[s1.vertex_ids()[v]] = s2.vertex_ids()[mapping[v]];
  return w;
}

IsoWitness oa_isomorphic(const DirectedMultigraph& q1, const DirectedMultigraph& q2) {
  return digraph_isomorphic(q1, q2);
}

IsoWitness gcm_isomorphic(const DirectedMultigraph& q1, const DirectedMultigraph& q2) {
  // Cheap spectral precheck when the subset sweep is affordable: the dim
  // multiset of the maximal ideal space is an isomorphism invariant.
  if (q1.vertex_count() <= 12 && q2.vertex_count() <= 12 &&
      q1.vertex_count() == q2.vertex_count()) {
    std::vector<int> d1, d2;
    for (const auto& c : build_mispace(q1).components) d1.push_back(c.dim);
    for (const auto& c : build_mispace(q2).components) d2.push_back(c.dim);
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return refuted("dim multiset");
  }
  return udgraph_isomorphic(shadow(q1), shadow(q2));
}

bool validate_digraph_witness(const DirectedMultigraph& q1, const DirectedMultigraph& q2,
                              const IsoWitness& w) {
  if (!w.verdict || !w.vertex_map || !w.edge_map) return false;
  if (w.vertex_map->size() != static_cast<size_t>(q1.vertex_count())) return false;
  if (w.edge_map->size() != static_cast<size_t>(q1.edge_count())) return false;
  if (q1.vertex_count() != q2.vertex_count() || q1.edge_count() != q2.edge_count())
    return false;

  std::vector<bool> vhit(q2.vertex_count(), false), ehit(q2.edge_count(), false);
  for (const auto& [a, b] : *w.vertex_map) {
    const int i = q1.vertex_index(a), j = q2.vertex_index(b);
    if (i < 0 || j < 0 || vhit[j]) return false;
    vhit[j] = true;
  }
  for (const auto& [a, b] : *w.edge_map) {
    const int i = q1.edge_index(a), j = q2.edge_index(b);
    if (i < 0 || j < 0 || ehit[j]) return false;
    ehit[j] = true;
    const auto& e1 = q1.edge(i);
    const auto& e2 = q2.edge(j);
    if (w.vertex_map->at(q1.vertex_id(e1.src)) != q2.vertex_id(e2.src)) return false;
    if (w.vertex_map->at(q1.vertex_id(e1.rng)) != q2.vertex_id(e2.rng)) return false;
  }
  return true;
}

bool validate_udgraph_witness(const UndirectedMultigraph& s1, const UndirectedMultigraph& s2,
                              const IsoWitness& w) {
  if (!w.verdict || !w.vertex_map) return false;
  if (s1.vertex_count() != s2.vertex_count()) return false;
  if (w.vertex_map->size() != static_cast<size_t>(s1.vertex_count())) return false;

  const int n = s1.vertex_count();
  std::vector<int> mapping(n, -1);
  std::vector<bool> hit(n, false);
  for (const auto& [a, b] : *w.vertex_map) {
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      if (s1.vertex_ids()[v] == a) i = v;
      if (s2.vertex_ids()[v] == b) j = v;
    }
    if (i < 0 || j < 0 || hit[j]) return false;
    mapping[i] = j;
    hit[j] = true;
  }
  for (int v = 0; v < n; ++v)
    for (int u = v; u < n; ++u)
      if (s1.multiplicity_of(v, u) != s2.multiplicity_of(mapping[v], mapping[u]))
        return false;
  return true;
}

}  // namespace quivoa
