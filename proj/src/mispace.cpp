#include "quivoa/mispace.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "quivoa/error.hpp"

namespace quivoa {

MaxIdealDescriptor build_mispace(const DirectedMultigraph& q) {
  const int n = q.vertex_count();
  if (n < 1) throw DomainError("build_mispace: graph has no vertices");
  if (n > kMaxSubsetVertices)
    throw CapacityError("build_mispace: vertex count exceeds capacity guard");

  std::vector<std::uint32_t> edge_need;
  edge_need.reserve(q.edge_count());
  for (const auto& e : q.edges())
    edge_need.push_back((1u << e.src) | (1u << e.rng));

  MaxIdealDescriptor d;
  d.vertex_count = n;
  d.components.reserve((1u << n) - 1);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int dim = 0;
    for (const std::uint32_t need : edge_need)
      if ((s & need) == need) ++dim;
    d.components.push_back({s, dim, std::popcount(s)});
  }
  return d;
}

MaxIdealDescriptor mispace_of_gcm(const DirectedMultigraph& q) {
  return build_mispace(q);
}

Character Character::make(const DirectedMultigraph& q, std::uint32_t subset,
                          std::map<int, std::complex<double>> lambda) {
  if (subset == 0 || (subset >> q.vertex_count()))
    throw DomainError("character subset must be a nonempty set of declared vertices");
  const std::vector<int> internal = internal_edges(q, subset);
  for (const auto& [e, v] : lambda) {
    if (std::find(internal.begin(), internal.end(), e) == internal.end())
      throw DomainError("character assigns a value to an edge outside E(S)");
    if (std::abs(v) > 1.0 + 1e-12)
      throw DomainError("character edge value exceeds the closed unit disc");
  }
  return Character{&q, subset, std::move(lambda)};
}

std::complex<double> char_eval(const Character& c, const AlgebraElement& x) {
  const DirectedMultigraph& q = *c.graph;
  const DoubledGraph* d = x.doubled();
  if (d) {
    if (d->base != q) throw DomainError("char_eval: element over a different graph");
  } else if (x.graph() != q) {
    throw DomainError("char_eval: element over a different graph");
  }

  const int nv = q.vertex_count();
  const int ne = q.edge_count();
  auto letter_value = [&](std::int32_t code) -> std::complex<double> {
    if (code < nv) return (c.subset >> code) & 1u ? 1.0 : 0.0;
    int e = code - nv;
    bool conjugated = false;
    if (e >= ne) {  // reversed partner in the doubled graph
      e = d->partner[e] ;
      conjugated = true;
    }
    auto it = c.lambda.find(e);
    if (it == c.lambda.end()) return 0.0;
    return conjugated ? std::conj(it->second) : it->second;
  };

  std::complex<double> total = 0.0;
  for (const auto& [w, coeff] : x.terms()) {
    std::complex<double> prod = 1.0;
    for (const std::int32_t code : w) prod *= letter_value(code);
    total += coeff.to_complex() * prod;
  }
  return total;
}

namespace {

InvariantReport invariants_from_dims(const std::vector<int>& dims) {
  const long long count = static_cast<long long>(dims.size());
  if (count < 1) throw DomainError("invariants: descriptor has no components");
  const unsigned long long np1 = static_cast<unsigned long long>(count) + 1;
  if ((np1 & (np1 - 1)) != 0)
    throw DomainError("invariants: component count + 1 is not a power of two");
  const int n = std::bit_width(np1) - 1;
  const int edges = *std::max_element(dims.begin(), dims.end());
  const long long total = std::accumulate(dims.begin(), dims.end(), 0LL);

  int alpha, beta;
  if (n == 1) {
    alpha = edges;
    beta = 0;
    if (total != edges) throw DomainError("invariants: inconsistent single-vertex descriptor");
  } else {
    // alpha*2^(n-1) + beta*2^(n-2) = total with alpha + beta = edges.
    const long long quarter = 1LL << (n - 2);
    if (total % quarter != 0)
      throw DomainError("invariants: dimension total not divisible by 2^(|V|-2)");
    const long long b = 2LL * edges - total / quarter;
    if (b < 0 || b > edges)
      throw DomainError("invariants: loop/non-loop split out of range");
    beta = static_cast<int>(b);
    alpha = edges - beta;
  }
  return InvariantReport{count, n, edges, alpha, beta, total, n};
}

}  // namespace

InvariantReport invariants(const MaxIdealDescriptor& d) {
  std::vector<int> dims;
  dims.reserve(d.components.size());
  for (const auto& c : d.components) dims.push_back(c.dim);
  return invariants_from_dims(dims);
}

InvariantReport invariants(const BlindedDescriptor& b) {
  std::vector<int> dims;
  dims.reserve(b.entries.size());
  for (const auto& e : b.entries) dims.push_back(e.dim);
  return invariants_from_dims(dims);
}

BlindedDescriptor blind(const MaxIdealDescriptor& d, std::uint64_t seed) {
  const size_t n = d.components.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  BlindedDescriptor b;
  b.entries.reserve(n);
  for (size_t i = 0; i < n; ++i)
    b.entries.push_back({static_cast<int>(i), d.components[order[i]].dim});
  b.incidence.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      b.incidence[i][j] =
          (d.components[order[i]].subset & d.components[order[j]].subset) != 0;
  return b;
}

std::map<int, int> degrees_of(const BlindedDescriptor& b) {
  const size_t n = b.entries.size();
  if (n == 0) throw DomainError("degrees_of: empty descriptor");

  // Degree-1 entries have inclusion-minimal incidence neighborhoods.
  std::vector<size_t> degree_one;
  for (size_t i = 0; i < n; ++i) {
    bool minimal = true;
    for (size_t j = 0; j < n && minimal; ++j) {
      if (j == i) continue;
      bool subset = true, strict = false;
      for (size_t k = 0; k < n; ++k) {
        if (b.incidence[j][k] && !b.incidence[i][k]) subset = false;
        if (b.incidence[i][k] && !b.incidence[j][k]) strict = true;
      }
      if (subset && strict) minimal = false;
    }
    if (minimal) degree_one.push_back(i);
  }

  const unsigned long long np1 = static_cast<unsigned long long>(n) + 1;
  if ((np1 & (np1 - 1)) != 0 ||
      degree_one.size() != static_cast<size_t>(std::bit_width(np1) - 1))
    throw DomainError("degrees_of: degree-1 count does not match log2(count+1)");

  std::map<int, int> degrees;
  for (size_t i = 0; i < n; ++i) {
    int deg = 0;
    for (const size_t d1 : degree_one)
      if (b.incidence[i][d1]) ++deg;
    degrees[b.entries[i].id] = deg;
  }
  return degrees;
}

UndirectedMultigraph recover_shadow(const BlindedDescriptor& b) {
  const size_t n = b.entries.size();
  const std::map<int, int> degrees = degrees_of(b);

  std::vector<size_t> d1;  // positions of degree-1 entries
  for (size_t i = 0; i < n; ++i)
    if (degrees.at(b.entries[i].id) == 1) d1.push_back(i);

  std::vector<std::string> vertex_ids;
  vertex_ids.reserve(d1.size());
  for (const size_t i : d1) vertex_ids.push_back("c" + std::to_string(b.entries[i].id));

  std::map<std::pair<int, int>, int> mult;
  for (size_t a = 0; a < d1.size(); ++a) {
    const int loops = b.entries[d1[a]].dim;
    if (loops > 0) mult[{static_cast<int>(a), static_cast<int>(a)}] = loops;
  }
  for (size_t a = 0; a < d1.size(); ++a) {
    for (size_t c = a + 1; c < d1.size(); ++c) {
      // The unique degree-2 entry incident to exactly the degree-1 pair.
      int found = -1;
      for (size_t x = 0; x < n; ++x) {
        if (degrees.at(b.entries[x].id) != 2) continue;
        if (b.incidence[x][d1[a]] && b.incidence[x][d1[c]]) {
          if (found >= 0)
            throw DomainError("recover_shadow: non-unique pair component");
          found = static_cast<int>(x);
        }
      }
      if (found < 0) throw DomainError("recover_shadow: missing pair component");
      const int m = b.entries[found].dim - b.entries[d1[a]].dim - b.entries[d1[c]].dim;
      if (m < 0) throw DomainError("recover_shadow: negative multiplicity");
      if (m > 0) mult[{static_cast<int>(a), static_cast<int>(c)}] = m;
    }
  }
  return UndirectedMultigraph(std::move(vertex_ids), std::move(mult));
}

}  // namespace quivoa
